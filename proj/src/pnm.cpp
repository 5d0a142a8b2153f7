#include "rwm/pnm.hpp"

#include <fstream>
#include <limits>

namespace rwm {

namespace {

constexpr int kMaxDim = 1 << 20;

bool is_pnm_space(std::uint8_t b) {
    return b == ' ' || b == '\t' || b == '\n' || b == '\r' || b == '\v' ||
           b == '\f';
}

// Header cursor: skips whitespace and '#' comments between tokens.
struct Cursor {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    void skip_separators() {
        while (pos < bytes.size()) {
            if (is_pnm_space(bytes[pos])) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    int read_int(const char* what) {
        skip_separators();
        if (pos >= bytes.size()) {
            throw pnm_error(PnmErrorKind::truncated,
                            std::string("header ends before ") + what);
        }
        if (bytes[pos] < '0' || bytes[pos] > '9') {
            throw pnm_error(PnmErrorKind::bad_header,
                            std::string("expected number for ") + what);
        }
        long v = 0;
        while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            v = v * 10 + (bytes[pos] - '0');
            if (v > kMaxDim * 16L) {
                throw pnm_error(PnmErrorKind::bad_header,
                                std::string(what) + " value out of range");
            }
            ++pos;
        }
        return static_cast<int>(v);
    }

    // Exactly one whitespace byte separates the header from the raster.
    void expect_raster_separator() {
        if (pos >= bytes.size() || !is_pnm_space(bytes[pos])) {
            throw pnm_error(PnmErrorKind::bad_header,
                            "missing whitespace before raster data");
        }
        ++pos;
    }
};

void check_magic(Cursor& cur, char second) {
    if (cur.bytes.size() < 2) {
        throw pnm_error(PnmErrorKind::bad_magic, "stream too short for magic");
    }
    if (cur.bytes[0] != 'P' || cur.bytes[1] != second) {
        throw pnm_error(PnmErrorKind::bad_magic,
                        std::string("bad magic, expected P") + second);
    }
    cur.pos = 2;
}

int read_dim(Cursor& cur, const char* what, bool allow_zero = false) {
    const int v = cur.read_int(what);
    if (v < (allow_zero ? 0 : 1) || v > kMaxDim) {
        throw pnm_error(PnmErrorKind::bad_header,
                        std::string(what) + " out of supported range");
    }
    return v;
}

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    Cursor cur{bytes};
    check_magic(cur, '5');
    const int width = read_dim(cur, "width");
    const int height = read_dim(cur, "height");
    const int maxval = cur.read_int("maxval");
    if (maxval != 255) {
        throw pnm_error(PnmErrorKind::bad_maxval,
                        "unsupported maxval " + std::to_string(maxval) +
                            ", only 255 is supported");
    }
    cur.expect_raster_separator();

    GrayImage img(width, height);
    if (bytes.size() - cur.pos < img.data.size()) {
        throw pnm_error(PnmErrorKind::truncated, "pixel data truncated");
    }
    std::copy_n(bytes.begin() + cur.pos, img.data.size(), img.data.begin());
    return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    const std::string header = "P5\n" + std::to_string(img.width) + " " +
                               std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

BitImage read_pbm(std::span<const std::uint8_t> bytes) {
    Cursor cur{bytes};
    check_magic(cur, '4');
    // Zero-area logos are allowed (an empty watermark is a valid payload).
    const int width = read_dim(cur, "width", /*allow_zero=*/true);
    const int height = read_dim(cur, "height", /*allow_zero=*/true);
    cur.expect_raster_separator();

    const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
    if (bytes.size() - cur.pos < row_bytes * height) {
        throw pnm_error(PnmErrorKind::truncated, "bit data truncated");
    }

    BitImage img(width, height);
    for (int r = 0; r < height; ++r) {
        const std::uint8_t* row = bytes.data() + cur.pos + r * row_bytes;
        for (int c = 0; c < width; ++c) {
            img.at(r, c) = (row[c / 8] >> (7 - c % 8)) & 1;
        }
    }
    return img;
}

std::vector<std::uint8_t> write_pbm(const BitImage& img) {
    const std::string header =
        "P4\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());

    const std::size_t row_bytes = (static_cast<std::size_t>(img.width) + 7) / 8;
    for (int r = 0; r < img.height; ++r) {
        std::vector<std::uint8_t> row(row_bytes, 0);
        for (int c = 0; c < img.width; ++c) {
            if (img.at(r, c)) {
                row[c / 8] |= static_cast<std::uint8_t>(0x80u >> (c % 8));
            }
        }
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    if (f.bad()) {
        throw std::runtime_error("error reading file: " + path.string());
    }
    return bytes;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open file for writing: " +
                                     tmp.string());
        }
        f.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
        f.flush();
        if (!f) {
            throw std::runtime_error("error writing file: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

GrayImage load_pgm(const std::filesystem::path& path) {
    return read_pgm(read_file(path));
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img) {
    write_file_atomic(path, write_pgm(img));
}

BitImage load_pbm(const std::filesystem::path& path) {
    return read_pbm(read_file(path));
}

void save_pbm(const std::filesystem::path& path, const BitImage& img) {
    write_file_atomic(path, write_pbm(img));
}

}  // namespace rwm
