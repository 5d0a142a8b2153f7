#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "rwm/keyfile.hpp"
#include "rwm/metrics.hpp"
#include "rwm/pipeline.hpp"
#include "rwm/pnm.hpp"

namespace fs = std::filesystem;

namespace {

std::string format_psnr(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void write_text_atomic(const fs::path& path, const std::string& text) {
    rwm::write_file_atomic(
        path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                        text.size()));
}

int run_embed(const std::string& cover_path, const std::string& logo_path,
              const std::string& out_path, const std::string& key_path) {
    const rwm::GrayImage cover = rwm::load_pgm(cover_path);
    const rwm::BitImage logo = rwm::load_pbm(logo_path);

    rwm::EmbedOutput out = rwm::embed_image(cover, logo);
    rwm::save_pgm(out_path, out.watermarked);
    rwm::write_file_atomic(key_path, rwm::encode_key(out.side));

    const double bpp =
        rwm::capacity_bpp(out.side.payload_len, cover.width, cover.height);
    std::printf("bpp=%.4f psnr=%s ledger=%zu\n", bpp,
                format_psnr(rwm::psnr(cover, out.watermarked)).c_str(),
                out.side.ledger.size());
    return 0;
}

int run_extract(const std::string& image_path, const std::string& key_path,
                const std::string& out_cover, const std::string& out_logo) {
    const rwm::GrayImage watermarked = rwm::load_pgm(image_path);
    const rwm::SideInfo side = rwm::decode_key(rwm::read_file(key_path));

    rwm::ExtractOutput out = rwm::extract_image(watermarked, side);
    rwm::save_pgm(out_cover, out.recovered);
    rwm::save_pbm(out_logo, out.logo);
    return 0;
}

int run_verify(const std::string& cover_path, const std::string& logo_path) {
    const rwm::GrayImage cover = rwm::load_pgm(cover_path);
    const rwm::BitImage logo = rwm::load_pbm(logo_path);

    rwm::EmbedOutput em = rwm::embed_image(cover, logo);
    // Round-trip through the key codec as well, so verify covers the
    // exact bytes a reader would see.
    const rwm::SideInfo side = rwm::decode_key(rwm::encode_key(em.side));
    rwm::ExtractOutput ex = rwm::extract_image(em.watermarked, side);

    for (int r = 0; r < cover.height; ++r) {
        for (int c = 0; c < cover.width; ++c) {
            if (ex.recovered.at(r, c) != cover.at(r, c)) {
                std::printf("verify=fail first_diff=cover(%d,%d)\n", r, c);
                return 1;
            }
        }
    }
    for (int r = 0; r < logo.height; ++r) {
        for (int c = 0; c < logo.width; ++c) {
            if (ex.logo.at(r, c) != logo.at(r, c)) {
                std::printf("verify=fail first_diff=logo(%d,%d)\n", r, c);
                return 1;
            }
        }
    }
    std::printf("verify=ok bpp=%.4f psnr=%s ledger=%zu\n",
                rwm::capacity_bpp(em.side.payload_len, cover.width, cover.height),
                format_psnr(rwm::psnr(cover, em.watermarked)).c_str(),
                em.side.ledger.size());
    return 0;
}

int run_bench(const std::string& cover_path, const std::string& dir_path,
              const std::vector<double>& bpp_list, std::uint64_t seed,
              const std::string& out_path) {
    if (cover_path.empty() == dir_path.empty()) {
        throw std::runtime_error("bench needs exactly one of --cover or --dir");
    }

    if (!cover_path.empty()) {
        const rwm::GrayImage cover = rwm::load_pgm(cover_path);
        const auto rows = rwm::sweep(cover, bpp_list, seed);
        write_text_atomic(out_path, rwm::emit_csv(rows));
        return 0;
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir_path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw std::runtime_error("no .pgm files in " + dir_path);
    }

    std::string csv = "image,bpp,psnr_db,payload_bits,ledger_count,key_bytes\n";
    std::vector<std::vector<rwm::SweepRow>> all;
    all.reserve(files.size());
    for (const fs::path& f : files) {
        const rwm::GrayImage cover = rwm::load_pgm(f);
        all.push_back(rwm::sweep(cover, bpp_list, seed));
        char buf[192];
        for (const rwm::SweepRow& row : all.back()) {
            std::snprintf(buf, sizeof(buf), "%s,%.2f,%s,%llu,%llu,%llu\n",
                          f.filename().string().c_str(), row.bpp,
                          format_psnr(row.psnr_db).c_str(),
                          static_cast<unsigned long long>(row.payload_bits),
                          static_cast<unsigned long long>(row.ledger_count),
                          static_cast<unsigned long long>(row.key_bytes));
            csv += buf;
        }
    }

    // Per-point averages across images, Table-style.
    for (std::size_t j = 0; j < bpp_list.size(); ++j) {
        double bpp_sum = 0.0;
        double psnr_sum = 0.0;
        double payload_sum = 0.0;
        double ledger_sum = 0.0;
        double key_sum = 0.0;
        for (const auto& rows : all) {
            bpp_sum += rows[j].bpp;
            psnr_sum += rows[j].psnr_db;
            payload_sum += static_cast<double>(rows[j].payload_bits);
            ledger_sum += static_cast<double>(rows[j].ledger_count);
            key_sum += static_cast<double>(rows[j].key_bytes);
        }
        const double n = static_cast<double>(all.size());
        char buf[192];
        std::snprintf(buf, sizeof(buf), "avg,%.2f,%s,%llu,%llu,%llu\n",
                      bpp_sum / n, format_psnr(psnr_sum / n).c_str(),
                      static_cast<unsigned long long>(std::llround(payload_sum / n)),
                      static_cast<unsigned long long>(std::llround(ledger_sum / n)),
                      static_cast<unsigned long long>(std::llround(key_sum / n)));
        csv += buf;
    }

    write_text_atomic(out_path, csv);
    return 0;
}

std::vector<double> parse_bpp_list(const std::string& arg) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < arg.size()) {
        std::size_t comma = arg.find(',', pos);
        if (comma == std::string::npos) comma = arg.size();
        const std::string tok = arg.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::runtime_error("bad --bpp entry: '" + tok + "'");
        }
        pos = comma + 1;
    }
    if (out.empty()) {
        throw std::runtime_error("--bpp list is empty");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversible integer-wavelet image watermarking"};
    app.require_subcommand(1);

    std::string cover_path, logo_path, out_path, key_path;
    std::string image_path, out_cover, out_logo;
    std::string dir_path, bpp_arg, csv_path;
    std::uint64_t seed = 0;

    CLI::App* embed = app.add_subcommand("embed", "Embed a logo into a cover image");
    embed->add_option("--cover", cover_path, "cover image (PGM P5)")->required();
    embed->add_option("--logo", logo_path, "watermark logo (PBM P4)")->required();
    embed->add_option("--out", out_path, "watermarked image output (PGM)")->required();
    embed->add_option("--key", key_path, "key file output")->required();

    CLI::App* extract = app.add_subcommand("extract", "Recover cover and logo");
    extract->add_option("--image", image_path, "watermarked image (PGM)")->required();
    extract->add_option("--key", key_path, "key file")->required();
    extract->add_option("--out-cover", out_cover, "recovered cover output (PGM)")->required();
    extract->add_option("--out-logo", out_logo, "extracted logo output (PBM)")->required();

    CLI::App* verify = app.add_subcommand("verify", "In-memory embed/extract self-test");
    verify->add_option("--cover", cover_path, "cover image (PGM)")->required();
    verify->add_option("--logo", logo_path, "watermark logo (PBM)")->required();

    CLI::App* bench = app.add_subcommand("bench", "Capacity-distortion sweep");
    bench->add_option("--cover", cover_path, "single cover image (PGM)");
    bench->add_option("--dir", dir_path, "directory of .pgm covers");
    bench->add_option("--bpp", bpp_arg, "comma-separated bpp list, each <= 1.5")->required();
    bench->add_option("--seed", seed, "payload generator seed")->required();
    bench->add_option("--out", csv_path, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (embed->parsed()) {
            return run_embed(cover_path, logo_path, out_path, key_path);
        }
        if (extract->parsed()) {
            return run_extract(image_path, key_path, out_cover, out_logo);
        }
        if (verify->parsed()) {
            return run_verify(cover_path, logo_path);
        }
        return run_bench(cover_path, dir_path, parse_bpp_list(bpp_arg), seed,
                         csv_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
