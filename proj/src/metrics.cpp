#include "rwm/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <random>
#include <stdexcept>

#include "rwm/keyfile.hpp"
#include "rwm/pipeline.hpp"
#include "rwm/wm_core.hpp"

namespace rwm {

namespace {

void check_same_dims(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height) {
        throw std::invalid_argument("image dimensions differ");
    }
}

double psnr_from_sse(std::uint64_t sse, std::size_t pixels) {
    if (sse == 0) {
        return std::numeric_limits<double>::infinity();
    }
    const double mse = static_cast<double>(sse) / static_cast<double>(pixels);
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace

double psnr(const GrayImage& a, const GrayImage& b) {
    check_same_dims(a, b);
    const std::int64_t n = static_cast<std::int64_t>(a.data.size());
    std::uint64_t sse = 0;
#pragma omp parallel for reduction(+ : sse)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t d =
            static_cast<std::int64_t>(a.data[i]) - static_cast<std::int64_t>(b.data[i]);
        sse += static_cast<std::uint64_t>(d * d);
    }
    return psnr_from_sse(sse, a.data.size());
}

namespace serial {

double psnr(const GrayImage& a, const GrayImage& b) {
    check_same_dims(a, b);
    std::uint64_t sse = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const std::int64_t d =
            static_cast<std::int64_t>(a.data[i]) - static_cast<std::int64_t>(b.data[i]);
        sse += static_cast<std::uint64_t>(d * d);
    }
    return psnr_from_sse(sse, a.data.size());
}

}  // namespace serial

double capacity_bpp(std::uint64_t payload_bits, int width, int height) {
    const std::uint64_t area =
        static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
    if (width <= 0 || height <= 0 || area == 0) {
        throw std::invalid_argument("capacity undefined for zero-area image");
    }
    return static_cast<double>(payload_bits) / static_cast<double>(area);
}

std::vector<std::uint8_t> random_bits(std::uint64_t count, std::uint64_t seed) {
    std::vector<std::uint8_t> bits(count);
    std::mt19937_64 rng(seed);
    std::uint64_t word = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i % 64 == 0) word = rng();
        bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1);
    }
    return bits;
}

std::vector<SweepRow> sweep(const GrayImage& cover,
                            const std::vector<double>& bpp_list,
                            std::uint64_t seed) {
    const std::uint64_t area = static_cast<std::uint64_t>(cover.width) *
                               static_cast<std::uint64_t>(cover.height);
    const std::uint64_t cap = max_capacity_bits(cover.width, cover.height);
    for (const double bpp : bpp_list) {
        if (!(bpp >= 0.0)) {
            throw std::invalid_argument("bpp must be non-negative");
        }
        if (bpp > 1.5) {
            throw capacity_error(
                static_cast<std::uint64_t>(bpp * static_cast<double>(area)), cap);
        }
    }

    std::vector<SweepRow> rows(bpp_list.size());
    std::exception_ptr first_error = nullptr;
    const std::int64_t n = static_cast<std::int64_t>(bpp_list.size());

    // Points are independent pipelines; rows keep bpp_list order.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            const std::uint64_t payload_bits = static_cast<std::uint64_t>(
                bpp_list[i] * static_cast<double>(area));
            const std::vector<std::uint8_t> bits = random_bits(payload_bits, seed);

            EmbedOutput em =
                embed_bits(cover, bits, static_cast<int>(payload_bits), 1);
            ExtractOutput ex = extract_image(em.watermarked, em.side);
            if (ex.recovered != cover || ex.logo.data != bits) {
                throw std::runtime_error("round trip failed at bpp " +
                                         std::to_string(bpp_list[i]));
            }

            SweepRow row;
            row.bpp = capacity_bpp(payload_bits, cover.width, cover.height);
            row.psnr_db = psnr(cover, em.watermarked);
            row.payload_bits = payload_bits;
            row.ledger_count = em.side.ledger.size();
            row.key_bytes = encode_key(em.side).size();
            row.round_trip_ok = true;
            rows[i] = row;
        } catch (...) {
#pragma omp critical
            {
                if (!first_error) first_error = std::current_exception();
            }
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return rows;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    std::string out = "bpp,psnr_db,payload_bits,ledger_count,key_bytes\n";
    char buf[160];
    for (const SweepRow& row : rows) {
        if (std::isinf(row.psnr_db)) {
            std::snprintf(buf, sizeof(buf), "%.2f,inf,%llu,%llu,%llu\n", row.bpp,
                          static_cast<unsigned long long>(row.payload_bits),
                          static_cast<unsigned long long>(row.ledger_count),
                          static_cast<unsigned long long>(row.key_bytes));
        } else {
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f,%llu,%llu,%llu\n", row.bpp,
                          row.psnr_db,
                          static_cast<unsigned long long>(row.payload_bits),
                          static_cast<unsigned long long>(row.ledger_count),
                          static_cast<unsigned long long>(row.key_bytes));
        }
        out += buf;
    }
    return out;
}

}  // namespace rwm
