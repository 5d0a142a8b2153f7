#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rwm/image.hpp"

namespace rwm {

// 10*log10(255^2 / MSE); +infinity for identical images. The squared
// error is accumulated in 64-bit integers, so the parallel reduction is
// exact and bit-identical to the serial reference.
double psnr(const GrayImage& a, const GrayImage& b);

namespace serial {
double psnr(const GrayImage& a, const GrayImage& b);
}

// payload_bits / (width * height). Throws on zero-area images.
double capacity_bpp(std::uint64_t payload_bits, int width, int height);

struct SweepRow {
    double bpp = 0.0;        // actual ratio payload_bits / pixel count
    double psnr_db = 0.0;    // +infinity when the images are identical
    std::uint64_t payload_bits = 0;
    std::uint64_t ledger_count = 0;
    std::uint64_t key_bytes = 0;
    bool round_trip_ok = false;

    bool operator==(const SweepRow&) const = default;
};

// Capacity-distortion sweep. For each requested bpp a pseudorandom
// payload of floor(bpp * area) bits is drawn from the seed (the same
// seed every point, so longer payloads extend shorter ones), embedded,
// and the full round trip is re-verified before the row is recorded; a
// failed round trip throws instead of producing a row. Points run in
// parallel; the result order follows bpp_list. Deterministic given
// (cover, bpp_list, seed).
std::vector<SweepRow> sweep(const GrayImage& cover,
                            const std::vector<double>& bpp_list,
                            std::uint64_t seed);

// Header "bpp,psnr_db,payload_bits,ledger_count,key_bytes"; bpp and
// psnr with fixed two decimals, "inf" for infinite PSNR.
std::string emit_csv(const std::vector<SweepRow>& rows);

// Deterministic payload generator used by sweep (exposed so callers can
// reproduce the embedded bits): successive bits are drawn LSB-first
// from std::mt19937_64 output words.
std::vector<std::uint8_t> random_bits(std::uint64_t count, std::uint64_t seed);

}  // namespace rwm
