#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rwm/image.hpp"
#include "rwm/wm_core.hpp"

namespace rwm {

// One clamped pixel: its location and the signed pre-clamp value.
struct LedgerRecord {
    int row;
    int col;
    std::int16_t value;  // < 0 or > 255

    bool operator==(const LedgerRecord&) const = default;
};

using OverflowLedger = std::vector<LedgerRecord>;

// Everything the extractor needs besides the watermarked image.
struct SideInfo {
    std::vector<std::uint8_t> tracker;  // one bit per payload bit, plan order
    OverflowLedger ledger;
    std::uint64_t payload_len = 0;
    int logo_width = 0;
    int logo_height = 0;
    int image_width = 0;
    int image_height = 0;

    bool operator==(const SideInfo&) const = default;
};

struct EmbedOutput {
    GrayImage watermarked;
    SideInfo side;
};

struct ExtractOutput {
    GrayImage recovered;
    BitImage logo;
};

// Values in [0, 255] pass through; anything outside is written as 0 or
// 255 and recorded with its pre-clamp value, in row-major order.
std::pair<GrayImage, OverflowLedger> clamp_and_ledger(const IntPlane& plane);

// Forward transform, two-iteration embedding over the allocation plan,
// inverse transform, clamp with ledger. The logo is flattened row-major;
// stored bit values are used directly (PBM 1 = black, no inversion).
EmbedOutput embed_image(const GrayImage& cover, const BitImage& logo);

// Same pipeline for a raw bit sequence with explicit logo dimensions
// (bits.size() must equal logo_width * logo_height).
EmbedOutput embed_bits(const GrayImage& cover,
                       std::span<const std::uint8_t> bits,
                       int logo_width, int logo_height);

// Ledger restore, forward transform, reverse-order extraction, inverse
// transform. Bit-exact inverse of embed_image for side info produced on
// this image.
ExtractOutput extract_image(const GrayImage& watermarked, const SideInfo& side);

}  // namespace rwm
