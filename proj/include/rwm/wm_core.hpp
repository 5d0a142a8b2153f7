#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rwm/iwt.hpp"

namespace rwm {

class capacity_error : public std::runtime_error {
public:
    capacity_error(std::uint64_t requested, std::uint64_t max)
        : std::runtime_error("payload of " + std::to_string(requested) +
                             " bits exceeds maximum capacity of " +
                             std::to_string(max) + " bits"),
          requested_bits(requested),
          max_bits(max) {}
    std::uint64_t requested_bits;
    std::uint64_t max_bits;
};

// Binary map of a coefficient: mod(floor(c/2), 2) with a non-negative
// remainder. Flips under c -> c +/- 2, which is what makes the +/-2
// embedding delta carry one bit.
constexpr int qmap(std::int32_t c) { return (c >> 1) & 1; }

struct EmbedResult {
    std::int32_t coeff;
    int tkey;  // qmap of the coefficient before embedding
};

// Embed one bit. Leaves the coefficient alone when qmap(c) already
// equals w; otherwise adds 2 in iteration 1 and subtracts 2 in
// iteration 2. Afterwards qmap(coeff) == w and parity is preserved.
EmbedResult embed_bit(std::int32_t c, int w, int iteration);

struct ExtractResult {
    int bit;             // qmap of the watermarked coefficient
    std::int32_t coeff;  // coefficient with the embedding delta undone
};

// Exact inverse of embed_bit for the stated embedding iteration.
ExtractResult extract_bit(std::int32_t c_w, int tkey_bit, int embed_iteration);

struct PairResult {
    std::int32_t coeff;
    int tkey_first;
    int tkey_second;  // qmap of the iteration-1 result, not the original
};

// Both iterations on one coefficient: bit a in iteration 1, then bit b
// in iteration 2. Net change is in {-2, 0, +2}; it is 0 exactly when
// both iterations modified or neither did.
PairResult embed_pair(std::int32_t c0, int a, int b);

// One payload-bit destination: a coefficient of an embedding sub-band
// ({LH, HL, HH}, never LL) addressed inside the sub-band grid, plus the
// iteration the bit is embedded in.
struct Slot {
    Subband band;
    int row;
    int col;
    int iteration;  // 1 or 2

    bool operator==(const Slot&) const = default;
};

using AllocationPlan = std::vector<Slot>;

// 2 bits per coefficient, 3 sub-bands of (w/2)*(h/2) coefficients:
// 1.5 bits per pixel.
std::uint64_t max_capacity_bits(int width, int height);

// Deterministic payload-to-slot mapping. The payload is split into
// three contiguous chunks as equal as possible (remainder to earlier
// sub-bands) over LH, HL, HH; each chunk is split into an iteration-1
// part and an iteration-2 part with the first larger by at most one
// bit. Iteration-1 bits occupy the sub-band's coefficients in row-major
// order from the origin, iteration-2 bits revisit those coefficients in
// the same order. Slot i carries payload bit i; extraction walks the
// plan strictly in reverse. Throws capacity_error when payload_bits
// exceeds the maximum.
AllocationPlan build_plan(int width, int height, std::uint64_t payload_bits);

}  // namespace rwm
