#pragma once

#include <cstdint>
#include <vector>

#include "rwm/image.hpp"

namespace rwm {

enum class Subband { LL, LH, HL, HH };

// One-level 2-D integer wavelet decomposition in quadrant layout:
// top-left LL, top-right HL (horizontal detail), bottom-left LH
// (vertical detail), bottom-right HH. Width and height are even.
struct CoeffPlane {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> data;

    CoeffPlane() = default;
    CoeffPlane(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

    std::int32_t& at(int r, int c) {
        return data[static_cast<std::size_t>(r) * width + c];
    }
    std::int32_t at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * width + c];
    }

    int sub_width() const { return width / 2; }
    int sub_height() const { return height / 2; }

    // (row, col) are indices inside the sub-band's own grid.
    std::int32_t& coeff(Subband b, int row, int col);
    std::int32_t coeff(Subband b, int row, int col) const;

    bool operator==(const CoeffPlane&) const = default;
};

// S-transform lifting step on one sample pair: d = x1 - x0,
// s = x0 + floor(d/2). Integer-to-integer and exactly invertible;
// floor division rounds toward negative infinity.
struct LiftPair {
    std::int32_t s;
    std::int32_t d;
};

constexpr std::int32_t floor_half(std::int32_t v) { return v >> 1; }

constexpr LiftPair lift_forward(std::int32_t x0, std::int32_t x1) {
    const std::int32_t d = x1 - x0;
    return {x0 + floor_half(d), d};
}

struct SamplePair {
    std::int32_t x0;
    std::int32_t x1;
};

constexpr SamplePair lift_inverse(std::int32_t s, std::int32_t d) {
    const std::int32_t x0 = s - floor_half(d);
    return {x0, d + x0};
}

// Forward transform: lifting applied to every row (s-values left,
// d-values right), then to every column (s top, d bottom). Rows and
// columns are processed in parallel; output is bit-identical to the
// serial reference. Throws std::invalid_argument on odd or non-positive
// dimensions.
CoeffPlane forward_iwt(const IntPlane& plane);
CoeffPlane forward_iwt(const GrayImage& img);

// Exact inverse. Output values may lie outside [0, 255] when
// coefficients were modified.
IntPlane inverse_iwt(const CoeffPlane& plane);

namespace serial {

// Straight-line reference implementations, kept for testing and for the
// kernel benchmark. Must produce bit-identical results to the parallel
// kernels on every input.
CoeffPlane forward_iwt(const IntPlane& plane);
IntPlane inverse_iwt(const CoeffPlane& plane);

}  // namespace serial

}  // namespace rwm
