#pragma once

#include <cstdint>
#include <vector>

namespace rwm {

// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t& at(int r, int c) {
        return data[static_cast<std::size_t>(r) * width + c];
    }
    std::uint8_t at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * width + c];
    }
    std::size_t pixel_count() const { return data.size(); }

    bool operator==(const GrayImage&) const = default;
};

// Binary image, one 0/1 value per pixel, row-major.
struct BitImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // values in {0, 1}

    BitImage() = default;
    BitImage(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t& at(int r, int c) {
        return data[static_cast<std::size_t>(r) * width + c];
    }
    std::uint8_t at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * width + c];
    }
    std::size_t bit_count() const { return data.size(); }

    bool operator==(const BitImage&) const = default;
};

// Spatial-domain plane of signed integers. Holds pixel values that may lie
// outside [0, 255] (pre-clamp watermarked values, restored planes).
struct IntPlane {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> data;

    IntPlane() = default;
    IntPlane(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

    std::int32_t& at(int r, int c) {
        return data[static_cast<std::size_t>(r) * width + c];
    }
    std::int32_t at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * width + c];
    }

    bool operator==(const IntPlane&) const = default;
};

IntPlane to_plane(const GrayImage& img);

}  // namespace rwm
