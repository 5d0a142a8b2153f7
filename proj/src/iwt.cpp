#include "rwm/iwt.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rwm {

namespace {

void check_dims(int width, int height) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" +
                                    std::to_string(height));
    }
    if (width % 2 != 0 || height % 2 != 0) {
        throw std::invalid_argument("image dimensions must be even, got " +
                                    std::to_string(width) + "x" +
                                    std::to_string(height));
    }
}

}  // namespace

std::int32_t& CoeffPlane::coeff(Subband b, int row, int col) {
    const int sw = sub_width();
    const int sh = sub_height();
    switch (b) {
        case Subband::LL: return at(row, col);
        case Subband::HL: return at(row, sw + col);
        case Subband::LH: return at(sh + row, col);
        default:          return at(sh + row, sw + col);
    }
}

std::int32_t CoeffPlane::coeff(Subband b, int row, int col) const {
    return const_cast<CoeffPlane*>(this)->coeff(b, row, col);
}

IntPlane to_plane(const GrayImage& img) {
    IntPlane p(img.width, img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        p.data[i] = img.data[i];
    }
    return p;
}

CoeffPlane forward_iwt(const IntPlane& plane) {
    check_dims(plane.width, plane.height);
    const int w = plane.width;
    const int h = plane.height;
    const int hw = w / 2;
    const int hh = h / 2;

    CoeffPlane out(w, h);
    out.data = plane.data;
    std::int32_t* buf = out.data.data();

#pragma omp parallel
    {
        std::vector<std::int32_t> tmp(static_cast<std::size_t>(w > h ? w : h));

        // Row pass: s-values to the left half, d-values to the right.
#pragma omp for
        for (int r = 0; r < h; ++r) {
            std::int32_t* row = buf + static_cast<std::size_t>(r) * w;
            for (int i = 0; i < w; ++i) tmp[i] = row[i];
            for (int i = 0; i < hw; ++i) {
                const LiftPair p = lift_forward(tmp[2 * i], tmp[2 * i + 1]);
                row[i] = p.s;
                row[hw + i] = p.d;
            }
        }

        // Column pass: s-values to the top half, d-values to the bottom.
#pragma omp for
        for (int c = 0; c < w; ++c) {
            for (int i = 0; i < h; ++i) tmp[i] = buf[static_cast<std::size_t>(i) * w + c];
            for (int i = 0; i < hh; ++i) {
                const LiftPair p = lift_forward(tmp[2 * i], tmp[2 * i + 1]);
                buf[static_cast<std::size_t>(i) * w + c] = p.s;
                buf[static_cast<std::size_t>(hh + i) * w + c] = p.d;
            }
        }
    }
    return out;
}

CoeffPlane forward_iwt(const GrayImage& img) {
    return forward_iwt(to_plane(img));
}

IntPlane inverse_iwt(const CoeffPlane& plane) {
    check_dims(plane.width, plane.height);
    const int w = plane.width;
    const int h = plane.height;
    const int hw = w / 2;
    const int hh = h / 2;

    IntPlane out(w, h);
    out.data = plane.data;
    std::int32_t* buf = out.data.data();

#pragma omp parallel
    {
        std::vector<std::int32_t> tmp(static_cast<std::size_t>(w > h ? w : h));

        // Undo the column pass first, then the row pass.
#pragma omp for
        for (int c = 0; c < w; ++c) {
            for (int i = 0; i < h; ++i) tmp[i] = buf[static_cast<std::size_t>(i) * w + c];
            for (int i = 0; i < hh; ++i) {
                const SamplePair p = lift_inverse(tmp[i], tmp[hh + i]);
                buf[static_cast<std::size_t>(2 * i) * w + c] = p.x0;
                buf[static_cast<std::size_t>(2 * i + 1) * w + c] = p.x1;
            }
        }

#pragma omp for
        for (int r = 0; r < h; ++r) {
            std::int32_t* row = buf + static_cast<std::size_t>(r) * w;
            for (int i = 0; i < w; ++i) tmp[i] = row[i];
            for (int i = 0; i < hw; ++i) {
                const SamplePair p = lift_inverse(tmp[i], tmp[hw + i]);
                row[2 * i] = p.x0;
                row[2 * i + 1] = p.x1;
            }
        }
    }
    return out;
}

namespace serial {

namespace {

// Out-of-place 1-D pass over a contiguous sequence.
std::vector<std::int32_t> lift_seq(const std::vector<std::int32_t>& v) {
    const int half = static_cast<int>(v.size()) / 2;
    std::vector<std::int32_t> out(v.size());
    for (int i = 0; i < half; ++i) {
        const LiftPair p = lift_forward(v[2 * i], v[2 * i + 1]);
        out[i] = p.s;
        out[half + i] = p.d;
    }
    return out;
}

std::vector<std::int32_t> unlift_seq(const std::vector<std::int32_t>& v) {
    const int half = static_cast<int>(v.size()) / 2;
    std::vector<std::int32_t> out(v.size());
    for (int i = 0; i < half; ++i) {
        const SamplePair p = lift_inverse(v[i], v[half + i]);
        out[2 * i] = p.x0;
        out[2 * i + 1] = p.x1;
    }
    return out;
}

std::vector<std::int32_t> transpose(const std::vector<std::int32_t>& v,
                                    int w, int h) {
    std::vector<std::int32_t> out(v.size());
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            out[static_cast<std::size_t>(c) * h + r] =
                v[static_cast<std::size_t>(r) * w + c];
        }
    }
    return out;
}

std::vector<std::int32_t> row_wise(const std::vector<std::int32_t>& v,
                                   int w, int h,
                                   std::vector<std::int32_t> (*pass)(
                                       const std::vector<std::int32_t>&)) {
    std::vector<std::int32_t> out;
    out.reserve(v.size());
    std::vector<std::int32_t> row(static_cast<std::size_t>(w));
    for (int r = 0; r < h; ++r) {
        const auto* src = v.data() + static_cast<std::size_t>(r) * w;
        row.assign(src, src + w);
        const auto done = pass(row);
        out.insert(out.end(), done.begin(), done.end());
    }
    return out;
}

}  // namespace

CoeffPlane forward_iwt(const IntPlane& plane) {
    check_dims(plane.width, plane.height);
    const int w = plane.width;
    const int h = plane.height;
    // Rows, then columns via transpose.
    auto d = row_wise(plane.data, w, h, lift_seq);
    d = transpose(d, w, h);
    d = row_wise(d, h, w, lift_seq);
    d = transpose(d, h, w);
    CoeffPlane out(w, h);
    out.data = std::move(d);
    return out;
}

IntPlane inverse_iwt(const CoeffPlane& plane) {
    check_dims(plane.width, plane.height);
    const int w = plane.width;
    const int h = plane.height;
    auto d = transpose(plane.data, w, h);
    d = row_wise(d, h, w, unlift_seq);
    d = transpose(d, h, w);
    d = row_wise(d, w, h, unlift_seq);
    IntPlane out(w, h);
    out.data = std::move(d);
    return out;
}

}  // namespace serial

}  // namespace rwm
