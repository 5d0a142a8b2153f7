#include "rwm/wm_core.hpp"

#include <string>

namespace rwm {

EmbedResult embed_bit(std::int32_t c, int w, int iteration) {
    const int t = qmap(c);
    if (t == w) {
        return {c, t};
    }
    return {iteration == 1 ? c + 2 : c - 2, t};
}

ExtractResult extract_bit(std::int32_t c_w, int tkey_bit, int embed_iteration) {
    const int w_e = qmap(c_w);
    if (w_e == tkey_bit) {
        return {w_e, c_w};  // no modification happened
    }
    return {w_e, embed_iteration == 1 ? c_w - 2 : c_w + 2};
}

PairResult embed_pair(std::int32_t c0, int a, int b) {
    const EmbedResult first = embed_bit(c0, a, 1);
    const EmbedResult second = embed_bit(first.coeff, b, 2);
    return {second.coeff, first.tkey, second.tkey};
}

std::uint64_t max_capacity_bits(int width, int height) {
    const std::uint64_t per_band =
        static_cast<std::uint64_t>(width / 2) * static_cast<std::uint64_t>(height / 2);
    return 6 * per_band;  // 3 sub-bands, 2 bits per coefficient
}

AllocationPlan build_plan(int width, int height, std::uint64_t payload_bits) {
    if (width <= 0 || height <= 0 || width % 2 != 0 || height % 2 != 0) {
        throw std::invalid_argument("plan requires positive even dimensions, got " +
                                    std::to_string(width) + "x" +
                                    std::to_string(height));
    }
    const std::uint64_t cap = max_capacity_bits(width, height);
    if (payload_bits > cap) {
        throw capacity_error(payload_bits, cap);
    }

    const int sw = width / 2;
    static constexpr Subband kBands[3] = {Subband::LH, Subband::HL, Subband::HH};

    AllocationPlan plan;
    plan.reserve(static_cast<std::size_t>(payload_bits));

    const std::uint64_t base = payload_bits / 3;
    const std::uint64_t rem = payload_bits % 3;
    for (int bi = 0; bi < 3; ++bi) {
        const std::uint64_t chunk = base + (static_cast<std::uint64_t>(bi) < rem ? 1 : 0);
        const std::uint64_t iter1 = (chunk + 1) / 2;
        const std::uint64_t iter2 = chunk - iter1;
        for (std::uint64_t j = 0; j < iter1; ++j) {
            plan.push_back({kBands[bi], static_cast<int>(j / sw),
                            static_cast<int>(j % sw), 1});
        }
        for (std::uint64_t j = 0; j < iter2; ++j) {
            plan.push_back({kBands[bi], static_cast<int>(j / sw),
                            static_cast<int>(j % sw), 2});
        }
    }
    return plan;
}

}  // namespace rwm
