#include "rwm/pipeline.hpp"

#include <stdexcept>
#include <string>

#include "rwm/iwt.hpp"

namespace rwm {

std::pair<GrayImage, OverflowLedger> clamp_and_ledger(const IntPlane& plane) {
    GrayImage img(plane.width, plane.height);
    OverflowLedger ledger;
    for (int r = 0; r < plane.height; ++r) {
        for (int c = 0; c < plane.width; ++c) {
            const std::int32_t v = plane.at(r, c);
            if (v < 0) {
                img.at(r, c) = 0;
                ledger.push_back({r, c, static_cast<std::int16_t>(v)});
            } else if (v > 255) {
                img.at(r, c) = 255;
                ledger.push_back({r, c, static_cast<std::int16_t>(v)});
            } else {
                img.at(r, c) = static_cast<std::uint8_t>(v);
            }
        }
    }
    return {std::move(img), std::move(ledger)};
}

EmbedOutput embed_bits(const GrayImage& cover,
                       std::span<const std::uint8_t> bits,
                       int logo_width, int logo_height) {
    if (static_cast<std::uint64_t>(logo_width) * logo_height != bits.size()) {
        throw std::invalid_argument("logo dimensions do not match bit count");
    }

    CoeffPlane plane = forward_iwt(cover);
    const AllocationPlan plan =
        build_plan(cover.width, cover.height, bits.size());

    SideInfo side;
    side.tracker.reserve(bits.size());
    side.payload_len = bits.size();
    side.logo_width = logo_width;
    side.logo_height = logo_height;
    side.image_width = cover.width;
    side.image_height = cover.height;

    // Sequential in plan order: an iteration-2 slot must see its
    // coefficient as left by that coefficient's iteration-1 slot.
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const Slot& s = plan[i];
        std::int32_t& c = plane.coeff(s.band, s.row, s.col);
        const EmbedResult e = embed_bit(c, bits[i], s.iteration);
        c = e.coeff;
        side.tracker.push_back(static_cast<std::uint8_t>(e.tkey));
    }

    auto [watermarked, ledger] = clamp_and_ledger(inverse_iwt(plane));
    side.ledger = std::move(ledger);
    return {std::move(watermarked), std::move(side)};
}

EmbedOutput embed_image(const GrayImage& cover, const BitImage& logo) {
    return embed_bits(cover, logo.data, logo.width, logo.height);
}

ExtractOutput extract_image(const GrayImage& watermarked, const SideInfo& side) {
    if (side.image_width != watermarked.width ||
        side.image_height != watermarked.height) {
        throw std::invalid_argument("side info image dimensions do not match");
    }
    if (side.tracker.size() != side.payload_len) {
        throw std::invalid_argument("tracker length does not match payload length");
    }
    if (static_cast<std::uint64_t>(side.logo_width) * side.logo_height !=
        side.payload_len) {
        throw std::invalid_argument("logo dimensions do not match payload length");
    }

    // Pre-processing: put the pre-clamp values back before transforming.
    IntPlane spatial = to_plane(watermarked);
    for (const LedgerRecord& rec : side.ledger) {
        if (rec.row < 0 || rec.row >= watermarked.height || rec.col < 0 ||
            rec.col >= watermarked.width) {
            throw std::invalid_argument("ledger record out of image bounds");
        }
        spatial.at(rec.row, rec.col) = rec.value;
    }

    CoeffPlane plane = forward_iwt(spatial);
    const AllocationPlan plan =
        build_plan(watermarked.width, watermarked.height, side.payload_len);

    BitImage logo(side.logo_width, side.logo_height);
    for (std::size_t i = plan.size(); i-- > 0;) {
        const Slot& s = plan[i];
        std::int32_t& c = plane.coeff(s.band, s.row, s.col);
        const ExtractResult e = extract_bit(c, side.tracker[i], s.iteration);
        c = e.coeff;
        logo.data[i] = static_cast<std::uint8_t>(e.bit);
    }

    const IntPlane recovered_plane = inverse_iwt(plane);
    GrayImage recovered(watermarked.width, watermarked.height);
    for (std::size_t i = 0; i < recovered_plane.data.size(); ++i) {
        const std::int32_t v = recovered_plane.data[i];
        if (v < 0 || v > 255) {
            throw std::runtime_error(
                "recovered pixel out of range; side info does not belong to "
                "this image");
        }
        recovered.data[i] = static_cast<std::uint8_t>(v);
    }
    return {std::move(recovered), std::move(logo)};
}

}  // namespace rwm
