#include "rwm/keyfile.hpp"

#include <zlib.h>

#include <limits>
#include <unordered_set>

namespace rwm {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
    put_u32(out, static_cast<std::uint32_t>(v));
}

void put_i16(std::vector<std::uint8_t>& out, std::int16_t v) {
    const auto u = static_cast<std::uint16_t>(v);
    out.push_back(static_cast<std::uint8_t>(u >> 8));
    out.push_back(static_cast<std::uint8_t>(u));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) |
           (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) |
           static_cast<std::uint32_t>(p[3]);
}

std::uint64_t get_u64(const std::uint8_t* p) {
    return (static_cast<std::uint64_t>(get_u32(p)) << 32) | get_u32(p + 4);
}

std::int16_t get_i16(const std::uint8_t* p) {
    return static_cast<std::int16_t>(
        static_cast<std::uint16_t>((static_cast<std::uint16_t>(p[0]) << 8) | p[1]));
}

std::uint32_t crc_of(const std::uint8_t* data, std::size_t len) {
    return static_cast<std::uint32_t>(
        crc32(crc32(0L, Z_NULL, 0), data, static_cast<uInt>(len)));
}

constexpr std::size_t kFixedHeaderBytes = 33;  // magic..ledger_count
constexpr std::size_t kMinKeyBytes = kFixedHeaderBytes + 4;
constexpr std::size_t kLedgerRecordBytes = 10;

[[noreturn]] void fail(KeyErrorKind kind, const std::string& msg) {
    throw key_error(kind, msg);
}

void check_invariant(bool ok, const std::string& msg) {
    if (!ok) fail(KeyErrorKind::invariant_violation, msg);
}

}  // namespace

std::vector<std::uint8_t> encode_key(const SideInfo& side) {
    const std::uint64_t tracker_bytes = (side.payload_len + 7) / 8;
    std::vector<std::uint8_t> out;
    out.reserve(kMinKeyBytes + kLedgerRecordBytes * side.ledger.size() +
                tracker_bytes);

    for (const std::uint8_t b : kKeyMagic) out.push_back(b);
    out.push_back(kKeyVersion);
    put_u32(out, static_cast<std::uint32_t>(side.image_width));
    put_u32(out, static_cast<std::uint32_t>(side.image_height));
    put_u32(out, static_cast<std::uint32_t>(side.logo_width));
    put_u32(out, static_cast<std::uint32_t>(side.logo_height));
    put_u64(out, side.payload_len);
    put_u32(out, static_cast<std::uint32_t>(side.ledger.size()));

    for (const LedgerRecord& rec : side.ledger) {
        put_u32(out, static_cast<std::uint32_t>(rec.row));
        put_u32(out, static_cast<std::uint32_t>(rec.col));
        put_i16(out, rec.value);
    }

    // Tracker bits, MSB-first, zero padding in the last byte.
    std::uint8_t acc = 0;
    for (std::uint64_t i = 0; i < side.payload_len; ++i) {
        acc = static_cast<std::uint8_t>(acc | (side.tracker[i] & 1) << (7 - i % 8));
        if (i % 8 == 7) {
            out.push_back(acc);
            acc = 0;
        }
    }
    if (side.payload_len % 8 != 0) {
        out.push_back(acc);
    }

    put_u32(out, crc_of(out.data(), out.size()));
    return out;
}

SideInfo decode_key(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kMinKeyBytes) {
        fail(KeyErrorKind::truncated, "key stream shorter than minimum 37 bytes");
    }
    if (!std::equal(std::begin(kKeyMagic), std::end(kKeyMagic), bytes.begin())) {
        fail(KeyErrorKind::bad_magic, "bad key magic");
    }
    if (bytes[4] != kKeyVersion) {
        fail(KeyErrorKind::bad_version,
             "unsupported key version " + std::to_string(bytes[4]));
    }

    const std::uint32_t image_w = get_u32(&bytes[5]);
    const std::uint32_t image_h = get_u32(&bytes[9]);
    const std::uint32_t logo_w = get_u32(&bytes[13]);
    const std::uint32_t logo_h = get_u32(&bytes[17]);
    const std::uint64_t payload_len = get_u64(&bytes[21]);
    const std::uint32_t ledger_count = get_u32(&bytes[29]);

    const std::uint64_t tracker_bytes = (payload_len + 7) / 8;
    const std::uint64_t expected =
        kMinKeyBytes + kLedgerRecordBytes * static_cast<std::uint64_t>(ledger_count) +
        tracker_bytes;
    if (bytes.size() != expected) {
        fail(KeyErrorKind::truncated,
             "key stream is " + std::to_string(bytes.size()) +
                 " bytes, layout requires " + std::to_string(expected));
    }

    // Checksum first, payloads after.
    const std::uint32_t stored_crc = get_u32(&bytes[bytes.size() - 4]);
    const std::uint32_t actual_crc = crc_of(bytes.data(), bytes.size() - 4);
    if (stored_crc != actual_crc) {
        fail(KeyErrorKind::checksum_mismatch, "key checksum mismatch");
    }

    constexpr std::uint32_t kMaxDim = std::numeric_limits<std::int32_t>::max();
    check_invariant(image_w <= kMaxDim && image_h <= kMaxDim &&
                        logo_w <= kMaxDim && logo_h <= kMaxDim,
                    "dimension field out of range");
    check_invariant(static_cast<std::uint64_t>(logo_w) * logo_h == payload_len,
                    "payload length does not equal logo area");

    SideInfo side;
    side.payload_len = payload_len;
    side.image_width = static_cast<int>(image_w);
    side.image_height = static_cast<int>(image_h);
    side.logo_width = static_cast<int>(logo_w);
    side.logo_height = static_cast<int>(logo_h);

    std::size_t pos = kFixedHeaderBytes;
    side.ledger.reserve(ledger_count);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(ledger_count);
    for (std::uint32_t i = 0; i < ledger_count; ++i) {
        const std::uint32_t row = get_u32(&bytes[pos]);
        const std::uint32_t col = get_u32(&bytes[pos + 4]);
        const std::int16_t value = get_i16(&bytes[pos + 8]);
        pos += kLedgerRecordBytes;
        check_invariant(row < image_h && col < image_w,
                        "ledger record out of image bounds");
        check_invariant(value < 0 || value > 255,
                        "ledger value is inside [0, 255]");
        check_invariant(
            seen.insert((static_cast<std::uint64_t>(row) << 32) | col).second,
            "duplicate ledger record");
        side.ledger.push_back(
            {static_cast<int>(row), static_cast<int>(col), value});
    }

    side.tracker.resize(payload_len);
    for (std::uint64_t i = 0; i < payload_len; ++i) {
        side.tracker[i] = (bytes[pos + i / 8] >> (7 - i % 8)) & 1;
    }
    if (payload_len % 8 != 0) {
        const std::uint8_t last = bytes[pos + tracker_bytes - 1];
        const std::uint8_t pad_mask =
            static_cast<std::uint8_t>(0xFFu >> (payload_len % 8));
        check_invariant((last & pad_mask) == 0, "tracker padding bits not zero");
    }
    return side;
}

}  // namespace rwm
