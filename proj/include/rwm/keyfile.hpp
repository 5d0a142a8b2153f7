#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rwm/pipeline.hpp"

namespace rwm {

// Key file layout, all fields big-endian:
//
//   offset  size  field
//   0       4     magic "RWM1"
//   4       1     version (= 1)
//   5       4     image width          (u32)
//   9       4     image height         (u32)
//   13      4     logo width           (u32)
//   17      4     logo height          (u32)
//   21      8     payload length, bits (u64)
//   29      4     ledger record count  (u32)
//   33      10*n  ledger records: row u32, col u32, value i16
//   ...     ⌈L/8⌉ tracker bits, MSB-first, zero-padded to a byte
//   end-4   4     CRC-32 of all preceding bytes
//
// An empty key (no ledger, zero-length payload) is exactly 37 bytes.

inline constexpr std::uint8_t kKeyMagic[4] = {'R', 'W', 'M', '1'};
inline constexpr std::uint8_t kKeyVersion = 1;

enum class KeyErrorKind {
    bad_magic,
    bad_version,
    checksum_mismatch,
    truncated,
    invariant_violation,
};

class key_error : public std::runtime_error {
public:
    key_error(KeyErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
    KeyErrorKind kind;
};

// Canonical, deterministic encoding: equal SideInfo -> equal bytes.
std::vector<std::uint8_t> encode_key(const SideInfo& side);

// Exact inverse of encode_key. The checksum is verified before the
// ledger and tracker payloads are parsed; every failure mode carries a
// distinct KeyErrorKind.
SideInfo decode_key(std::span<const std::uint8_t> bytes);

}  // namespace rwm
