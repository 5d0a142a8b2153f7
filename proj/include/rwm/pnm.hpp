#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rwm/image.hpp"

namespace rwm {

enum class PnmErrorKind {
    bad_magic,
    bad_header,
    bad_maxval,
    truncated,
};

class pnm_error : public std::runtime_error {
public:
    pnm_error(PnmErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
    PnmErrorKind kind;
};

// Binary PGM (P5), maxval 255. The writer emits the canonical form
// "P5\n<w> <h>\n255\n" followed by raw pixel bytes; the reader accepts
// header comments and arbitrary whitespace.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

// Binary PBM (P4). Rows are packed MSB-first and padded to a byte
// boundary; stored bit 1 means black. Canonical header "P4\n<w> <h>\n".
BitImage read_pbm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pbm(const BitImage& img);

// File helpers. save_* writes to a temporary sibling and renames, so a
// failed run never leaves a partial output file.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& img);
BitImage load_pbm(const std::filesystem::path& path);
void save_pbm(const std::filesystem::path& path, const BitImage& img);

}  // namespace rwm
