#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace lppie {

using Sha256Digest = std::array<uint8_t, 32>;

/// SHA-256 of a byte buffer (FIPS 180-4).
Sha256Digest sha256(std::span<const uint8_t> data);

/// Lowercase hex rendering of a digest.
std::string sha256_hex(const Sha256Digest& digest);

} // namespace lppie
