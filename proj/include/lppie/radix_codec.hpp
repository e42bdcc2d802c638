#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lppie/bignum.hpp"

namespace lppie {

/// Byte blocks <-> big integers <-> decimal digit strings.
///
/// A sentinel byte 0x01 is prepended before base-256 interpretation so blocks
/// with leading zero bytes stay bijective with (content, length). Byte order
/// is big-endian: the first byte of the block is the most significant.

inline constexpr uint8_t kSentinelByte = 0x01;

/// Base-256 value of 0x01 || block. Throws EmptyBlock on empty input.
BigNumber bytes_to_bignumber(std::span<const uint8_t> block);

/// Inverse of bytes_to_bignumber for a block of known length. Throws
/// CorruptValue if n does not decode to exactly block_len + 1 bytes with the
/// sentinel in front.
std::vector<uint8_t> bignumber_to_bytes(const BigNumber& n, size_t block_len);

/// Canonical decimal expansion ("0" for zero).
std::string bignumber_to_digits(const BigNumber& n);

/// Value of a decimal string; accepts leading zeros. Throws MalformedDigits
/// on empty input or non-digit characters.
BigNumber digits_to_bignumber(std::string_view digits);

} // namespace lppie
