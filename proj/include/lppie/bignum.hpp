#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lppie {

/// Arbitrary-precision unsigned integer stored as base-10^9 limbs, least
/// significant limb first. The decimal radix keeps digit-oriented operations
/// (digit counting, shifts by powers of ten, rendering) cheap, which is what
/// the codec spends its time on.
///
/// Representation invariant: no trailing zero limbs; the value 0 is the empty
/// limb vector.
class BigNumber {
public:
    static constexpr uint32_t kLimbBase = 1'000'000'000u; // 10^9
    static constexpr uint32_t kLimbDigits = 9;

    BigNumber() = default;
    explicit BigNumber(uint64_t value);

    /// Parses a decimal string. Accepts leading zeros. Throws
    /// std::invalid_argument on empty input or non-digit characters; the
    /// codec-facing validation lives in radix_codec.
    static BigNumber from_decimal(std::string_view digits);

    /// 10^exponent.
    static BigNumber pow10(uint32_t exponent);

    bool is_zero() const noexcept { return limbs_.empty(); }

    /// Number of decimal digits; 1 for the value 0.
    uint32_t digit_count() const noexcept;

    /// Canonical decimal rendering, no leading zeros ("0" for zero).
    std::string to_decimal() const;

    /// Value as uint64_t; throws std::overflow_error if it does not fit.
    uint64_t to_u64() const;

    std::strong_ordering operator<=>(const BigNumber& other) const noexcept;
    bool operator==(const BigNumber& other) const noexcept = default;

    BigNumber& operator+=(const BigNumber& other);
    /// Subtracts other from *this; requires *this >= other.
    BigNumber& operator-=(const BigNumber& other);

    friend BigNumber operator+(BigNumber a, const BigNumber& b) { return a += b; }
    friend BigNumber operator-(BigNumber a, const BigNumber& b) { return a -= b; }
    friend BigNumber operator*(const BigNumber& a, const BigNumber& b) { return mul(a, b); }

    static BigNumber mul(const BigNumber& a, const BigNumber& b);

    /// *this = *this * multiplier + addend, single pass.
    /// multiplier must satisfy multiplier <= 18'446'744'072 (so that limb
    /// products plus carries fit in 64 bits).
    void mul_add_small(uint64_t multiplier, uint64_t addend);

    /// Divides in place by a small divisor and returns the remainder.
    /// divisor must be in [1, 18'446'744'072].
    uint64_t divmod_small(uint64_t divisor);

    /// Multiply by 10^count.
    void shift_digits_left(uint32_t count);

    /// Divide by 10^count, truncating toward zero.
    void shift_digits_right(uint32_t count);

    const std::vector<uint32_t>& limbs() const noexcept { return limbs_; }

private:
    void normalize();

    std::vector<uint32_t> limbs_;
};

} // namespace lppie
