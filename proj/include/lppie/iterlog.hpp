#pragma once

#include <cstdint>
#include <string>

#include "lppie/bignum.hpp"

namespace lppie {

/// Working-precision knobs for the iterated-log transform. initial_guard
/// extends the analytic minimum (the chunk's digit length); when encode-time
/// self-verification fails, precision grows by `growth` digits per retry.
struct PrecisionPolicy {
    uint32_t initial_guard = 8;
    uint32_t growth = 16;
    uint32_t max_retries = 8;
};

/// Compressed form of one chunk: the loop count r and the decimal mantissa of
/// the final value d, with an implied decimal point after the first digit.
/// r == 0 means the chunk value was already a single digit and mantissa is
/// that digit verbatim.
struct IterLogRecord {
    uint8_t r = 0;
    std::string mantissa;
    uint32_t digit_len = 0;

    uint32_t mantissa_len() const noexcept { return static_cast<uint32_t>(mantissa.size()); }
    bool operator==(const IterLogRecord&) const = default;
};

/// Closed form of the stopping rule: how many log10 applications bring x0
/// below 10. 0 for x0 <= 9, 1 for x0 < 10^10, 2 above (values needing r >= 3
/// cannot be materialized).
int classify_r(const BigNumber& x0);

/// Applies X <- log10(X) until X < 10, recording the loop count and enough
/// mantissa digits of the final value that iterlog_invert restores x0
/// exactly. The returned mantissa is the shortest prefix of the computed
/// digits that survives a decode round trip; on verification failure the
/// working precision grows and the transform reruns, up to
/// policy.max_retries (then PrecisionExhausted).
///
/// digit_len must be at least the digit count of x0; it bounds the value the
/// chunk can hold and sizes the working precision.
IterLogRecord iterlog_forward(const BigNumber& x0, uint32_t digit_len,
                              const PrecisionPolicy& policy = {});

/// Applies X <- 10^X exactly r times starting from the mantissa value and
/// rounds the result to the nearest integer. The evaluation uses only the
/// stored decimal digits and fixed-point integer arithmetic, so a record
/// decodes to the same value on every platform. Throws AmbiguousInverse when
/// the final value sits farther than 0.25 from the nearest integer and
/// ChunkOverflow when the result exceeds digit_len digits.
BigNumber iterlog_invert(const IterLogRecord& record, const PrecisionPolicy& policy = {});

namespace iterlog_detail {

/// Fixed-point value x in [1, 10) scaled by 10^scale -> the first `count`
/// fractional decimal digits of log10(x), by iterated tenth powers with
/// truncating arithmetic.
std::string log10_fraction_digits(BigNumber x, uint32_t scale, uint32_t count);

/// Fixed-point fraction f in [0, 1) scaled by 10^scale -> 10^f in [1, 10) at
/// the same scale, via exp(f * ln 10) with truncating arithmetic.
BigNumber exp10_fraction(const BigNumber& fraction, uint32_t scale);

/// ln 10 truncated to `scale` fractional digits (cached per scale).
BigNumber ln10_fixed(uint32_t scale);

} // namespace iterlog_detail

} // namespace lppie
