#include "lppie/iterlog.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

#include "lppie/error.hpp"

namespace lppie {

namespace iterlog_detail {

BigNumber ln10_fixed(uint32_t scale) {
    static std::mutex cache_mutex;
    static std::map<uint32_t, BigNumber> cache;
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(scale);
        if (it != cache.end())
            return it->second;
    }

    // ln 10 = 2 * atanh(9/11) = 2 * sum_{j>=0} (9/11)^(2j+1) / (2j+1).
    // Terms shrink by 81/121 each step; the series runs at scale + 8 so the
    // per-term floor error stays below one ulp of the requested scale.
    const uint32_t work = scale + 8;
    BigNumber power = BigNumber::pow10(work);
    power.mul_add_small(9, 0);
    power.divmod_small(11);
    BigNumber acc;
    uint64_t denom = 1;
    while (!power.is_zero()) {
        BigNumber term = power;
        term.divmod_small(denom);
        acc += term;
        power.mul_add_small(81, 0);
        power.divmod_small(121);
        denom += 2;
    }
    acc.mul_add_small(2, 0);
    acc.shift_digits_right(8);

    std::lock_guard lock(cache_mutex);
    return cache.emplace(scale, std::move(acc)).first->second;
}

BigNumber exp10_fraction(const BigNumber& fraction, uint32_t scale) {
    // 10^f = exp(f * ln 10). The argument is halved kHalvings times so the
    // Taylor series converges quickly, then the result is squared back up.
    // Every step truncates toward zero, which keeps the evaluation identical
    // on every platform.
    constexpr int kHalvings = 8;

    BigNumber y = BigNumber::mul(fraction, ln10_fixed(scale));
    y.shift_digits_right(scale);
    for (int i = 0; i < kHalvings; ++i) {
        y.mul_add_small(5, 0);
        y.shift_digits_right(1);
    }

    const BigNumber one = BigNumber::pow10(scale);
    BigNumber sum = one;
    BigNumber term = one;
    uint64_t k = 1;
    while (!term.is_zero()) {
        term = BigNumber::mul(term, y);
        term.shift_digits_right(scale);
        term.divmod_small(k);
        sum += term;
        ++k;
    }

    for (int i = 0; i < kHalvings; ++i) {
        sum = BigNumber::mul(sum, sum);
        sum.shift_digits_right(scale);
    }
    return sum;
}

std::string log10_fraction_digits(BigNumber x, uint32_t scale, uint32_t count) {
    assert(x >= BigNumber::pow10(scale) && x < BigNumber::pow10(scale + 1));

    std::string digits;
    digits.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        // x <- x^10 via three squarings and one multiply, truncated at scale.
        BigNumber x2 = BigNumber::mul(x, x);
        x2.shift_digits_right(scale);
        BigNumber x4 = BigNumber::mul(x2, x2);
        x4.shift_digits_right(scale);
        BigNumber x8 = BigNumber::mul(x4, x4);
        x8.shift_digits_right(scale);
        x = BigNumber::mul(x8, x2);
        x.shift_digits_right(scale);

        // x^10 is in [1, 10^10); its integer digit count minus one is the
        // next fractional digit of log10.
        uint32_t digit = x.digit_count() - scale - 1;
        digits.push_back(static_cast<char>('0' + digit));
        x.shift_digits_right(digit);
    }
    return digits;
}

} // namespace iterlog_detail

namespace {

using iterlog_detail::exp10_fraction;
using iterlog_detail::log10_fraction_digits;

bool all_decimal(const std::string& s) {
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return !s.empty();
}

// A reader limit, not a codec limit: chunks beyond a million digits would
// demand working precisions nothing downstream can afford.
constexpr uint32_t kMaxWorkingScale = 2'000'000;

} // namespace

int classify_r(const BigNumber& x0) {
    if (x0 <= BigNumber(9))
        return 0;
    if (x0.digit_count() <= 10)
        return 1;
    return 2;
}

BigNumber iterlog_invert(const IterLogRecord& record, const PrecisionPolicy& policy) {
    if (!all_decimal(record.mantissa))
        raise(ErrorCode::MalformedDigits, "record mantissa is not a decimal digit string");
    if (record.digit_len == 0)
        raise(ErrorCode::CorruptValue, "record digit_len is zero");

    if (record.r == 0) {
        BigNumber value = BigNumber::from_decimal(record.mantissa);
        if (value.digit_count() > record.digit_len)
            raise(ErrorCode::ChunkOverflow, "restored value exceeds the recorded digit length");
        return value;
    }
    if (record.r > 2)
        raise(ErrorCode::CorruptValue, "loop count " + std::to_string(record.r) + " is not reachable");
    if (record.mantissa.front() == '0')
        raise(ErrorCode::CorruptValue, "mantissa of a transformed chunk cannot start with 0");

    const uint32_t m = record.mantissa_len();
    const uint64_t scale64 =
        static_cast<uint64_t>(std::max(record.digit_len, m)) + policy.initial_guard;
    if (scale64 > kMaxWorkingScale)
        raise(ErrorCode::CorruptValue, "record demands an implausible working precision");
    const uint32_t scale = static_cast<uint32_t>(scale64);

    // d at fixed-point scale: the mantissa has m - 1 fractional digits.
    BigNumber x = BigNumber::from_decimal(record.mantissa);
    x.shift_digits_left(scale - (m - 1));

    for (int step = 1; step <= record.r; ++step) {
        BigNumber int_part = x;
        int_part.shift_digits_right(scale);
        const uint64_t exponent = int_part.to_u64();
        if (step < record.r) {
            // d < 10 is guaranteed by the leading-digit rule.
            assert(exponent <= 9);
        } else if (exponent + 1 > record.digit_len) {
            raise(ErrorCode::ChunkOverflow, "restored value would have " + std::to_string(exponent + 1) +
                                                " digits, chunk holds " + std::to_string(record.digit_len));
        }
        BigNumber shifted_int = int_part;
        shifted_int.shift_digits_left(scale);
        BigNumber frac = x - shifted_int;

        x = exp10_fraction(frac, scale);
        x.shift_digits_left(static_cast<uint32_t>(exponent));
    }

    // Round to the nearest integer, requiring the value to sit within 0.25 of
    // it; anything looser means the record (or the precision policy) is bad.
    BigNumber result = x;
    result.shift_digits_right(scale);
    BigNumber shifted = result;
    shifted.shift_digits_left(scale);
    BigNumber frac = x - shifted;
    frac.mul_add_small(4, 0);

    const BigNumber unit = BigNumber::pow10(scale);
    if (frac <= unit) {
        // round down; result already holds the integer part
    } else {
        BigNumber three_units = unit;
        three_units.mul_add_small(3, 0);
        if (frac >= three_units)
            result += BigNumber(1);
        else
            raise(ErrorCode::AmbiguousInverse, "inverse chain lands farther than 0.25 from an integer");
    }

    if (result.digit_count() > record.digit_len)
        raise(ErrorCode::ChunkOverflow, "restored value exceeds the recorded digit length");
    return result;
}

IterLogRecord iterlog_forward(const BigNumber& x0, uint32_t digit_len, const PrecisionPolicy& policy) {
    const uint32_t value_digits = x0.digit_count();
    if (digit_len < value_digits)
        throw std::invalid_argument("iterlog_forward: digit_len smaller than the value's digit count");
    if (policy.initial_guard == 0 || policy.growth == 0 || policy.max_retries == 0)
        throw std::invalid_argument("iterlog_forward: degenerate precision policy");

    if (x0 <= BigNumber(9))
        return IterLogRecord{0, x0.to_decimal(), digit_len};

    const int r = classify_r(x0);

    for (uint32_t attempt = 0; attempt <= policy.max_retries; ++attempt) {
        const uint64_t scale64 = static_cast<uint64_t>(digit_len) + policy.initial_guard +
                                 static_cast<uint64_t>(attempt) * policy.growth;
        if (scale64 > kMaxWorkingScale)
            break;
        const uint32_t scale = static_cast<uint32_t>(scale64);

        // First application: log10(x0) = (value_digits - 1) + log10(x0 / 10^(n-1)).
        BigNumber normalized = x0;
        normalized.shift_digits_left(scale - (value_digits - 1));
        std::string frac1 = log10_fraction_digits(std::move(normalized), scale, scale);

        std::string digits;
        if (r == 1) {
            digits.reserve(1 + frac1.size());
            digits.push_back(static_cast<char>('0' + (value_digits - 1)));
            digits.append(frac1);
        } else {
            // Second application on X1 = (n-1).frac1, normalized into [1, 10).
            BigNumber x1(value_digits - 1);
            x1.shift_digits_left(scale);
            x1 += BigNumber::from_decimal(frac1);
            const uint32_t e = BigNumber(value_digits - 1).digit_count() - 1;
            x1.shift_digits_right(e);
            std::string frac2 = log10_fraction_digits(std::move(x1), scale, scale);
            digits.reserve(1 + frac2.size());
            digits.push_back(static_cast<char>('0' + e));
            digits.append(frac2);
        }

        const auto verified = [&](size_t len) {
            IterLogRecord candidate{static_cast<uint8_t>(r), digits.substr(0, len), digit_len};
            try {
                return iterlog_invert(candidate, policy) == x0;
            } catch (const CodecError&) {
                return false;
            }
        };

        if (!verified(digits.size()))
            continue; // more precision needed

        // Shortest verified prefix. Distinguishing a digit_len-digit value
        // needs about digit_len fractional digits of d, so scan for the
        // verified/unverified boundary from there instead of bisecting the
        // whole range.
        size_t len = std::min<size_t>(digits.size(), static_cast<size_t>(digit_len) + 2);
        if (verified(len)) {
            while (len > 1 && verified(len - 1))
                --len;
        } else {
            ++len;
            while (len < digits.size() && !verified(len))
                ++len;
        }
        return IterLogRecord{static_cast<uint8_t>(r), digits.substr(0, len), digit_len};
    }

    raise(ErrorCode::PrecisionExhausted,
          "no verified mantissa for a " + std::to_string(value_digits) + "-digit chunk after " +
              std::to_string(policy.max_retries) + " retries");
}

} // namespace lppie
