#include "lppie/bignum.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lppie {

namespace {

// Largest small operand such that operand * kLimbBase + (kLimbBase - 1) still
// fits in uint64_t. Both mul_add_small and divmod_small rely on this bound.
constexpr uint64_t kSmallOperandMax = (UINT64_MAX - (BigNumber::kLimbBase - 1)) / BigNumber::kLimbBase;

} // namespace

BigNumber::BigNumber(uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<uint32_t>(value % kLimbBase));
        value /= kLimbBase;
    }
}

BigNumber BigNumber::from_decimal(std::string_view digits) {
    if (digits.empty())
        throw std::invalid_argument("BigNumber::from_decimal: empty string");
    BigNumber result;
    size_t pos = 0;
    // Leading partial limb, then full 9-digit groups.
    size_t head = digits.size() % kLimbDigits;
    if (head == 0)
        head = kLimbDigits;
    while (pos < digits.size()) {
        size_t take = (pos == 0) ? head : kLimbDigits;
        uint32_t group = 0;
        for (size_t i = 0; i < take; ++i) {
            char c = digits[pos + i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigNumber::from_decimal: non-digit character");
            group = group * 10 + static_cast<uint32_t>(c - '0');
        }
        result.mul_add_small(pos == 0 ? 1 : kLimbBase, group);
        pos += take;
    }
    return result;
}

BigNumber BigNumber::pow10(uint32_t exponent) {
    BigNumber result(1);
    result.shift_digits_left(exponent);
    return result;
}

uint32_t BigNumber::digit_count() const noexcept {
    if (limbs_.empty())
        return 1;
    uint32_t top = limbs_.back();
    uint32_t digits = 0;
    while (top != 0) {
        ++digits;
        top /= 10;
    }
    return digits + kLimbDigits * static_cast<uint32_t>(limbs_.size() - 1);
}

std::string BigNumber::to_decimal() const {
    if (limbs_.empty())
        return "0";
    std::string out = std::to_string(limbs_.back());
    char buf[kLimbDigits + 1];
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        uint32_t limb = limbs_[i];
        for (int d = kLimbDigits - 1; d >= 0; --d) {
            buf[d] = static_cast<char>('0' + limb % 10);
            limb /= 10;
        }
        out.append(buf, kLimbDigits);
    }
    return out;
}

uint64_t BigNumber::to_u64() const {
    uint64_t value = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (value > (UINT64_MAX - limbs_[i]) / kLimbBase)
            throw std::overflow_error("BigNumber::to_u64: value exceeds 64 bits");
        value = value * kLimbBase + limbs_[i];
    }
    return value;
}

std::strong_ordering BigNumber::operator<=>(const BigNumber& other) const noexcept {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() <=> other.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i])
            return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigNumber& BigNumber::operator+=(const BigNumber& other) {
    limbs_.resize(std::max(limbs_.size(), other.limbs_.size()) + 1, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t cur = static_cast<uint64_t>(limbs_[i]) + carry;
        if (i < other.limbs_.size())
            cur += other.limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur % kLimbBase);
        carry = static_cast<uint32_t>(cur / kLimbBase);
    }
    assert(carry == 0);
    normalize();
    return *this;
}

BigNumber& BigNumber::operator-=(const BigNumber& other) {
    assert(*this >= other);
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t cur = static_cast<int64_t>(limbs_[i]) - borrow;
        if (i < other.limbs_.size())
            cur -= other.limbs_[i];
        if (cur < 0) {
            cur += kLimbBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<uint32_t>(cur);
    }
    assert(borrow == 0);
    normalize();
    return *this;
}

namespace {

// Schoolbook squaring: cross products folded once and doubled.
std::vector<uint32_t> square_limbs(const std::vector<uint32_t>& a) {
    constexpr uint64_t kBase = BigNumber::kLimbBase;
    std::vector<uint32_t> out(a.size() * 2, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        const uint64_t ai = a[i];
        if (ai == 0)
            continue;
        uint64_t cur = out[2 * i] + ai * ai;
        out[2 * i] = static_cast<uint32_t>(cur % kBase);
        uint64_t carry = cur / kBase;
        size_t k = 2 * i + 1;
        for (size_t j = i + 1; j < a.size(); ++j, ++k) {
            cur = out[k] + 2 * (ai * a[j]) + carry;
            out[k] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    return out;
}

} // namespace

BigNumber BigNumber::mul(const BigNumber& a, const BigNumber& b) {
    if (a.is_zero() || b.is_zero())
        return BigNumber();
    BigNumber result;
    if (&a == &b) {
        result.limbs_ = square_limbs(a.limbs_);
        result.normalize();
        return result;
    }
    result.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        if (a.limbs_[i] == 0)
            continue;
        uint64_t carry = 0;
        const uint64_t ai = a.limbs_[i];
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = result.limbs_[i + j] + ai * b.limbs_[j] + carry;
            result.limbs_[i + j] = static_cast<uint32_t>(cur % kLimbBase);
            carry = cur / kLimbBase;
        }
        size_t k = i + b.limbs_.size();
        while (carry != 0) {
            uint64_t cur = result.limbs_[k] + carry;
            result.limbs_[k] = static_cast<uint32_t>(cur % kLimbBase);
            carry = cur / kLimbBase;
            ++k;
        }
    }
    result.normalize();
    return result;
}

void BigNumber::mul_add_small(uint64_t multiplier, uint64_t addend) {
    assert(multiplier <= kSmallOperandMax);
    uint64_t carry = addend;
    for (auto& limb : limbs_) {
        uint64_t cur = limb * multiplier + carry % kLimbBase;
        carry = carry / kLimbBase + cur / kLimbBase;
        limb = static_cast<uint32_t>(cur % kLimbBase);
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<uint32_t>(carry % kLimbBase));
        carry /= kLimbBase;
    }
    normalize();
}

uint64_t BigNumber::divmod_small(uint64_t divisor) {
    assert(divisor >= 1 && divisor <= kSmallOperandMax);
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = rem * kLimbBase + limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    normalize();
    return rem;
}

void BigNumber::shift_digits_left(uint32_t count) {
    if (is_zero() || count == 0)
        return;
    uint32_t whole = count / kLimbDigits;
    uint32_t part = count % kLimbDigits;
    if (part != 0) {
        uint32_t factor = 1;
        for (uint32_t i = 0; i < part; ++i)
            factor *= 10;
        mul_add_small(factor, 0);
    }
    if (whole != 0)
        limbs_.insert(limbs_.begin(), whole, 0);
}

void BigNumber::shift_digits_right(uint32_t count) {
    if (is_zero() || count == 0)
        return;
    uint32_t whole = count / kLimbDigits;
    uint32_t part = count % kLimbDigits;
    if (whole >= limbs_.size()) {
        limbs_.clear();
        return;
    }
    if (whole != 0)
        limbs_.erase(limbs_.begin(), limbs_.begin() + whole);
    if (part != 0) {
        uint32_t factor = 1;
        for (uint32_t i = 0; i < part; ++i)
            factor *= 10;
        divmod_small(factor);
    }
    normalize();
}

void BigNumber::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
}

} // namespace lppie
