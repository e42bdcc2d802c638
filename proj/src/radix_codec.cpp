#include "lppie/radix_codec.hpp"

#include "lppie/error.hpp"

namespace lppie {

BigNumber bytes_to_bignumber(std::span<const uint8_t> block) {
    if (block.empty())
        raise(ErrorCode::EmptyBlock, "cannot convert an empty block");

    // Stream 0x01 || block most-significant first, folding four bytes per
    // multiply to keep the pass cheap.
    BigNumber n(kSentinelByte);
    size_t i = 0;
    while (i + 4 <= block.size()) {
        uint64_t word = (static_cast<uint64_t>(block[i]) << 24) |
                        (static_cast<uint64_t>(block[i + 1]) << 16) |
                        (static_cast<uint64_t>(block[i + 2]) << 8) |
                        static_cast<uint64_t>(block[i + 3]);
        n.mul_add_small(uint64_t(1) << 32, word);
        i += 4;
    }
    for (; i < block.size(); ++i)
        n.mul_add_small(256, block[i]);
    return n;
}

std::vector<uint8_t> bignumber_to_bytes(const BigNumber& n, size_t block_len) {
    const size_t total = block_len + 1; // sentinel included
    std::vector<uint8_t> out(total, 0);

    BigNumber work = n;
    size_t pos = total;
    while (pos >= 4) {
        uint64_t word = work.divmod_small(uint64_t(1) << 32);
        out[pos - 1] = static_cast<uint8_t>(word);
        out[pos - 2] = static_cast<uint8_t>(word >> 8);
        out[pos - 3] = static_cast<uint8_t>(word >> 16);
        out[pos - 4] = static_cast<uint8_t>(word >> 24);
        pos -= 4;
    }
    while (pos > 0) {
        out[pos - 1] = static_cast<uint8_t>(work.divmod_small(256));
        --pos;
    }

    if (!work.is_zero())
        raise(ErrorCode::CorruptValue, "value has more than " + std::to_string(total) + " base-256 bytes");
    if (out[0] != kSentinelByte)
        raise(ErrorCode::CorruptValue, "decoded block does not start with the sentinel byte");

    out.erase(out.begin());
    return out;
}

std::string bignumber_to_digits(const BigNumber& n) {
    return n.to_decimal();
}

BigNumber digits_to_bignumber(std::string_view digits) {
    if (digits.empty())
        raise(ErrorCode::MalformedDigits, "empty digit string");
    for (char c : digits) {
        if (c < '0' || c > '9')
            raise(ErrorCode::MalformedDigits, std::string("non-digit character '") + c + "'");
    }
    return BigNumber::from_decimal(digits);
}

} // namespace lppie
