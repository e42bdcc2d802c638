#include "lppie/container.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <mutex>
#include <stdexcept>

#include "lppie/error.hpp"
#include "lppie/partitioner.hpp"
#include "lppie/radix_codec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lppie {

namespace {

// Reader ceilings. Legitimate encoders stay far below them; they bound the
// work a hostile container can demand before validation fails.
constexpr uint32_t kMaxChunkDigits = 1'000'000;
constexpr uint32_t kMaxMantissaSlack = 160;

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 24));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

class Reader {
public:
    explicit Reader(std::span<const uint8_t> data) : data_(data) {}

    size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }

    void need(size_t n, const char* what) {
        if (remaining() < n)
            raise(ErrorCode::CorruptValue, std::string("container truncated while reading ") + what);
    }

    uint8_t u8(const char* what) {
        need(1, what);
        return data_[pos_++];
    }

    uint32_t u32(const char* what) {
        need(4, what);
        uint32_t v = static_cast<uint32_t>(data_[pos_]) | (static_cast<uint32_t>(data_[pos_ + 1]) << 8) |
                     (static_cast<uint32_t>(data_[pos_ + 2]) << 16) |
                     (static_cast<uint32_t>(data_[pos_ + 3]) << 24);
        pos_ += 4;
        return v;
    }

    uint64_t u64(const char* what) {
        need(8, what);
        uint64_t v = 0;
        for (int i = 7; i >= 0; --i)
            v = (v << 8) | data_[pos_ + i];
        pos_ += 8;
        return v;
    }

    std::span<const uint8_t> bytes(size_t n, const char* what) {
        need(n, what);
        auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

private:
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

// Expected decimal digit count for a block of block_len bytes, with the
// sentinel included: the value lies in [256^L, 2*256^L). Evaluated in long
// double with two digits of slack each way; this is a sanity fence against
// garbage records, not an exact bound.
std::pair<uint64_t, uint64_t> digit_window(uint64_t block_len) {
    const long double log10_2 = 0.301029995663981195213738894724L;
    long double bits = 8.0L * static_cast<long double>(block_len + 1);
    uint64_t lo = static_cast<uint64_t>(std::ceil((bits - 7.0L) * log10_2));
    uint64_t hi = static_cast<uint64_t>(std::ceil(bits * log10_2)) + 1;
    return {lo > 2 ? lo - 2 : 1, hi + 2};
}

uint64_t block_length(const ContainerHeader& header, uint32_t block_index) {
    if (header.single_block())
        return header.original_len;
    if (block_index + 1 < header.block_count)
        return header.block_size;
    return header.original_len - static_cast<uint64_t>(header.block_size) * (header.block_count - 1);
}

std::string chunk_context(size_t block, size_t chunk) {
    return "block " + std::to_string(block) + ", chunk " + std::to_string(chunk);
}

IterLogRecord encode_chunk(const Chunk& chunk, const PrecisionPolicy& policy) {
    return iterlog_forward(digits_to_bignumber(chunk.digits), chunk.digit_len, policy);
}

std::vector<IterLogRecord> encode_block(std::span<const uint8_t> bytes, uint32_t chunk_digits,
                                        const PrecisionPolicy& policy) {
    ChunkPlan plan = partition(bignumber_to_digits(bytes_to_bignumber(bytes)), chunk_digits);
    std::vector<IterLogRecord> records;
    records.reserve(plan.chunks.size());
    for (const auto& chunk : plan.chunks)
        records.push_back(encode_chunk(chunk, policy));
    return records;
}

BigNumber decode_chunk_value(const IterLogRecord& record, const PrecisionPolicy& policy) {
    BigNumber value = iterlog_invert(record, policy);
    // A record must be the canonical encoding of its value; anything else is
    // tampering even when the value itself survives.
    if (iterlog_forward(value, record.digit_len, policy) != record)
        raise(ErrorCode::CorruptValue, "record is not the canonical encoding of its value");
    return value;
}

std::vector<uint8_t> decode_block(const std::vector<IterLogRecord>& records, uint64_t block_len,
                                  const PrecisionPolicy& policy, size_t block_index) {
    ChunkPlan plan;
    plan.chunks.reserve(records.size());
    for (size_t j = 0; j < records.size(); ++j) {
        try {
            BigNumber value = decode_chunk_value(records[j], policy);
            plan.chunks.push_back({value.to_decimal(), records[j].digit_len});
        } catch (const CodecError& e) {
            throw CodecError(e.code(), chunk_context(block_index, j) + ": " + e.detail());
        }
    }
    try {
        return bignumber_to_bytes(digits_to_bignumber(reassemble(plan)), block_len);
    } catch (const CodecError& e) {
        throw CodecError(e.code(), "block " + std::to_string(block_index) + ": " + e.detail());
    }
}

struct BlockSplit {
    uint64_t count = 0;
    uint64_t size = 0; // bytes per block except possibly the last
};

BlockSplit split_input(size_t input_len, const CodecConfig& config) {
    if (config.single_block)
        return {input_len == 0 ? 0ull : 1ull, static_cast<uint64_t>(input_len)};
    uint64_t count = (static_cast<uint64_t>(input_len) + config.block_size - 1) / config.block_size;
    return {count, config.block_size};
}

void validate_config(const CodecConfig& config) {
    if (config.block_size == 0)
        throw std::invalid_argument("block_size must be at least 1");
    if (config.chunk_digits == 0)
        raise(ErrorCode::InvalidChunkSize, "chunk size must be at least 1 digit");
    if (config.chunk_digits > kMaxChunkDigits)
        raise(ErrorCode::InvalidChunkSize,
              "chunk size beyond the supported maximum of " + std::to_string(kMaxChunkDigits));
}

// First-failing-index exception capture for the OpenMP loops; rethrown after
// the join so the surfaced error does not depend on thread scheduling.
class FirstError {
public:
    void capture(size_t index) {
        std::lock_guard lock(mutex_);
        if (!error_ || index < index_) {
            error_ = std::current_exception();
            index_ = index;
        }
    }
    bool failed() const { return static_cast<bool>(error_); }
    [[noreturn]] void rethrow() const { std::rethrow_exception(error_); }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
    size_t index_ = SIZE_MAX;
};

} // namespace

std::vector<std::vector<IterLogRecord>> encode_blocks_serial(std::span<const uint8_t> input,
                                                             const CodecConfig& config) {
    validate_config(config);
    const BlockSplit split = split_input(input.size(), config);
    std::vector<std::vector<IterLogRecord>> blocks(split.count);
    for (uint64_t i = 0; i < split.count; ++i) {
        uint64_t offset = i * split.size;
        uint64_t len = std::min<uint64_t>(split.size, input.size() - offset);
        blocks[i] = encode_block(input.subspan(offset, len), config.chunk_digits, config.policy);
    }
    return blocks;
}

std::vector<std::vector<IterLogRecord>> encode_blocks_parallel(std::span<const uint8_t> input,
                                                               const CodecConfig& config, int jobs) {
#ifndef _OPENMP
    (void)jobs;
    return encode_blocks_serial(input, config);
#else
    validate_config(config);
    const BlockSplit split = split_input(input.size(), config);
    std::vector<std::vector<IterLogRecord>> blocks(split.count);
    FirstError error;

    if (split.count == 1) {
        // One block: parallelism lives at the chunk level.
        ChunkPlan plan = partition(bignumber_to_digits(bytes_to_bignumber(input)), config.chunk_digits);
        auto& records = blocks[0];
        records.resize(plan.chunks.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long j = 0; j < static_cast<long>(plan.chunks.size()); ++j) {
            try {
                records[j] = encode_chunk(plan.chunks[j], config.policy);
            } catch (...) {
                error.capture(static_cast<size_t>(j));
            }
        }
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long i = 0; i < static_cast<long>(split.count); ++i) {
            try {
                uint64_t offset = static_cast<uint64_t>(i) * split.size;
                uint64_t len = std::min<uint64_t>(split.size, input.size() - offset);
                blocks[i] = encode_block(input.subspan(offset, len), config.chunk_digits, config.policy);
            } catch (...) {
                error.capture(static_cast<size_t>(i));
            }
        }
    }
    if (error.failed())
        error.rethrow();
    return blocks;
#endif
}

std::vector<uint8_t> decode_blocks_serial(const ParsedContainer& parsed, const DecodeOptions& options) {
    const ContainerHeader& header = parsed.header;
    std::vector<uint8_t> out(header.original_len);
    for (uint32_t i = 0; i < header.block_count; ++i) {
        uint64_t len = block_length(header, i);
        std::vector<uint8_t> bytes = decode_block(parsed.blocks[i], len, options.policy, i);
        std::copy(bytes.begin(), bytes.end(), out.begin() + static_cast<uint64_t>(header.block_size) * i);
    }
    return out;
}

std::vector<uint8_t> decode_blocks_parallel(const ParsedContainer& parsed, const DecodeOptions& options,
                                            int jobs) {
#ifndef _OPENMP
    (void)jobs;
    return decode_blocks_serial(parsed, options);
#else
    const ContainerHeader& header = parsed.header;
    std::vector<uint8_t> out(header.original_len);
    FirstError error;

    if (header.block_count == 1) {
        // Chunk-level parallel invert, then one serial reassembly pass.
        const auto& records = parsed.blocks[0];
        std::vector<BigNumber> values(records.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long j = 0; j < static_cast<long>(records.size()); ++j) {
            try {
                values[j] = decode_chunk_value(records[j], options.policy);
            } catch (const CodecError& e) {
                try {
                    throw CodecError(e.code(), chunk_context(0, static_cast<size_t>(j)) + ": " + e.detail());
                } catch (...) {
                    error.capture(static_cast<size_t>(j));
                }
            } catch (...) {
                error.capture(static_cast<size_t>(j));
            }
        }
        if (error.failed())
            error.rethrow();

        ChunkPlan plan;
        plan.chunks.reserve(records.size());
        for (size_t j = 0; j < records.size(); ++j)
            plan.chunks.push_back({values[j].to_decimal(), records[j].digit_len});
        try {
            std::vector<uint8_t> bytes =
                bignumber_to_bytes(digits_to_bignumber(reassemble(plan)), block_length(header, 0));
            std::copy(bytes.begin(), bytes.end(), out.begin());
        } catch (const CodecError& e) {
            throw CodecError(e.code(), "block 0: " + e.detail());
        }
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long i = 0; i < static_cast<long>(header.block_count); ++i) {
            try {
                uint64_t len = block_length(header, static_cast<uint32_t>(i));
                std::vector<uint8_t> bytes =
                    decode_block(parsed.blocks[i], len, options.policy, static_cast<size_t>(i));
                std::copy(bytes.begin(), bytes.end(),
                          out.begin() + static_cast<uint64_t>(header.block_size) * i);
            } catch (...) {
                error.capture(static_cast<size_t>(i));
            }
        }
        if (error.failed())
            error.rethrow();
    }
    return out;
#endif
}

std::vector<uint8_t> compress_stream(std::span<const uint8_t> input, const CodecConfig& config,
                                     std::vector<ChunkAudit>* audit) {
    validate_config(config);

    std::vector<std::vector<IterLogRecord>> blocks =
        (config.jobs > 1) ? encode_blocks_parallel(input, config, config.jobs)
                          : encode_blocks_serial(input, config);

    if (audit) {
        audit->clear();
        for (const auto& block : blocks)
            for (const auto& rec : block)
                audit->push_back({rec.digit_len, rec.r, rec.mantissa_len()});
    }

    const BlockSplit split = split_input(input.size(), config);
    if (split.count > UINT32_MAX)
        raise(ErrorCode::CorruptValue, "input needs more than 2^32 blocks");

    std::vector<uint8_t> out;
    out.reserve(ContainerHeader::kSize + input.size() / 2);
    out.insert(out.end(), ContainerHeader::kMagic.begin(), ContainerHeader::kMagic.end());
    out.push_back(ContainerHeader::kVersion);
    out.push_back(config.single_block ? ContainerHeader::kFlagSingleBlock : 0);
    put_u32(out, config.block_size);
    put_u32(out, config.chunk_digits);
    put_u64(out, input.size());
    Sha256Digest digest = sha256(input);
    out.insert(out.end(), digest.begin(), digest.end());
    put_u32(out, static_cast<uint32_t>(split.count));

    for (const auto& block : blocks) {
        put_u32(out, static_cast<uint32_t>(block.size()));
        for (const auto& rec : block) {
            put_u32(out, rec.digit_len);
            out.push_back(rec.r);
            put_u32(out, rec.mantissa_len());
            const std::string& m = rec.mantissa;
            for (size_t i = 0; i < m.size(); i += 2) {
                uint8_t hi = static_cast<uint8_t>(m[i] - '0');
                uint8_t lo = (i + 1 < m.size()) ? static_cast<uint8_t>(m[i + 1] - '0') : 0xF;
                out.push_back(static_cast<uint8_t>((hi << 4) | lo));
            }
        }
    }
    return out;
}

ParsedContainer parse_container(std::span<const uint8_t> container) {
    if (container.size() < ContainerHeader::kSize)
        raise(ErrorCode::UnsupportedFormat, "container shorter than the 58-byte header");

    Reader reader(container);
    auto magic = reader.bytes(4, "magic");
    if (!std::equal(magic.begin(), magic.end(), ContainerHeader::kMagic.begin()))
        raise(ErrorCode::UnsupportedFormat, "bad magic, not an LPPI container");
    uint8_t version = reader.u8("version");
    if (version != ContainerHeader::kVersion)
        raise(ErrorCode::UnsupportedFormat, "unsupported version " + std::to_string(version));

    ParsedContainer parsed;
    ContainerHeader& header = parsed.header;
    header.flags = reader.u8("flags");
    if ((header.flags & ~ContainerHeader::kFlagSingleBlock) != 0)
        raise(ErrorCode::UnsupportedFormat, "unknown flag bits set");
    header.block_size = reader.u32("block_size");
    header.chunk_digits = reader.u32("chunk_digits");
    header.original_len = reader.u64("original_len");
    auto hash = reader.bytes(32, "original_sha256");
    std::copy(hash.begin(), hash.end(), header.original_sha256.begin());
    header.block_count = reader.u32("block_count");

    if (header.block_size == 0)
        raise(ErrorCode::CorruptValue, "block_size is zero");
    if (header.chunk_digits == 0 || header.chunk_digits > kMaxChunkDigits)
        raise(ErrorCode::CorruptValue, "chunk_digits outside the supported range");
    if ((header.original_len == 0) != (header.block_count == 0))
        raise(ErrorCode::CorruptValue, "original_len and block_count disagree about emptiness");

    uint64_t expected_blocks =
        header.single_block()
            ? (header.original_len == 0 ? 0 : 1)
            : (header.original_len + header.block_size - 1) / header.block_size;
    if (expected_blocks != header.block_count)
        raise(ErrorCode::CorruptValue, "block_count does not match original_len and block_size");

    parsed.blocks.resize(header.block_count);
    for (uint32_t i = 0; i < header.block_count; ++i) {
        uint32_t chunk_count = reader.u32("chunk_count");
        if (chunk_count == 0)
            raise(ErrorCode::CorruptValue, "block " + std::to_string(i) + " has no chunks");

        auto& records = parsed.blocks[i];
        records.reserve(std::min<size_t>(chunk_count, reader.remaining() / 9));
        uint64_t digit_sum = 0;
        for (uint32_t j = 0; j < chunk_count; ++j) {
            IterLogRecord rec;
            rec.digit_len = reader.u32("digit_len");
            rec.r = reader.u8("r");
            uint32_t mantissa_len = reader.u32("mantissa_len");

            if (rec.digit_len == 0 || rec.digit_len > header.chunk_digits)
                raise(ErrorCode::CorruptValue, chunk_context(i, j) + ": digit_len outside [1, chunk_digits]");
            if (j + 1 < chunk_count && rec.digit_len != header.chunk_digits)
                raise(ErrorCode::CorruptValue, chunk_context(i, j) + ": non-final chunk must be full");
            if (rec.r > 2)
                raise(ErrorCode::CorruptValue, chunk_context(i, j) + ": loop count above 2");
            if (mantissa_len == 0 ||
                mantissa_len > static_cast<uint64_t>(rec.digit_len) + kMaxMantissaSlack)
                raise(ErrorCode::CorruptValue, chunk_context(i, j) + ": implausible mantissa length");
            if (rec.r == 0 && mantissa_len != 1)
                raise(ErrorCode::CorruptValue, chunk_context(i, j) + ": single-digit chunk with long mantissa");

            auto packed = reader.bytes((mantissa_len + 1) / 2, "mantissa");
            rec.mantissa.reserve(mantissa_len);
            for (uint32_t d = 0; d < mantissa_len; ++d) {
                uint8_t byte = packed[d / 2];
                uint8_t nibble = (d % 2 == 0) ? (byte >> 4) : (byte & 0xF);
                if (nibble > 9)
                    raise(ErrorCode::CorruptValue, chunk_context(i, j) + ": non-decimal mantissa nibble");
                rec.mantissa.push_back(static_cast<char>('0' + nibble));
            }
            if (mantissa_len % 2 == 1 && (packed[mantissa_len / 2] & 0xF) != 0xF)
                raise(ErrorCode::CorruptValue, chunk_context(i, j) + ": mantissa pad nibble is not 0xF");
            if (rec.r >= 1 && rec.mantissa.front() == '0')
                raise(ErrorCode::CorruptValue, chunk_context(i, j) + ": transformed chunk mantissa starts with 0");

            digit_sum += rec.digit_len;
            records.push_back(std::move(rec));
        }

        auto [lo, hi] = digit_window(block_length(header, i));
        if (digit_sum < lo || digit_sum > hi)
            raise(ErrorCode::CorruptValue, "block " + std::to_string(i) + ": digit total " +
                                               std::to_string(digit_sum) +
                                               " outside the plausible window for its byte length");
    }

    if (!reader.done())
        raise(ErrorCode::CorruptValue, std::to_string(reader.remaining()) + " trailing bytes after the last block");
    return parsed;
}

std::vector<uint8_t> decompress_stream(std::span<const uint8_t> container, const DecodeOptions& options) {
    ParsedContainer parsed = parse_container(container);

    std::vector<uint8_t> out = (options.jobs > 1)
                                   ? decode_blocks_parallel(parsed, options, options.jobs)
                                   : decode_blocks_serial(parsed, options);

    Sha256Digest actual = sha256(out);
    if (actual != parsed.header.original_sha256)
        raise(ErrorCode::IntegrityFailure, "decoded data hashes to " + sha256_hex(actual) +
                                               ", container records " +
                                               sha256_hex(parsed.header.original_sha256));
    return out;
}

VerifyResult verify_integrity(std::span<const uint8_t> original, std::span<const uint8_t> container) {
    ParsedContainer parsed = parse_container(container);
    VerifyResult result;
    result.original_hash = sha256(original);
    result.stored_hash = parsed.header.original_sha256;
    result.match = (result.original_hash == result.stored_hash);
    return result;
}

} // namespace lppie
