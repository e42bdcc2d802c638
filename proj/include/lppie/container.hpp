#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lppie/iterlog.hpp"
#include "lppie/sha256.hpp"

namespace lppie {

/// Encoder configuration. jobs > 1 enables the OpenMP block/chunk kernels;
/// the emitted bytes are identical either way.
struct CodecConfig {
    uint32_t block_size = 4096;
    uint32_t chunk_digits = 64;
    bool single_block = false;
    PrecisionPolicy policy{};
    int jobs = 1;
};

struct DecodeOptions {
    PrecisionPolicy policy{};
    int jobs = 1;
};

/// Fixed 58-byte container header.
struct ContainerHeader {
    static constexpr std::array<uint8_t, 4> kMagic{'L', 'P', 'P', 'I'};
    static constexpr uint8_t kVersion = 0x01;
    static constexpr uint8_t kFlagSingleBlock = 0x01;
    static constexpr size_t kSize = 58;

    uint8_t flags = 0;
    uint32_t block_size = 0;
    uint32_t chunk_digits = 0;
    uint64_t original_len = 0;
    Sha256Digest original_sha256{};
    uint32_t block_count = 0;

    bool single_block() const noexcept { return (flags & kFlagSingleBlock) != 0; }
};

/// Container parsed down to records, before any numeric work.
struct ParsedContainer {
    ContainerHeader header;
    std::vector<std::vector<IterLogRecord>> blocks;
};

/// Per-chunk instrumentation row, in stream order.
struct ChunkAudit {
    uint32_t digit_len = 0;
    uint8_t r = 0;
    uint32_t mantissa_len = 0;
};

struct VerifyResult {
    bool match = false;
    Sha256Digest original_hash{};
    Sha256Digest stored_hash{};
};

/// Compresses input into a container. Every chunk is self-verified before
/// emission; the header carries the SHA-256 of the whole input. When audit is
/// non-null it receives one row per chunk in stream order.
std::vector<uint8_t> compress_stream(std::span<const uint8_t> input, const CodecConfig& config,
                                     std::vector<ChunkAudit>* audit = nullptr);

/// Inverts a container back to the original bytes. Recomputes SHA-256 and
/// compares it with the stored hash; every chunk record must also be the
/// canonical encoding of its decoded value, so corruption is always a typed
/// error, never silent output.
std::vector<uint8_t> decompress_stream(std::span<const uint8_t> container, const DecodeOptions& options = {});

/// Hash comparison without decompressing.
VerifyResult verify_integrity(std::span<const uint8_t> original, std::span<const uint8_t> container);

/// Structural parse: header validation, record bounds, digit-sum sanity.
/// Total over arbitrary bytes — either returns or throws a typed error.
ParsedContainer parse_container(std::span<const uint8_t> container);

// The block kernels underneath compress/decompress. The serial forms are the
// reference implementation; the parallel forms must produce byte-identical
// results and exist for throughput. Exposed for the equivalence tests and the
// parbench tool.
std::vector<std::vector<IterLogRecord>> encode_blocks_serial(std::span<const uint8_t> input,
                                                             const CodecConfig& config);
std::vector<std::vector<IterLogRecord>> encode_blocks_parallel(std::span<const uint8_t> input,
                                                               const CodecConfig& config, int jobs);
std::vector<uint8_t> decode_blocks_serial(const ParsedContainer& parsed, const DecodeOptions& options);
std::vector<uint8_t> decode_blocks_parallel(const ParsedContainer& parsed, const DecodeOptions& options,
                                            int jobs);

} // namespace lppie
