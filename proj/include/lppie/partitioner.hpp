#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lppie {

/// One run of decimal digits plus its original length. digits may be shorter
/// than digit_len when it was re-rendered from a value; reassemble() restores
/// the zero padding.
struct Chunk {
    std::string digits;
    uint32_t digit_len = 0;
};

/// Ordered split of a block's digit string. Concatenating the (zero-padded)
/// chunks reproduces the source string exactly.
struct ChunkPlan {
    std::vector<Chunk> chunks;
    uint32_t chunk_digits = 0; // the size parameter k used to build the plan
};

/// Greedy left-to-right split into ceil(|s|/k) chunks; every chunk except
/// possibly the last has exactly k digits. Throws InvalidChunkSize when k is
/// zero.
ChunkPlan partition(std::string_view digits, uint32_t chunk_digits);

/// Inverse of partition: left-pads every chunk with zeros to digit_len and
/// concatenates. Throws ChunkOverflow when a chunk's digits exceed its
/// recorded length.
std::string reassemble(const ChunkPlan& plan);

} // namespace lppie
