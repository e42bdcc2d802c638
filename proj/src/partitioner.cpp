#include "lppie/partitioner.hpp"

#include "lppie/error.hpp"

namespace lppie {

ChunkPlan partition(std::string_view digits, uint32_t chunk_digits) {
    if (chunk_digits == 0)
        raise(ErrorCode::InvalidChunkSize, "chunk size must be at least 1 digit");

    ChunkPlan plan;
    plan.chunk_digits = chunk_digits;
    plan.chunks.reserve((digits.size() + chunk_digits - 1) / chunk_digits);
    for (size_t pos = 0; pos < digits.size(); pos += chunk_digits) {
        size_t take = std::min<size_t>(chunk_digits, digits.size() - pos);
        plan.chunks.push_back({std::string(digits.substr(pos, take)), static_cast<uint32_t>(take)});
    }
    return plan;
}

std::string reassemble(const ChunkPlan& plan) {
    size_t total = 0;
    for (const auto& chunk : plan.chunks)
        total += chunk.digit_len;

    std::string out;
    out.reserve(total);
    for (size_t i = 0; i < plan.chunks.size(); ++i) {
        const auto& chunk = plan.chunks[i];
        if (chunk.digits.size() > chunk.digit_len)
            raise(ErrorCode::ChunkOverflow,
                  "chunk " + std::to_string(i) + " renders to " + std::to_string(chunk.digits.size()) +
                      " digits, recorded length is " + std::to_string(chunk.digit_len));
        out.append(chunk.digit_len - chunk.digits.size(), '0');
        out.append(chunk.digits);
    }
    return out;
}

} // namespace lppie
