#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lppie {

/// Synthetic corpus flavors: incompressible noise, degenerate fills, short
/// repeating motifs and English-looking text. Generation is fully
/// deterministic in (pattern, size, seed) on every platform.
enum class CorpusPattern {
    Random,
    Zeros,
    Ones,
    RepeatByte,
    RepeatPattern,
    TextLike,
};

const char* corpus_pattern_name(CorpusPattern pattern);

std::vector<uint8_t> make_corpus_blob(CorpusPattern pattern, size_t size, uint64_t seed);

struct CorpusFileSpec {
    std::string name;
    CorpusPattern pattern;
    size_t size = 0;
    uint64_t seed = 0;
};

/// A deterministic schedule of at least `count` files: a fixed set of
/// boundary sizes (0, 1, block edges, ...) followed by log-distributed random
/// sizes up to max_size, cycling through all patterns. Always includes at
/// least one file of exactly max_size.
std::vector<CorpusFileSpec> corpus_schedule(size_t count, size_t max_size, uint64_t seed);

/// Materializes a schedule under dir (created if needed).
void write_corpus(const std::filesystem::path& dir, const std::vector<CorpusFileSpec>& specs);

} // namespace lppie
