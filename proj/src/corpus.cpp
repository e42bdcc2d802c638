#include "lppie/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <random>

#include "lppie/io.hpp"

namespace lppie {

namespace {

// Raw engine draws with modulo instead of std distributions: mt19937_64 is
// pinned by the standard, the distributions are not, and corpus bytes must be
// identical everywhere.
uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

std::vector<uint8_t> text_like(size_t size, std::mt19937_64& rng) {
    static const char* kLetters = "etaoinshrdlcumwfgypbvkjxqz";
    std::vector<uint8_t> out;
    out.reserve(size);
    while (out.size() < size) {
        size_t word_len = 1 + draw(rng, 11);
        for (size_t i = 0; i < word_len && out.size() < size; ++i) {
            // Quadratic skew toward frequent letters.
            size_t idx = draw(rng, 26) * draw(rng, 26) / 26;
            char c = kLetters[idx];
            if (i == 0 && draw(rng, 12) == 0)
                c = static_cast<char>(c - 'a' + 'A');
            out.push_back(static_cast<uint8_t>(c));
        }
        if (out.size() < size) {
            uint64_t sep = draw(rng, 16);
            if (sep == 0)
                out.push_back('.');
            if (out.size() < size)
                out.push_back(sep == 1 ? '\n' : ' ');
        }
    }
    return out;
}

} // namespace

const char* corpus_pattern_name(CorpusPattern pattern) {
    switch (pattern) {
    case CorpusPattern::Random: return "random";
    case CorpusPattern::Zeros: return "zeros";
    case CorpusPattern::Ones: return "ones";
    case CorpusPattern::RepeatByte: return "repeat-byte";
    case CorpusPattern::RepeatPattern: return "repeat-pattern";
    case CorpusPattern::TextLike: return "text";
    }
    return "unknown";
}

std::vector<uint8_t> make_corpus_blob(CorpusPattern pattern, size_t size, uint64_t seed) {
    std::mt19937_64 rng(seed);
    switch (pattern) {
    case CorpusPattern::Random: {
        std::vector<uint8_t> out(size);
        size_t i = 0;
        while (i + 8 <= size) {
            uint64_t word = rng();
            for (int b = 0; b < 8; ++b)
                out[i++] = static_cast<uint8_t>(word >> (8 * b));
        }
        for (uint64_t word = rng(); i < size; ++i, word >>= 8)
            out[i] = static_cast<uint8_t>(word);
        return out;
    }
    case CorpusPattern::Zeros:
        return std::vector<uint8_t>(size, 0x00);
    case CorpusPattern::Ones:
        return std::vector<uint8_t>(size, 0xFF);
    case CorpusPattern::RepeatByte:
        return std::vector<uint8_t>(size, static_cast<uint8_t>(draw(rng, 256)));
    case CorpusPattern::RepeatPattern: {
        size_t motif_len = 2 + draw(rng, 15);
        std::vector<uint8_t> motif(motif_len);
        for (auto& b : motif)
            b = static_cast<uint8_t>(draw(rng, 256));
        std::vector<uint8_t> out(size);
        for (size_t i = 0; i < size; ++i)
            out[i] = motif[i % motif_len];
        return out;
    }
    case CorpusPattern::TextLike:
        return text_like(size, rng);
    }
    return {};
}

std::vector<CorpusFileSpec> corpus_schedule(size_t count, size_t max_size, uint64_t seed) {
    static constexpr CorpusPattern kPatterns[] = {
        CorpusPattern::Random,       CorpusPattern::Zeros,       CorpusPattern::Ones,
        CorpusPattern::RepeatByte,   CorpusPattern::RepeatPattern, CorpusPattern::TextLike,
    };
    static constexpr size_t kBoundarySizes[] = {0,   1,    2,    3,    4,    5,    7,    8,    9,
                                                15,  16,   17,   63,   64,   65,   255,  256,  257,
                                                511, 1023, 1024, 4095, 4096, 4097, 8191, 8192, 12288};

    std::mt19937_64 rng(seed);
    std::vector<CorpusFileSpec> specs;
    specs.reserve(count + std::size(kBoundarySizes));

    auto add = [&](size_t size) {
        size_t index = specs.size();
        CorpusPattern pattern = kPatterns[index % std::size(kPatterns)];
        CorpusFileSpec spec;
        spec.pattern = pattern;
        spec.size = std::min(size, max_size);
        spec.seed = rng();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%03zu_%s_%zu.bin", index, corpus_pattern_name(pattern), spec.size);
        spec.name = buf;
        specs.push_back(std::move(spec));
    };

    for (size_t size : kBoundarySizes)
        add(size);
    add(max_size); // at least one file at the full size

    // Log-distributed sizes so small files dominate but large ones occur;
    // integer-only so the schedule is identical on every platform. The
    // explicit max_size file above covers the top of the range.
    unsigned span_bits = 1;
    while ((size_t(1) << (span_bits + 1)) < max_size)
        ++span_bits;
    while (specs.size() < count) {
        unsigned exponent = static_cast<unsigned>(rng() % span_bits);
        size_t base = size_t(1) << exponent;
        add(base + rng() % base + rng() % 3 - 1);
    }
    return specs;
}

void write_corpus(const std::filesystem::path& dir, const std::vector<CorpusFileSpec>& specs) {
    std::filesystem::create_directories(dir);
    for (const auto& spec : specs)
        write_file(dir / spec.name, make_corpus_blob(spec.pattern, spec.size, spec.seed));
}

} // namespace lppie
