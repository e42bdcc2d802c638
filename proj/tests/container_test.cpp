#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "lppie/container.hpp"
#include "lppie/corpus.hpp"
#include "lppie/error.hpp"
#include "lppie/sha256.hpp"

using namespace lppie;

namespace {

std::string to_hex(std::span<const uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

std::vector<uint8_t> bytes_of(const std::string& text) {
    return std::vector<uint8_t>(text.begin(), text.end());
}

bool round_trips(const std::vector<uint8_t>& input, const CodecConfig& cfg) {
    std::vector<uint8_t> container = compress_stream(input, cfg);
    DecodeOptions dec;
    dec.policy = cfg.policy;
    if (decompress_stream(container, dec) != input)
        return false;
    return verify_integrity(input, container).match;
}

} // namespace

TEST_CASE("empty input yields the 58-byte header-only container") {
    std::vector<uint8_t> container = compress_stream({}, CodecConfig{});
    REQUIRE(container.size() == 58);

    ParsedContainer parsed = parse_container(container);
    CHECK(parsed.header.block_count == 0);
    CHECK(parsed.header.original_len == 0);
    CHECK(parsed.header.block_size == 4096);
    CHECK(parsed.header.chunk_digits == 64);
    CHECK(!parsed.header.single_block());
    CHECK(sha256_hex(parsed.header.original_sha256) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");

    CHECK(decompress_stream(container).empty());
    CHECK(verify_integrity({}, container).match);
}

TEST_CASE("one-byte container layout") {
    std::vector<uint8_t> input{0x41};
    std::vector<uint8_t> container = compress_stream(input, CodecConfig{});

    // header 58 + chunk_count 4 + record (4 + 1 + 4 + 3 BCD bytes)
    REQUIRE(container.size() == 74);
    ParsedContainer parsed = parse_container(container);
    CHECK(parsed.header.original_len == 1);
    CHECK(parsed.header.block_count == 1);
    REQUIRE(parsed.blocks.size() == 1);
    REQUIRE(parsed.blocks[0].size() == 1);
    const IterLogRecord& rec = parsed.blocks[0][0];
    CHECK(rec.digit_len == 3); // "321"
    CHECK(rec.r == 1);
    CHECK(rec.mantissa == "25065"); // shortest verified prefix of log10(321)
    CHECK(sha256_hex(parsed.header.original_sha256) ==
          "559aead08264d5795d3909718cdd05abd49572e84fe55590eef31a88a08fdffd");

    CHECK(decompress_stream(container) == input);
}

TEST_CASE("golden container for the one-byte input") {
    // Derived once from the implementation and hand-checked against
    // docs/FORMAT.md; pins the wire format bit-exactly.
    const std::string kGoldenHex =
        "4c505049"                                               // magic "LPPI"
        "01"                                                     // version
        "00"                                                     // flags
        "00100000"                                               // block_size 4096 LE
        "40000000"                                               // chunk_digits 64 LE
        "0100000000000000"                                       // original_len 1 LE
        "559aead08264d5795d3909718cdd05abd49572e84fe55590eef31a88a08fdffd" // SHA-256("A")
        "01000000"                                               // block_count 1
        "01000000"                                               // chunk_count 1
        "03000000"                                               // digit_len 3
        "01"                                                     // r = 1
        "05000000"                                               // mantissa_len 5
        "2506"                                                   // BCD "2506"
        "5f";                                                    // BCD "5" + pad 0xF

    std::vector<uint8_t> container = compress_stream(std::vector<uint8_t>{0x41}, CodecConfig{});
    CHECK(to_hex(container) == kGoldenHex);

    // Byte-identical on repeat runs.
    CHECK(compress_stream(std::vector<uint8_t>{0x41}, CodecConfig{}) == container);
}

TEST_CASE("compression is deterministic") {
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, 10000, 77);
    CodecConfig cfg;
    cfg.chunk_digits = 32;
    std::vector<uint8_t> a = compress_stream(input, cfg);
    std::vector<uint8_t> b = compress_stream(input, cfg);
    CHECK(a == b);
}

TEST_CASE("round trips over adversarial inputs") {
    CodecConfig small;
    small.block_size = 512;
    small.chunk_digits = 16;

    CHECK(round_trips(bytes_of("A"), small));
    CHECK(round_trips(bytes_of("hello, world\n"), small));
    CHECK(round_trips(std::vector<uint8_t>(1, 0x00), small));
    CHECK(round_trips(std::vector<uint8_t>(513, 0x00), small));
    CHECK(round_trips(std::vector<uint8_t>(700, 0xFF), small));
    CHECK(round_trips(make_corpus_blob(CorpusPattern::RepeatPattern, 1200, 3), small));
    CHECK(round_trips(make_corpus_blob(CorpusPattern::Random, 511, 4), small));
    CHECK(round_trips(make_corpus_blob(CorpusPattern::Random, 512, 5), small));
    CHECK(round_trips(make_corpus_blob(CorpusPattern::Random, 1025, 6), small));
    CHECK(round_trips(make_corpus_blob(CorpusPattern::TextLike, 2000, 7), small));
}

TEST_CASE("round trips across chunk sizes") {
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, 600, 99);
    for (uint32_t k : {1u, 2u, 3u, 9u, 10u, 11u, 64u, 100u}) {
        CodecConfig cfg;
        cfg.block_size = 256;
        cfg.chunk_digits = k;
        CHECK(round_trips(input, cfg));
    }
}

TEST_CASE("single-block mode") {
    CodecConfig cfg;
    cfg.single_block = true;
    cfg.chunk_digits = 32;

    for (size_t size : {1u, 100u, 4096u, 5000u}) {
        std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, size, size);
        std::vector<uint8_t> container = compress_stream(input, cfg);
        ParsedContainer parsed = parse_container(container);
        CHECK(parsed.header.single_block());
        CHECK(parsed.header.block_count == 1);
        CHECK(decompress_stream(container) == input);
    }

    // Empty input stays header-only even in single-block mode.
    std::vector<uint8_t> container = compress_stream({}, cfg);
    CHECK(parse_container(container).header.block_count == 0);
}

TEST_CASE("verify_integrity distinguishes originals") {
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, 2048, 123);
    std::vector<uint8_t> container = compress_stream(input, CodecConfig{});

    VerifyResult ok = verify_integrity(input, container);
    CHECK(ok.match);
    CHECK(ok.original_hash == ok.stored_hash);

    std::vector<uint8_t> other = input;
    other[100] ^= 0x01;
    VerifyResult bad = verify_integrity(other, container);
    CHECK(!bad.match);
    CHECK(bad.stored_hash == ok.stored_hash);
}

TEST_CASE("header corruption is typed") {
    std::vector<uint8_t> input = bytes_of("format tests");
    std::vector<uint8_t> container = compress_stream(input, CodecConfig{});

    auto expect_code = [](std::vector<uint8_t> bytes, ErrorCode code) {
        try {
            decompress_stream(bytes);
            FAIL_CHECK("corruption went unnoticed");
        } catch (const CodecError& e) {
            CHECK(e.code() == code);
        }
    };

    std::vector<uint8_t> bad = container;
    bad[0] = 'X'; // magic
    expect_code(bad, ErrorCode::UnsupportedFormat);

    bad = container;
    bad[4] = 0x02; // version
    expect_code(bad, ErrorCode::UnsupportedFormat);

    bad = container;
    bad[5] = 0x80; // unknown flag bits
    expect_code(bad, ErrorCode::UnsupportedFormat);

    bad = container;
    bad[22] ^= 0xFF; // stored hash
    expect_code(bad, ErrorCode::IntegrityFailure);

    bad = container;
    bad.push_back(0x00); // trailing junk
    expect_code(bad, ErrorCode::CorruptValue);

    // Every truncation of the container fails loudly.
    for (size_t len = 0; len < container.size(); ++len) {
        std::vector<uint8_t> cut(container.begin(), container.begin() + len);
        CHECK_THROWS_AS(decompress_stream(cut), CodecError);
    }
}

TEST_CASE("mantissa nibble flips are typed, never silent") {
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, 256, 321);
    CodecConfig cfg;
    cfg.block_size = 256;
    std::vector<uint8_t> container = compress_stream(input, cfg);
    ParsedContainer parsed = parse_container(container);

    // Walk the wire layout to find the mantissa byte ranges.
    std::vector<std::pair<size_t, size_t>> mantissa_spans;
    size_t pos = ContainerHeader::kSize;
    for (const auto& block : parsed.blocks) {
        pos += 4;
        for (const auto& rec : block) {
            pos += 4 + 1 + 4;
            size_t len = (rec.mantissa_len() + 1) / 2;
            mantissa_spans.push_back({pos, len});
            pos += len;
        }
    }
    REQUIRE(pos == container.size());

    std::mt19937_64 rng(5);
    int trials = 0;
    for (int i = 0; i < 400; ++i) {
        auto [offset, len] = mantissa_spans[rng() % mantissa_spans.size()];
        size_t byte = offset + rng() % len;
        int shift = (rng() % 2) ? 4 : 0;
        uint8_t nibble = static_cast<uint8_t>(rng() % 16);
        uint8_t original = container[byte];
        uint8_t mutated =
            static_cast<uint8_t>((original & ~(0xF << shift)) | (nibble << shift));
        if (mutated == original)
            continue;
        ++trials;
        std::vector<uint8_t> bad = container;
        bad[byte] = mutated;
        CHECK_THROWS_AS(decompress_stream(bad), CodecError);
    }
    CHECK(trials > 300);
}

TEST_CASE("parse is total over junk") {
    std::mt19937_64 rng(7);

    // Arbitrary small buffers: typed error or success, never a crash.
    for (int i = 0; i < 20000; ++i) {
        std::vector<uint8_t> junk(rng() % 120);
        for (auto& b : junk)
            b = static_cast<uint8_t>(rng() % 256);
        try {
            parse_container(junk);
        } catch (const CodecError&) {
        }
    }

    // Mutations of a valid container.
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::TextLike, 300, 9);
    CodecConfig cfg;
    cfg.block_size = 128;
    cfg.chunk_digits = 24;
    std::vector<uint8_t> container = compress_stream(input, cfg);
    for (int i = 0; i < 4000; ++i) {
        std::vector<uint8_t> bad = container;
        int edits = 1 + static_cast<int>(rng() % 3);
        for (int e = 0; e < edits; ++e)
            bad[rng() % bad.size()] = static_cast<uint8_t>(rng() % 256);
        if (rng() % 4 == 0)
            bad.resize(rng() % (bad.size() + 1));
        try {
            std::vector<uint8_t> out = decompress_stream(bad);
            CHECK(out == input); // success is only acceptable when correct
        } catch (const CodecError&) {
        }
    }
}

TEST_CASE("decode errors carry block and chunk context") {
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, 64, 15);
    CodecConfig cfg;
    cfg.block_size = 64;
    std::vector<uint8_t> container = compress_stream(input, cfg);

    // Flip a digit nibble deep in the first record's mantissa.
    std::vector<uint8_t> bad = container;
    size_t mantissa_start = ContainerHeader::kSize + 4 + 9;
    bad[mantissa_start] = static_cast<uint8_t>(bad[mantissa_start] ^ 0x11);
    try {
        decompress_stream(bad);
        FAIL_CHECK("expected a typed failure");
    } catch (const CodecError& e) {
        std::string what = e.what();
        bool has_context = what.find("block") != std::string::npos ||
                           e.code() == ErrorCode::IntegrityFailure ||
                           e.code() == ErrorCode::CorruptValue;
        CHECK(has_context);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(compress_stream({}, CodecConfig{0, 64, false, {}, 1}), std::invalid_argument);
    try {
        compress_stream({}, CodecConfig{4096, 0, false, {}, 1});
        FAIL_CHECK("chunk_digits 0 accepted");
    } catch (const CodecError& e) {
        CHECK(e.code() == ErrorCode::InvalidChunkSize);
    }
}
