#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "lppie/bench.hpp"
#include "lppie/corpus.hpp"
#include "lppie/error.hpp"
#include "lppie/io.hpp"

using namespace lppie;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::vector<uint8_t>& data) {
        path = fs::temp_directory_path() / ("lppie-test-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(reinterpret_cast<uintptr_t>(this)) + ".bin");
        write_file(path, data);
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
};

size_t count_lines(const std::string& text) {
    size_t n = 0;
    for (char c : text)
        if (c == '\n')
            ++n;
    return n;
}

} // namespace

TEST_CASE("audit r classes follow the chunk width") {
    std::vector<uint8_t> block = make_corpus_blob(CorpusPattern::Random, 4096, 11);

    // 64-digit chunks hold values >= 10^10, so two log applications.
    CodecConfig cfg;
    AuditReport report = run_audit(block, cfg);
    REQUIRE(!report.chunks.empty());
    for (const auto& chunk : report.chunks)
        if (chunk.digit_len == 64)
            CHECK(chunk.r == 2);

    // 8-digit chunks live in [10^7, 10^8) ⊂ [10, 10^10): one application,
    // except the occasional small-valued chunk (leading zeros).
    cfg.chunk_digits = 8;
    report = run_audit(block, cfg);
    for (const auto& chunk : report.chunks) {
        if (chunk.digit_len == 8)
            CHECK(chunk.r <= 1);
        CHECK(chunk.r <= 2);
    }
    uint64_t r1 = report.aggregates.r_histogram[1];
    CHECK(r1 * 100 >= report.chunks.size() * 85); // overwhelmingly r = 1
}

TEST_CASE("audit sees the single-digit tail chunk") {
    // Find an input whose digit count is ≡ 1 (mod k), giving an r = 0 tail.
    CodecConfig cfg;
    cfg.chunk_digits = 8;
    cfg.block_size = 4096;
    for (size_t size = 16; size < 64; ++size) {
        std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, size, size);
        AuditReport report = run_audit(input, cfg);
        if (report.chunks.back().digit_len == 1) {
            CHECK(report.chunks.back().r == 0);
            CHECK(report.aggregates.r_histogram[0] >= 1);
            return;
        }
    }
    FAIL("no input with a single-digit tail found in the scan range");
}

TEST_CASE("aggregates are recomputable from the tuples") {
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::TextLike, 3000, 21);
    CodecConfig cfg;
    cfg.chunk_digits = 16;
    AuditReport report = run_audit(input, cfg);

    AuditAggregates again = compute_aggregates(report.chunks, report.aggregates.container_bytes);
    CHECK(again.mean_digit_len == report.aggregates.mean_digit_len);
    CHECK(again.mean_mantissa_len == report.aggregates.mean_mantissa_len);
    CHECK(again.r_histogram == report.aggregates.r_histogram);
    CHECK(again.overhead_bytes == report.aggregates.overhead_bytes);
    CHECK(report.aggregates.r_histogram[0] + report.aggregates.r_histogram[1] +
              report.aggregates.r_histogram[2] ==
          report.chunks.size());
}

TEST_CASE("containers of random data are larger than the input") {
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, 8192, 31);
    AuditReport report = run_audit(input, CodecConfig{});
    CHECK(report.aggregates.container_bytes > report.input_bytes);
    CHECK(report.aggregates.mean_mantissa_len >= report.aggregates.mean_digit_len - 2.0);
}

TEST_CASE("audit rendering") {
    std::vector<uint8_t> input = make_corpus_blob(CorpusPattern::Random, 512, 41);
    CodecConfig cfg;
    cfg.chunk_digits = 32;
    cfg.block_size = 512;
    AuditReport report = run_audit(input, cfg);

    std::string csv = render_csv(report);
    CHECK(count_lines(csv) == report.chunks.size() + 1); // header + one line per chunk
    CHECK(csv.rfind("digit_len,r,mantissa_len\n", 0) == 0);

    std::string md = render_markdown(report);
    CHECK(md.find("| mean mantissa_len |") != std::string::npos);
    CHECK(md.find("| r=2 chunks |") != std::string::npos);
    CHECK(render_markdown(report) == md); // deterministic for a fixed report
}

TEST_CASE("benchmark with no external methods") {
    TempFile input(make_corpus_blob(CorpusPattern::Random, 2048, 51));
    CodecConfig cfg;
    cfg.chunk_digits = 16;
    BenchReport report = run_benchmark(input.path, {}, cfg);

    CHECK(report.input_bytes == 2048);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].method == "LPPIE");
    CHECK(report.rows[0].size_bytes > 0);
    CHECK(report.rows[0].seconds >= 0.0);
}

TEST_CASE("benchmark with external methods, present or skipped") {
    TempFile input(make_corpus_blob(CorpusPattern::TextLike, 4096, 61));
    CodecConfig cfg;
    cfg.chunk_digits = 16;
    BenchReport report = run_benchmark(input.path, {"gzip", "xz", "zstd", "no-such-tool"}, cfg);

    CHECK(report.rows[0].method == "LPPIE");
    for (const auto& row : report.rows) {
        CHECK(row.size_bytes > 0);
        CHECK(row.seconds >= 0.0);
    }
    // Unknown methods always produce a notice.
    bool unknown_noticed = false;
    for (const auto& notice : report.notices)
        if (notice.find("no-such-tool") != std::string::npos)
            unknown_noticed = true;
    CHECK(unknown_noticed);
    // Every requested method is either a row or a notice.
    CHECK(report.rows.size() - 1 + report.notices.size() >= 4);
}

TEST_CASE("bench rendering matches the table scheme") {
    BenchReport report;
    report.input_bytes = 1000;
    report.workers = 1;
    report.rows = {{"LPPIE", 1500, 0.5}, {"gzip", 400, 0.01}};

    std::string md = render_markdown(report);
    CHECK(md.find("| Method | Size (bytes) | Time (s) | Ratio |") != std::string::npos);
    CHECK(md.find("| Original | 1000 | - | 1.000 |") != std::string::npos);
    CHECK(md.find("| LPPIE | 1500 | 0.500 | 1.500 |") != std::string::npos);
    CHECK(md.find("| gzip | 400 | 0.010 | 0.400 |") != std::string::npos);

    std::string csv = render_csv(report);
    CHECK(csv.rfind("method,size_bytes,time_seconds,ratio\n", 0) == 0);
    CHECK(csv.find("LPPIE,1500,0.500,1.500\n") != std::string::npos);
    CHECK(count_lines(csv) == 4);
}

TEST_CASE("benchmark on an unreadable input is an IoFailure") {
    try {
        run_benchmark("/nonexistent/path/x.bin", {}, CodecConfig{});
        FAIL_CHECK("missing file accepted");
    } catch (const CodecError& e) {
        CHECK(e.code() == ErrorCode::IoFailure);
    }
}

TEST_CASE("corpus generation is deterministic and writes the schedule") {
    auto specs = corpus_schedule(40, 1 << 16, 9);
    CHECK(specs.size() >= 40);
    bool has_max = false;
    for (const auto& spec : specs)
        has_max |= (spec.size == (1u << 16));
    CHECK(has_max);

    CHECK(make_corpus_blob(CorpusPattern::Random, 1000, 5) ==
          make_corpus_blob(CorpusPattern::Random, 1000, 5));
    CHECK(make_corpus_blob(CorpusPattern::TextLike, 1000, 5) ==
          make_corpus_blob(CorpusPattern::TextLike, 1000, 5));
}
