// lppie: lossless iterated-logarithm codec CLI.
//
// Exit codes: 0 success, 1 usage error, 2 integrity/format failure,
// 3 precision exhausted, 4 I/O failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lppie/bench.hpp"
#include "lppie/container.hpp"
#include "lppie/corpus.hpp"
#include "lppie/error.hpp"
#include "lppie/io.hpp"
#include "lppie/sha256.hpp"

namespace {

int exit_code_for(lppie::ErrorCode code) {
    switch (code) {
    case lppie::ErrorCode::PrecisionExhausted:
        return 3;
    case lppie::ErrorCode::IoFailure:
        return 4;
    case lppie::ErrorCode::InvalidChunkSize:
        return 1;
    default:
        return 2; // corruption, integrity, format
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Options {
    std::string input;
    std::string output;
    std::string container;
    std::string out_dir;
    std::string methods = "gzip,xz,zstd,bzip2,zip,7z";
    std::string format = "markdown";
    uint32_t chunk_digits = 64;
    uint32_t block_size = 4096;
    uint32_t guard = 8;
    bool single_block = false;
    int jobs = 0; // 0 = unset, falls back to LPPIE_JOBS then 1
    size_t gen_count = 200;
    size_t gen_max_size = 1 << 20;
    uint64_t gen_seed = 1;
};

int resolve_jobs(int flag_value) {
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("LPPIE_JOBS")) {
        int parsed = std::atoi(env);
        if (parsed > 0)
            return parsed;
    }
    return 1;
}

lppie::CodecConfig make_config(const Options& opt) {
    lppie::CodecConfig cfg;
    cfg.block_size = opt.block_size;
    cfg.chunk_digits = opt.chunk_digits;
    cfg.single_block = opt.single_block;
    cfg.policy.initial_guard = opt.guard;
    cfg.jobs = resolve_jobs(opt.jobs);
    return cfg;
}

std::vector<std::string> split_methods(const std::string& csv) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos)
            comma = csv.size();
        if (comma > pos)
            out.push_back(csv.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

int cmd_compress(const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    std::vector<uint8_t> input = lppie::read_file(opt.input);
    std::vector<uint8_t> container = lppie::compress_stream(input, make_config(opt));
    lppie::write_file(opt.output, container);
    double ratio = input.empty() ? 0.0 : static_cast<double>(container.size()) / input.size();
    std::printf("compressed %zu bytes -> %zu bytes (ratio %.3f) in %.3f s\n", input.size(), container.size(),
                ratio, seconds_since(start));
    return 0;
}

int cmd_decompress(const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    std::vector<uint8_t> container = lppie::read_file(opt.input);
    lppie::DecodeOptions dec;
    dec.policy.initial_guard = opt.guard;
    dec.jobs = resolve_jobs(opt.jobs);
    std::vector<uint8_t> output = lppie::decompress_stream(container, dec);
    lppie::write_file(opt.output, output);
    std::printf("decompressed %zu bytes -> %zu bytes in %.3f s (hash verified)\n", container.size(),
                output.size(), seconds_since(start));
    return 0;
}

int cmd_verify(const Options& opt) {
    std::vector<uint8_t> original = lppie::read_file(opt.input);
    std::vector<uint8_t> container = lppie::read_file(opt.container);
    lppie::VerifyResult result = lppie::verify_integrity(original, container);
    std::printf("original  %s\n", lppie::sha256_hex(result.original_hash).c_str());
    std::printf("container %s\n", lppie::sha256_hex(result.stored_hash).c_str());
    std::printf("%s\n", result.match ? "MATCH" : "MISMATCH");
    return result.match ? 0 : 2;
}

int cmd_bench(const Options& opt) {
    lppie::BenchReport report = lppie::run_benchmark(opt.input, split_methods(opt.methods), make_config(opt));
    std::string text = (opt.format == "csv") ? lppie::render_csv(report) : lppie::render_markdown(report);
    std::fputs(text.c_str(), stdout);
    return 0;
}

int cmd_audit(const Options& opt) {
    lppie::AuditReport report = lppie::run_audit_file(opt.input, make_config(opt));
    std::string text = (opt.format == "csv") ? lppie::render_csv(report) : lppie::render_markdown(report);
    std::fputs(text.c_str(), stdout);
    return 0;
}

int cmd_gen_corpus(const Options& opt) {
    auto specs = lppie::corpus_schedule(opt.gen_count, opt.gen_max_size, opt.gen_seed);
    lppie::write_corpus(opt.out_dir, specs);
    std::printf("wrote %zu files under %s\n", specs.size(), opt.out_dir.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lppie - iterated-logarithm lossless codec"};
    app.require_subcommand(1);

    Options opt;

    auto add_codec_flags = [&](CLI::App* cmd) {
        cmd->add_option("--chunk-digits", opt.chunk_digits, "digits per chunk (k)")->check(CLI::PositiveNumber);
        cmd->add_option("--block-size", opt.block_size, "bytes per block")->check(CLI::PositiveNumber);
        cmd->add_flag("--single-block", opt.single_block, "convert the whole input as one integer");
        cmd->add_option("--guard", opt.guard, "extra working-precision digits")->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", opt.jobs, "worker threads (env LPPIE_JOBS)")->check(CLI::PositiveNumber);
    };

    CLI::App* compress = app.add_subcommand("compress", "compress a file into a container");
    compress->add_option("-i,--input", opt.input, "input file")->required();
    compress->add_option("-o,--output", opt.output, "output container")->required();
    add_codec_flags(compress);

    CLI::App* decompress = app.add_subcommand("decompress", "restore a container to the original bytes");
    decompress->add_option("-i,--input", opt.input, "input container")->required();
    decompress->add_option("-o,--output", opt.output, "output file")->required();
    decompress->add_option("--guard", opt.guard, "extra working-precision digits")->check(CLI::PositiveNumber);
    decompress->add_option("--jobs", opt.jobs, "worker threads (env LPPIE_JOBS)")->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "compare a file's hash against a container");
    verify->add_option("-i,--input", opt.input, "original file")->required();
    verify->add_option("-c,--container", opt.container, "container file")->required();

    CLI::App* bench = app.add_subcommand("bench", "compare LPPIE against external compressors");
    bench->add_option("-i,--input", opt.input, "input file")->required();
    bench->add_option("--methods", opt.methods, "comma-separated external methods");
    bench->add_option("--format", opt.format, "markdown or csv")
        ->check(CLI::IsMember({"markdown", "csv"}));
    add_codec_flags(bench);

    CLI::App* audit = app.add_subcommand("audit", "per-chunk cost breakdown of a compression run");
    audit->add_option("-i,--input", opt.input, "input file")->required();
    audit->add_option("--format", opt.format, "markdown or csv")
        ->check(CLI::IsMember({"markdown", "csv"}));
    add_codec_flags(audit);

    CLI::App* gen = app.add_subcommand("gen-corpus", "write a deterministic synthetic test corpus");
    gen->add_option("--out-dir", opt.out_dir, "output directory")->required();
    gen->add_option("--count", opt.gen_count, "minimum number of files");
    gen->add_option("--max-size", opt.gen_max_size, "largest file size in bytes");
    gen->add_option("--seed", opt.gen_seed, "schedule seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return 1;
    }

    try {
        if (compress->parsed())
            return cmd_compress(opt);
        if (decompress->parsed())
            return cmd_decompress(opt);
        if (verify->parsed())
            return cmd_verify(opt);
        if (bench->parsed())
            return cmd_bench(opt);
        if (audit->parsed())
            return cmd_audit(opt);
        if (gen->parsed())
            return cmd_gen_corpus(opt);
    } catch (const lppie::CodecError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e.code());
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
