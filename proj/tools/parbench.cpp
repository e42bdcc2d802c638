// Times the serial reference kernels against the OpenMP kernels on a
// synthetic input and checks that both produce identical records.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "lppie/container.hpp"
#include "lppie/corpus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    size_t size = (argc > 1) ? static_cast<size_t>(std::atoll(argv[1])) : (1 << 18);
    int max_jobs = (argc > 2) ? std::atoi(argv[2]) : 0;
#ifdef _OPENMP
    if (max_jobs <= 0)
        max_jobs = omp_get_max_threads();
#else
    if (max_jobs <= 0)
        max_jobs = 1;
#endif

    std::printf("input: %zu bytes of uniform noise\n", size);
    std::vector<uint8_t> input = lppie::make_corpus_blob(lppie::CorpusPattern::Random, size, 42);

    lppie::CodecConfig cfg;
    std::vector<std::vector<lppie::IterLogRecord>> serial_blocks;
    double serial_secs = time_seconds([&] { serial_blocks = lppie::encode_blocks_serial(input, cfg); });

    std::vector<uint8_t> container = lppie::compress_stream(input, cfg);
    lppie::ParsedContainer parsed = lppie::parse_container(container);
    lppie::DecodeOptions dec;
    double serial_dec_secs = time_seconds([&] { (void)lppie::decode_blocks_serial(parsed, dec); });

    std::printf("| kernel | jobs | encode (s) | decode (s) | speedup (enc) | identical |\n");
    std::printf("| --- | ---: | ---: | ---: | ---: | --- |\n");
    std::printf("| serial | 1 | %.3f | %.3f | 1.00 | reference |\n", serial_secs, serial_dec_secs);

    for (int jobs = 2; jobs <= max_jobs; jobs *= 2) {
        std::vector<std::vector<lppie::IterLogRecord>> par_blocks;
        double par_secs =
            time_seconds([&] { par_blocks = lppie::encode_blocks_parallel(input, cfg, jobs); });
        double par_dec_secs = time_seconds([&] { (void)lppie::decode_blocks_parallel(parsed, dec, jobs); });
        bool same = (par_blocks == serial_blocks);
        std::printf("| openmp | %d | %.3f | %.3f | %.2f | %s |\n", jobs, par_secs, par_dec_secs,
                    par_secs > 0 ? serial_secs / par_secs : 0.0, same ? "yes" : "NO");
        if (!same) {
            std::fprintf(stderr, "parallel kernel diverged from the serial reference\n");
            return 1;
        }
    }
    return 0;
}
