#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lppie/container.hpp"

namespace lppie {

struct BenchRow {
    std::string method;
    uint64_t size_bytes = 0;
    double seconds = 0.0;
};

/// One benchmark run: the LPPIE row plus whatever external tools were found.
/// Rows all read the original input; timing is wall clock, sequential.
struct BenchReport {
    uint64_t input_bytes = 0;
    int workers = 1;
    std::vector<BenchRow> rows;
    std::vector<std::string> notices; // e.g. skipped tools
};

struct AuditAggregates {
    double mean_digit_len = 0.0;
    double mean_mantissa_len = 0.0;
    std::array<uint64_t, 3> r_histogram{}; // counts for r = 0, 1, 2
    uint64_t container_bytes = 0;
    uint64_t mantissa_payload_bytes = 0; // packed BCD bytes
    uint64_t overhead_bytes = 0;         // container minus mantissa payload
};

/// Where the bytes of a container actually go: one tuple per chunk plus the
/// aggregate picture.
struct AuditReport {
    uint64_t input_bytes = 0;
    std::vector<ChunkAudit> chunks;
    AuditAggregates aggregates;
};

/// Recomputes the aggregate block from the tuples (and the two byte totals).
AuditAggregates compute_aggregates(std::span<const ChunkAudit> chunks, uint64_t container_bytes);

/// Names every external method the benchmark knows how to drive.
std::vector<std::string> known_bench_methods();

/// Compresses with LPPIE plus each requested external tool, measuring output
/// size and wall time. Missing tools are skipped with a notice; failures of
/// external tools never affect the LPPIE row.
BenchReport run_benchmark(const std::filesystem::path& input, const std::vector<std::string>& methods,
                          const CodecConfig& config);

/// Instrumented compression of a buffer.
AuditReport run_audit(std::span<const uint8_t> input, const CodecConfig& config);

/// Instrumented compression of a file (IoFailure when unreadable).
AuditReport run_audit_file(const std::filesystem::path& input, const CodecConfig& config);

std::string render_markdown(const BenchReport& report);
std::string render_csv(const BenchReport& report);
std::string render_markdown(const AuditReport& report);
std::string render_csv(const AuditReport& report);

} // namespace lppie
