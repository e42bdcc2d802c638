#include "lppie/bench.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <unistd.h>

#include "lppie/error.hpp"
#include "lppie/io.hpp"

namespace lppie {

namespace {

namespace fs = std::filesystem;

struct ExternalMethod {
    const char* name;
    const char* binary;
    // Shell command writing the compressed form of `in` to `out`.
    std::string (*command)(const std::string& in, const std::string& out);
};

std::string quoted(const std::string& s) { return "'" + s + "'"; }

const ExternalMethod kExternalMethods[] = {
    {"gzip", "gzip", [](const std::string& in, const std::string& out) {
         return "gzip -c " + quoted(in) + " > " + quoted(out);
     }},
    {"xz", "xz", [](const std::string& in, const std::string& out) {
         return "xz -c " + quoted(in) + " > " + quoted(out);
     }},
    {"bzip2", "bzip2", [](const std::string& in, const std::string& out) {
         return "bzip2 -zc " + quoted(in) + " > " + quoted(out);
     }},
    {"zstd", "zstd", [](const std::string& in, const std::string& out) {
         return "zstd -q -f -c " + quoted(in) + " > " + quoted(out);
     }},
    {"zip", "zip", [](const std::string& in, const std::string& out) {
         return "zip -q -j " + quoted(out) + " " + quoted(in) + " >/dev/null 2>&1";
     }},
    {"7z", "7z", [](const std::string& in, const std::string& out) {
         return "7z a -bso0 -bsp0 -bse0 " + quoted(out) + " " + quoted(in) + " >/dev/null 2>&1";
     }},
};

bool tool_available(const char* binary) {
    std::string probe = std::string("command -v ") + binary + " >/dev/null 2>&1";
    return std::system(probe.c_str()) == 0;
}

const ExternalMethod* find_method(const std::string& name) {
    for (const auto& method : kExternalMethods)
        if (name == method.name)
            return &method;
    return nullptr;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("lppie-bench-" + std::to_string(static_cast<unsigned long>(::getpid())) + "-" +
                std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

std::string ratio_text(uint64_t size, uint64_t input) {
    if (input == 0)
        return "-";
    return format_fixed(static_cast<double>(size) / static_cast<double>(input), 3);
}

} // namespace

std::vector<std::string> known_bench_methods() {
    std::vector<std::string> names;
    for (const auto& method : kExternalMethods)
        names.emplace_back(method.name);
    return names;
}

AuditAggregates compute_aggregates(std::span<const ChunkAudit> chunks, uint64_t container_bytes) {
    AuditAggregates agg;
    agg.container_bytes = container_bytes;
    uint64_t digit_total = 0;
    uint64_t mantissa_total = 0;
    for (const auto& chunk : chunks) {
        digit_total += chunk.digit_len;
        mantissa_total += chunk.mantissa_len;
        if (chunk.r <= 2)
            ++agg.r_histogram[chunk.r];
        agg.mantissa_payload_bytes += (chunk.mantissa_len + 1) / 2;
    }
    if (!chunks.empty()) {
        agg.mean_digit_len = static_cast<double>(digit_total) / static_cast<double>(chunks.size());
        agg.mean_mantissa_len = static_cast<double>(mantissa_total) / static_cast<double>(chunks.size());
    }
    agg.overhead_bytes = container_bytes - agg.mantissa_payload_bytes;
    return agg;
}

AuditReport run_audit(std::span<const uint8_t> input, const CodecConfig& config) {
    AuditReport report;
    report.input_bytes = input.size();
    std::vector<uint8_t> container = compress_stream(input, config, &report.chunks);
    report.aggregates = compute_aggregates(report.chunks, container.size());
    return report;
}

AuditReport run_audit_file(const std::filesystem::path& input, const CodecConfig& config) {
    std::vector<uint8_t> data = read_file(input);
    return run_audit(data, config);
}

BenchReport run_benchmark(const std::filesystem::path& input, const std::vector<std::string>& methods,
                          const CodecConfig& config) {
    std::vector<uint8_t> data = read_file(input);

    BenchReport report;
    report.input_bytes = data.size();
    report.workers = config.jobs > 1 ? config.jobs : 1;

    // LPPIE first; external tools never influence this row.
    {
        auto start = std::chrono::steady_clock::now();
        std::vector<uint8_t> container = compress_stream(data, config);
        report.rows.push_back({"LPPIE", container.size(), elapsed_seconds(start)});
    }

    TempDir tmp;
    for (const auto& name : methods) {
        const ExternalMethod* method = find_method(name);
        if (!method) {
            report.notices.push_back("unknown method '" + name + "' skipped");
            continue;
        }
        if (!tool_available(method->binary)) {
            report.notices.push_back(std::string(method->name) + " not found; row skipped");
            continue;
        }
        fs::path out = tmp.path / (std::string("out.") + method->name);
        std::string cmd = method->command(input.string(), out.string());
        auto start = std::chrono::steady_clock::now();
        int rc = std::system(cmd.c_str());
        double secs = elapsed_seconds(start);
        if (rc != 0 || !fs::exists(out)) {
            report.notices.push_back(std::string(method->name) + " failed (exit " + std::to_string(rc) +
                                     "); row skipped");
            continue;
        }
        report.rows.push_back({method->name, static_cast<uint64_t>(fs::file_size(out)), secs});
    }
    return report;
}

std::string render_markdown(const BenchReport& report) {
    std::ostringstream out;
    out << "Input: " << report.input_bytes << " bytes. LPPIE workers: " << report.workers << ".\n\n";
    out << "| Method | Size (bytes) | Time (s) | Ratio |\n";
    out << "| --- | ---: | ---: | ---: |\n";
    out << "| Original | " << report.input_bytes << " | - | " << ratio_text(report.input_bytes, report.input_bytes)
        << " |\n";
    for (const auto& row : report.rows) {
        out << "| " << row.method << " | " << row.size_bytes << " | " << format_fixed(row.seconds, 3) << " | "
            << ratio_text(row.size_bytes, report.input_bytes) << " |\n";
    }
    for (const auto& notice : report.notices)
        out << "\nnote: " << notice;
    if (!report.notices.empty())
        out << "\n";
    return out.str();
}

std::string render_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "method,size_bytes,time_seconds,ratio\n";
    out << "Original," << report.input_bytes << ",," << ratio_text(report.input_bytes, report.input_bytes) << "\n";
    for (const auto& row : report.rows) {
        out << row.method << "," << row.size_bytes << "," << format_fixed(row.seconds, 3) << ","
            << ratio_text(row.size_bytes, report.input_bytes) << "\n";
    }
    return out.str();
}

std::string render_markdown(const AuditReport& report) {
    const auto& agg = report.aggregates;
    std::ostringstream out;
    out << "| Quantity | Value |\n";
    out << "| --- | ---: |\n";
    out << "| input bytes | " << report.input_bytes << " |\n";
    out << "| container bytes | " << agg.container_bytes << " |\n";
    out << "| chunks | " << report.chunks.size() << " |\n";
    out << "| mean digit_len | " << format_fixed(agg.mean_digit_len, 3) << " |\n";
    out << "| mean mantissa_len | " << format_fixed(agg.mean_mantissa_len, 3) << " |\n";
    out << "| r=0 chunks | " << agg.r_histogram[0] << " |\n";
    out << "| r=1 chunks | " << agg.r_histogram[1] << " |\n";
    out << "| r=2 chunks | " << agg.r_histogram[2] << " |\n";
    out << "| mantissa payload bytes | " << agg.mantissa_payload_bytes << " |\n";
    out << "| container overhead bytes | " << agg.overhead_bytes << " |\n";
    return out.str();
}

std::string render_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "digit_len,r,mantissa_len\n";
    for (const auto& chunk : report.chunks)
        out << chunk.digit_len << "," << static_cast<unsigned>(chunk.r) << "," << chunk.mantissa_len << "\n";
    return out.str();
}

} // namespace lppie
