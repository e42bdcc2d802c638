#include "lppie/io.hpp"

#include <cstdio>
#include <memory>

#include "lppie/error.hpp"

namespace lppie {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FileHandle = std::unique_ptr<std::FILE, FileCloser>;

} // namespace

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
    FileHandle file(std::fopen(path.c_str(), "rb"));
    if (!file)
        raise(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for reading");

    std::vector<uint8_t> data;
    uint8_t buf[1 << 16];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), file.get())) > 0)
        data.insert(data.end(), buf, buf + got);
    if (std::ferror(file.get()))
        raise(ErrorCode::IoFailure, "read error on '" + path.string() + "'");
    return data;
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> data) {
    FileHandle file(std::fopen(path.c_str(), "wb"));
    if (!file)
        raise(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
    if (!data.empty() && std::fwrite(data.data(), 1, data.size(), file.get()) != data.size())
        raise(ErrorCode::IoFailure, "write error on '" + path.string() + "'");
    if (std::fflush(file.get()) != 0)
        raise(ErrorCode::IoFailure, "flush error on '" + path.string() + "'");
}

} // namespace lppie
