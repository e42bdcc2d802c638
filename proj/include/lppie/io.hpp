#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace lppie {

/// Reads a whole file; throws IoFailure when it cannot.
std::vector<uint8_t> read_file(const std::filesystem::path& path);

/// Writes a whole file; throws IoFailure when it cannot.
void write_file(const std::filesystem::path& path, std::span<const uint8_t> data);

} // namespace lppie
