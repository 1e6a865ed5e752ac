// io_util.hpp - atomic output files, stable content hashing, and float
// formatting shared by the CLI emitters.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace topofc {

// Formats with 17 significant digits (round-trips IEEE doubles exactly).
std::string format_g17(double v);

// FNV-1a 64-bit over a byte string.
std::uint64_t fnv1a64(const std::string& bytes);

// Stable hex hash over the named files (names + contents, in given order).
std::string hash_files(const std::vector<std::filesystem::path>& files);

// Writes body to path via a temp file in the same directory plus rename,
// so readers never observe partial output.
void atomic_write(const std::filesystem::path& path, const std::string& body);

}  // namespace topofc
