#pragma once
// Disk cache for transform tables.  One file per table, keyed by a content
// hash of the producing profile and grid parameters.  Files are versioned;
// anything that fails validation is recomputed and rewritten, never trusted.
//
// Format (little-endian doubles after an 8-byte magic):
//   "LFTBL001" | key u64 | count u64 | count doubles
//
// Writers go through a temp file + rename, so racing writers at worst
// duplicate work and produce identical entries.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace loopfield::cache {

// Resolution order: explicit set_directory() > LOOPFIELD_CACHE_DIR env >
// ".loopfield-cache" under the current directory.
void set_directory(const std::string& dir);
std::filesystem::path directory();

std::optional<std::vector<double>> load(std::uint64_t key);
void store(std::uint64_t key, const std::vector<double>& payload);

// number of cache files that failed validation since process start
int corruption_count();

}  // namespace loopfield::cache
