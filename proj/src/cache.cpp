#include "loopfield/cache.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>

namespace loopfield::cache {

namespace {
constexpr char kMagic[8] = {'L', 'F', 'T', 'B', 'L', '0', '0', '1'};

std::mutex g_mu;
std::string g_dir;
std::atomic<int> g_corrupt{0};

std::filesystem::path key_path(std::uint64_t key) {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.tbl",
                static_cast<unsigned long long>(key));
  return directory() / name;
}
}  // namespace

void set_directory(const std::string& dir) {
  std::lock_guard lk(g_mu);
  g_dir = dir;
}

std::filesystem::path directory() {
  {
    std::lock_guard lk(g_mu);
    if (!g_dir.empty()) return g_dir;
  }
  if (const char* env = std::getenv("LOOPFIELD_CACHE_DIR"); env && *env)
    return env;
  return ".loopfield-cache";
}

std::optional<std::vector<double>> load(std::uint64_t key) {
  std::ifstream in(key_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  std::uint64_t k = 0, count = 0;
  in.read(magic, 8);
  in.read(reinterpret_cast<char*>(&k), 8);
  in.read(reinterpret_cast<char*>(&count), 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0 || k != key ||
      count > (1ull << 28)) {
    g_corrupt.fetch_add(1);
    std::fprintf(stderr, "loopfield: cache entry %016llx invalid, recomputing\n",
                 static_cast<unsigned long long>(key));
    return std::nullopt;
  }
  std::vector<double> payload(count);
  in.read(reinterpret_cast<char*>(payload.data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (!in || in.gcount() != static_cast<std::streamsize>(count * sizeof(double))) {
    g_corrupt.fetch_add(1);
    std::fprintf(stderr, "loopfield: cache entry %016llx truncated, recomputing\n",
                 static_cast<unsigned long long>(key));
    return std::nullopt;
  }
  for (double v : payload) {
    if (!std::isfinite(v)) {
      g_corrupt.fetch_add(1);
      std::fprintf(stderr,
                   "loopfield: cache entry %016llx has non-finite data, recomputing\n",
                   static_cast<unsigned long long>(key));
      return std::nullopt;
    }
  }
  return payload;
}

void store(std::uint64_t key, const std::vector<double>& payload) {
  std::error_code ec;
  std::filesystem::create_directories(directory(), ec);
  if (ec) return;  // cache is best-effort
  const auto final_path = key_path(key);
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    const std::uint64_t count = payload.size();
    out.write(kMagic, 8);
    out.write(reinterpret_cast<const char*>(&key), 8);
    out.write(reinterpret_cast<const char*>(&count), 8);
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(count * sizeof(double)));
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

int corruption_count() { return g_corrupt.load(); }

}  // namespace loopfield::cache
