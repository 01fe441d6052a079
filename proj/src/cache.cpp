#include "grmir/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "grmir/scalars.hpp"

namespace grmir {

namespace {

std::string iso8601_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path DiskCache::entry_path(const std::string& key) const {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << fnv1a64(key);
  return dir_ / (os.str() + ".json");
}

std::optional<Json> DiskCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(key));
  if (!in) return std::nullopt;
  Json entry = Json::parse(in, nullptr, false);
  if (entry.is_discarded()) return std::nullopt;
  if (!entry.contains("key") || entry["key"] != key) return std::nullopt;
  if (!entry.contains("payload")) return std::nullopt;
  return entry["payload"];
}

void DiskCache::store(const std::string& key, const Json& payload) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  Json entry;
  entry["key"] = key;
  entry["created_at"] = iso8601_now();
  entry["payload"] = payload;
  std::ofstream out(entry_path(key));
  out << entry.dump(2) << "\n";
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value,
                                        bool disabled) {
  if (disabled) return {};
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("GRMIR_CACHE_DIR")) {
    if (*env) return env;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
    if (*xdg) return std::filesystem::path(xdg) / "grmir";
  }
  if (const char* home = std::getenv("HOME")) {
    if (*home) return std::filesystem::path(home) / ".cache" / "grmir";
  }
  return {};
}

}  // namespace grmir
