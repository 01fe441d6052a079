#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "grmir/jsonio.hpp"

namespace grmir {

// One JSON file per entry, named by a 64-bit hash of the canonical key.
// Entries store the full key alongside the payload, so a hash collision
// degrades to a cache miss instead of serving the wrong payload.
class DiskCache {
 public:
  DiskCache() = default;
  explicit DiskCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path entry_path(const std::string& key) const;
  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;

 private:
  std::filesystem::path dir_;
};

// Resolution order: explicit flag, then GRMIR_CACHE_DIR, then the user
// cache directory. An empty result disables caching.
std::filesystem::path resolve_cache_dir(const std::string& flag_value,
                                        bool disabled);

}  // namespace grmir
