#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "nsdelta_cli/serialize.hpp"

namespace nsdelta {

// Bumped whenever a cached value's meaning or layout changes; older entries
// are then ignored.
inline constexpr int kArtifactVersion = 1;

std::uint64_t fnv1a64(std::string_view data);

// On-disk key-value store, one JSON file per key. A default-constructed
// cache is disabled.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path dir);

  bool enabled() const noexcept { return !dir_.empty(); }

  std::optional<json> get(const std::string& key) const;
  void put(const std::string& key, const json& value) const;

  static std::string make_key(std::span<const Int> generators, std::string_view op,
                              const json& params);

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
};

}  // namespace nsdelta
