#include "nsdelta_cli/cache.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace nsdelta {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    throw Error(ErrorCode::invalid_argument,
                "cannot create cache directory " + dir_.string() + ": " + ec.message());
  }
}

std::string ResultCache::make_key(std::span<const Int> generators, std::string_view op,
                                  const json& params) {
  json k{{"generators", std::vector<Int>(generators.begin(), generators.end())},
         {"op", op},
         {"params", params}};
  return k.dump();
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a64(key)));
  return dir_ / name;
}

std::optional<json> ResultCache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  // hash collisions and stale versions both read as a miss
  if (doc.value("artifact_version", -1) != kArtifactVersion) return std::nullopt;
  if (doc.value("key", std::string()) != key || !doc.contains("value")) return std::nullopt;
  return doc["value"];
}

void ResultCache::put(const std::string& key, const json& value) const {
  if (!enabled()) return;
  const auto target = path_for(key);
  std::ostringstream suffix;
  suffix << ".tmp" << std::random_device{}();
  const auto tmp = std::filesystem::path(target.string() + suffix.str());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << json{{"artifact_version", kArtifactVersion}, {"key", key}, {"value", value}}.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace nsdelta
