#pragma once

// On-disk cache for computed tables. Each entry is a JSON file named by a
// hash of its key; writes go through a temporary file and a rename so a
// reader never sees a partial entry.

#include "csm/io.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace csm {

// Bumped whenever a change could alter cached payloads.
inline constexpr const char* kEngineVersion = "csm-engine/1";

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static Json make_key(int k, int n, const std::string& kind, const std::string& order, const std::string& engine,
                       const std::string& weights) {
    return Json{{"k", k}, {"n", n}, {"kind", kind}, {"order", order}, {"engine", engine}, {"weights", weights}};
  }

  std::filesystem::path path_for(const Json& key) const {
    // FNV-1a over the canonical key text
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : key.dump()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    std::ostringstream name;
    name << "table-" << std::hex << h << ".json";
    return dir_ / name.str();
  }

  std::optional<std::string> load(const Json& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    Json entry = Json::parse(in, nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
    if (entry.value("version", "") != kEngineVersion) return std::nullopt;
    if (!entry.contains("key") || entry["key"] != key) return std::nullopt;
    if (!entry.contains("payload") || !entry["payload"].is_string()) return std::nullopt;
    return entry["payload"].get<std::string>();
  }

  void store(const Json& key, const std::string& payload) const {
    std::filesystem::create_directories(dir_);
    const auto target = path_for(key);
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp." + std::to_string(rd()) + "." + std::to_string(counter++);
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
      Json entry{{"version", kEngineVersion}, {"key", key}, {"payload", payload}};
      out << entry.dump() << '\n';
      if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace csm
