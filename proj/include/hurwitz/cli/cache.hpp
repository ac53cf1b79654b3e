#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

namespace hurwitz::cli {

inline constexpr const char* kVersion = "1.0.0";

/// One cached result. `result` is the exact value as printed.
struct ComputationRecord {
  std::string query;
  std::string engine;
  std::string result;
  double wall_clock_ms = 0;
  std::string version = kVersion;
};

inline nlohmann::json to_json(const ComputationRecord& r) {
  return {{"query", r.query}, {"engine", r.engine}, {"result", r.result}, {"wall_clock_ms", r.wall_clock_ms}, {"version", r.version}};
}

inline std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Directory of JSON records keyed by hash(engine, query, version).
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// $HURWITZ_CACHE_DIR, else $XDG_CACHE_HOME/hurwitz, else ~/.cache/hurwitz.
  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv("HURWITZ_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "hurwitz";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "hurwitz";
    return std::filesystem::temp_directory_path() / "hurwitz-cache";
  }

  std::filesystem::path path_for(const std::string& engine, const std::string& query) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json",
                  static_cast<unsigned long long>(fnv1a(engine + "\n" + query + "\n" + kVersion)));
    return dir_ / name;
  }

  std::optional<ComputationRecord> lookup(const std::string& engine, const std::string& query) const {
    std::ifstream in(path_for(engine, query));
    if (!in) return std::nullopt;
    const auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    ComputationRecord r;
    r.query = j.value("query", "");
    r.engine = j.value("engine", "");
    r.result = j.value("result", "");
    r.wall_clock_ms = j.value("wall_clock_ms", 0.0);
    r.version = j.value("version", "");
    if (r.query != query || r.engine != engine || r.version != kVersion || r.result.empty()) return std::nullopt;
    return r;
  }

  /// Best effort: an unwritable cache never fails the computation.
  void store(const ComputationRecord& r) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto target = path_for(r.engine, r.query);
    const auto tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << to_json(r).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, target, ec);
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace hurwitz::cli
