#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cphi/farpoint.hpp"
#include "json.hpp"

// Append-only JSON-lines store of farPoint outcomes keyed by (family, n, r_max).
// Later lines override earlier ones; unreadable lines are skipped.

namespace cphi::runner {

struct CacheKey {
  std::string family;
  std::size_t n = 0;
  std::size_t r_max = 0;

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
  FarPointOutcome outcome;
  std::uint64_t node_cap = 0;
};

inline nlohmann::json outcome_to_json(const FarPointOutcome& o) {
  nlohmann::json j;
  j["kind"] = o.finite() ? "finite" : "exceeds_bound";
  if (o.finite()) {
    j["r"] = o.r;
  } else {
    j["bound"] = o.bound;
    j["node_cap_hit"] = o.node_cap_hit;
  }
  j["nodes_explored"] = o.nodes_explored;
  j["max_live_set"] = o.max_live_set;
  return j;
}

inline FarPointOutcome outcome_from_json(const nlohmann::json& j) {
  FarPointOutcome o;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") {
    o.kind = FarPointOutcome::Kind::Finite;
    o.r = j.at("r").get<std::size_t>();
  } else if (kind == "exceeds_bound") {
    o.kind = FarPointOutcome::Kind::ExceedsBound;
    o.bound = j.at("bound").get<std::size_t>();
    o.node_cap_hit = j.value("node_cap_hit", false);
  } else {
    throw std::invalid_argument("unknown outcome kind '" + kind + "'");
  }
  o.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
  o.max_live_set = j.at("max_live_set").get<std::uint64_t>();
  return o;
}

class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  /// Reads the file if present; returns one warning per skipped line.
  std::vector<std::string> load() {
    std::vector<std::string> warnings;
    std::ifstream in(path_);
    if (!in) return warnings;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      if (line.empty()) continue;
      try {
        const auto j = nlohmann::json::parse(line);
        CacheKey key{j.at("family").get<std::string>(), j.at("n").get<std::size_t>(),
                     j.at("r_max").get<std::size_t>()};
        entries_[key] = CacheEntry{outcome_from_json(j), j.value("node_cap", std::uint64_t{0})};
      } catch (const std::exception& e) {
        warnings.push_back(path_ + ":" + std::to_string(lineno) + ": skipping corrupt cache line (" + e.what() + ")");
      }
    }
    return warnings;
  }

  /// A usable entry. Finite answers are exact whatever the node cap; an
  /// ExceedsBound entry only counts if it was found with at least `node_cap`.
  std::optional<FarPointOutcome> lookup(const CacheKey& key, std::uint64_t node_cap) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    const CacheEntry& e = it->second;
    if (!e.outcome.finite() && e.outcome.node_cap_hit && e.node_cap < node_cap) return std::nullopt;
    return e.outcome;
  }

  /// Appends records in the given order; the caller is the single writer.
  void append(const std::vector<std::pair<CacheKey, CacheEntry>>& records) {
    if (records.empty()) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path_ + " for writing");
    for (const auto& [key, entry] : records) {
      nlohmann::json j = outcome_to_json(entry.outcome);
      j["family"] = key.family;
      j["n"] = key.n;
      j["r_max"] = key.r_max;
      j["node_cap"] = entry.node_cap;
      out << j.dump() << '\n';
      entries_[key] = entry;
    }
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::map<CacheKey, CacheEntry> entries_;
};

}  // namespace cphi::runner
