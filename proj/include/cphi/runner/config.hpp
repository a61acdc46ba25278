#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cphi/farpoint.hpp"
#include "cphi/parallel.hpp"

namespace cphi::runner {

enum class OutputFormat { Text, Json, Csv };

inline std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::size_t precision = 256;
  std::size_t r_max = 100;
  std::uint64_t node_cap = std::uint64_t{1} << 20;
  std::size_t workers = default_workers();
  std::optional<std::string> cache_path;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
  std::size_t trials = 10000;

  SearchLimits limits() const { return {r_max, node_cap}; }
};

/// A search over prefixes of up to `prefix_length` digits needs
/// precision >= r_max + prefix_length + 1.
inline void validate(const RunConfig& config, std::size_t prefix_length) {
  if (config.workers == 0) throw config_error("--workers must be at least 1");
  if (config.node_cap == 0) throw config_error("--node-cap must be at least 1");
  const std::size_t needed = config.r_max + prefix_length + 1;
  if (config.precision < needed) {
    throw config_error("--precision " + std::to_string(config.precision) + " is below r_max + prefix length + 1 = " +
                       std::to_string(needed));
  }
}

}  // namespace cphi::runner
