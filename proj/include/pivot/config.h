#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace pivot {

// Effective run configuration. Precedence when assembling one: command-line
// flags override the config file, which overrides built-in defaults; the
// PIVOT_SEED environment variable sits between flag and file for the seed.
// Echoed into every JSON report for provenance.
struct RunConfig {
  std::uint32_t f0 = 10;
  double p0 = 0.7;
  double bin_width = 0.1;
  std::uint64_t seed = 0;
  bool lowercase = true;
  std::string mask_mode = "all-modified";  // or "pivots-only"
  std::map<std::string, std::string> paths;

  bool operator==(const RunConfig&) const = default;
};

}  // namespace pivot
