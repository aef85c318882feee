#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pivot {

struct PairedPoint {
  double x = 0.0;
  double y = 0.0;
  std::string label;
};

struct PairedSeries {
  std::vector<PairedPoint> points;
};

struct CorrelationResult {
  double r = 0.0;
  double p_value = 1.0;
  std::string method;  // "exhaustive" or "monte-carlo"
  std::uint64_t permutations = 0;
  double mc_stderr = 0.0;  // 0 for exhaustive
  std::size_t n = 0;
};

// Sample Pearson correlation. Requires n >= 3, finite values and nonzero
// variance in both coordinates.
double pearson_r(const PairedSeries& series);

// Pearson r with a two-sided permutation p-value: the fraction of
// permutations of y whose |r| reaches |r_observed| (within 1e-12, so exact
// ties in the statistic count). All n! permutations are enumerated when
// n! <= 10^6 (n <= 9); otherwise mc_permutations seeded shuffles are drawn and
// the p-value uses the (k+1)/(N+1) estimator with its Monte-Carlo standard
// error.
CorrelationResult pearson(const PairedSeries& series, std::uint64_t seed,
                          std::uint64_t mc_permutations = 100000);

// Reads `label,x,y` lines; a leading header row is skipped. Blank lines are
// ignored; anything else malformed is an error naming the line.
PairedSeries read_paired_csv(const std::string& path);

}  // namespace pivot
