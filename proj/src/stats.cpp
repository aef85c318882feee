#include "pivot/stats.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "pivot/rng.h"

namespace pivot {

namespace {

struct Deviations {
  std::vector<double> dx;
  std::vector<double> dy;
  double sxx = 0.0;
  double syy = 0.0;
};

Deviations deviations(const PairedSeries& series) {
  const std::size_t n = series.points.size();
  if (n < 3) {
    throw std::invalid_argument("correlation requires at least 3 points");
  }
  double mx = 0.0, my = 0.0;
  for (const PairedPoint& p : series.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("correlation input contains a non-finite value");
    }
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  Deviations dev;
  dev.dx.reserve(n);
  dev.dy.reserve(n);
  for (const PairedPoint& p : series.points) {
    dev.dx.push_back(p.x - mx);
    dev.dy.push_back(p.y - my);
    dev.sxx += dev.dx.back() * dev.dx.back();
    dev.syy += dev.dy.back() * dev.dy.back();
  }
  if (dev.sxx == 0.0 || dev.syy == 0.0) {
    throw std::invalid_argument("correlation undefined: zero variance in a coordinate");
  }
  return dev;
}

double r_of(const Deviations& dev, const std::vector<double>& dy) {
  double sxy = 0.0;
  for (std::size_t i = 0; i < dev.dx.size(); ++i) sxy += dev.dx[i] * dy[i];
  return sxy / std::sqrt(dev.sxx * dev.syy);
}

// n! while it stays within the exhaustive-enumeration budget, 0 otherwise.
std::uint64_t small_factorial(std::size_t n, std::uint64_t limit) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    if (f > limit) return 0;
  }
  return f;
}

}  // namespace

double pearson_r(const PairedSeries& series) {
  const Deviations dev = deviations(series);
  return r_of(dev, dev.dy);
}

CorrelationResult pearson(const PairedSeries& series, std::uint64_t seed,
                          std::uint64_t mc_permutations) {
  const Deviations dev = deviations(series);
  const std::size_t n = series.points.size();

  CorrelationResult result;
  result.n = n;
  result.r = r_of(dev, dev.dy);
  const double threshold = std::fabs(result.r) - 1e-12;

  const std::uint64_t total = small_factorial(n, 1000000);
  if (total != 0) {
    // Enumerate every ordering of y via index permutations.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> dy(n);
    std::uint64_t hits = 0;
    do {
      for (std::size_t i = 0; i < n; ++i) dy[i] = dev.dy[idx[i]];
      if (std::fabs(r_of(dev, dy)) >= threshold) ++hits;
    } while (std::next_permutation(idx.begin(), idx.end()));
    result.method = "exhaustive";
    result.permutations = total;
    result.p_value = static_cast<double>(hits) / static_cast<double>(total);
    result.mc_stderr = 0.0;
    return result;
  }

  if (mc_permutations == 0) {
    throw std::invalid_argument("permutation count must be positive");
  }
  Rng rng(seed);
  std::vector<double> dy = dev.dy;
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < mc_permutations; ++k) {
    rng.shuffle(dy);
    if (std::fabs(r_of(dev, dy)) >= threshold) ++hits;
  }
  result.method = "monte-carlo";
  result.permutations = mc_permutations;
  result.p_value = static_cast<double>(hits + 1) / static_cast<double>(mc_permutations + 1);
  result.mc_stderr = std::sqrt(result.p_value * (1.0 - result.p_value) /
                               static_cast<double>(mc_permutations));
  return result;
}

PairedSeries read_paired_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open series file: " + path);
  }
  PairedSeries series;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected `label,x,y`");
    }
    PairedPoint point;
    point.label = line.substr(0, c1);
    const std::string xs = line.substr(c1 + 1, c2 - c1 - 1);
    const std::string ys = line.substr(c2 + 1);
    try {
      std::size_t used = 0;
      point.x = std::stod(xs, &used);
      if (used != xs.size()) throw std::invalid_argument(xs);
      point.y = std::stod(ys, &used);
      if (used != ys.size()) throw std::invalid_argument(ys);
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header row
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": cannot parse coordinates");
    }
    series.points.push_back(std::move(point));
  }
  return series;
}

}  // namespace pivot
