#include "pivot/discovery.h"

#include <stdexcept>

namespace pivot {

PrecisionMatrix precision_matrix(const Corpus& corpus) {
  if (!corpus.balanced) {
    throw std::invalid_argument(
        "precision matrix requires a balanced corpus (run balance first)");
  }
  PrecisionMatrix matrix;
  matrix.entries.reserve(corpus.vocab.size());
  for (const auto& [token, counts] : corpus.vocab) {
    WordStats stats;
    stats.count = counts;
    const double total = static_cast<double>(counts[0]) + static_cast<double>(counts[1]);
    stats.precision[0] = static_cast<double>(counts[0]) / total;
    stats.precision[1] = static_cast<double>(counts[1]) / total;
    matrix.entries.emplace(token, stats);
  }
  return matrix;
}

std::pair<PivotSet, PivotSet> discover_pivots(const PrecisionMatrix& matrix,
                                              std::uint32_t f0, double p0) {
  if (!(p0 >= 0.5 && p0 < 1.0)) {
    throw std::invalid_argument("p0 must lie in [0.5, 1.0)");
  }
  if (f0 < 1) {
    throw std::invalid_argument("f0 must be >= 1");
  }
  PivotSet set0{0, {}, f0, p0};
  PivotSet set1{1, {}, f0, p0};
  for (const auto& [token, stats] : matrix.entries) {
    if (stats.total() < f0) continue;
    if (stats.precision[0] > p0) set0.words.insert(token);
    if (stats.precision[1] > p0) set1.words.insert(token);
  }
  return {std::move(set0), std::move(set1)};
}

}  // namespace pivot
