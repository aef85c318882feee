#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "pivot/corpus.h"

namespace pivot {

struct WordStats {
  std::array<std::uint32_t, 2> count{0, 0};   // sentences of each class containing the word
  std::array<double, 2> precision{0.0, 0.0};  // count[y] / (count[0] + count[1])

  std::uint32_t total() const { return count[0] + count[1]; }
};

struct PrecisionMatrix {
  std::unordered_map<Token, WordStats> entries;
};

// Classification precision of each word for each class: the fraction of
// sentences containing the word that carry that label. Requires a balanced
// corpus so the baseline precision is 0.5.
PrecisionMatrix precision_matrix(const Corpus& corpus);

struct PivotSet {
  int class_label = 0;
  std::unordered_set<Token> words;
  std::uint32_t f0 = 1;  // minimum total sentence-occurrence count (inclusive)
  double p0 = 0.5;       // minimum precision (strict)

  bool contains(const Token& t) const { return words.count(t) != 0; }
};

// Words whose total count is >= f0 and whose precision for the class is
// strictly greater than p0. With p0 >= 0.5 the two sets are disjoint.
// p0 must lie in [0.5, 1.0) and f0 must be >= 1.
std::pair<PivotSet, PivotSet> discover_pivots(const PrecisionMatrix& matrix,
                                              std::uint32_t f0, double p0);

}  // namespace pivot
