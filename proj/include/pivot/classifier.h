#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pivot/corpus.h"
#include "pivot/discovery.h"
#include "pivot/rng.h"

namespace pivot {

struct VoteResult {
  std::uint32_t s0 = 0;  // distinct sentence tokens found in pivots0
  std::uint32_t s1 = 0;  // distinct sentence tokens found in pivots1
  int predicted = 0;
  bool tie_broken = false;
};

// Voting classifier: the sentence is viewed as a bag of words, s_y is the
// distinct-token overlap with each pivot set (a repeated pivot counts once),
// and the larger overlap wins. Ties, including the all-zero case, are broken
// by a fair coin from the supplied stream. Callers are expected to pass sets
// discovered with the same p0 >= 0.5, which makes them disjoint.
VoteResult classify(const Sentence& sentence, const PivotSet& pivots0,
                    const PivotSet& pivots1, Rng& rng);

struct EvalReport {
  double accuracy = 0.0;
  std::array<double, 2> precision{0.0, 0.0};
  std::array<double, 2> recall{0.0, 0.0};
  std::size_t n = 0;
  double tie_rate = 0.0;
};

// Classifies every sentence in corpus order, drawing one coin per tied
// sentence from a stream seeded here, so results are reproducible. Requires a
// balanced non-empty corpus. When per_sentence is non-null it receives one
// VoteResult per sentence in corpus order.
EvalReport evaluate(const Corpus& corpus, const PivotSet& pivots0,
                    const PivotSet& pivots1, std::uint64_t seed,
                    std::vector<VoteResult>* per_sentence = nullptr);

}  // namespace pivot
