#include "pivot/classifier.h"

#include <stdexcept>
#include <unordered_set>

namespace pivot {

VoteResult classify(const Sentence& sentence, const PivotSet& pivots0,
                    const PivotSet& pivots1, Rng& rng) {
  VoteResult result;
  std::unordered_set<std::string_view> seen;
  for (const Token& t : sentence.tokens) {
    if (!seen.insert(t).second) continue;
    if (pivots0.contains(t)) result.s0 += 1;
    if (pivots1.contains(t)) result.s1 += 1;
  }
  if (result.s0 == result.s1) {
    result.tie_broken = true;
    result.predicted = rng.coin() ? 1 : 0;
  } else {
    result.predicted = result.s1 > result.s0 ? 1 : 0;
  }
  return result;
}

EvalReport evaluate(const Corpus& corpus, const PivotSet& pivots0,
                    const PivotSet& pivots1, std::uint64_t seed,
                    std::vector<VoteResult>* per_sentence) {
  if (corpus.sentences.empty()) {
    throw std::invalid_argument("cannot evaluate on an empty corpus");
  }
  if (!corpus.balanced) {
    throw std::invalid_argument(
        "evaluation requires a balanced corpus so the random baseline is 0.5");
  }
  Rng rng(seed);
  std::size_t correct = 0;
  std::size_t ties = 0;
  std::array<std::size_t, 2> true_pos{0, 0};
  std::array<std::size_t, 2> predicted_count{0, 0};
  if (per_sentence) {
    per_sentence->clear();
    per_sentence->reserve(corpus.sentences.size());
  }
  for (const Sentence& s : corpus.sentences) {
    const VoteResult vote = classify(s, pivots0, pivots1, rng);
    const auto pred = static_cast<std::size_t>(vote.predicted);
    predicted_count[pred] += 1;
    if (vote.predicted == s.label) {
      correct += 1;
      true_pos[pred] += 1;
    }
    if (vote.tie_broken) ties += 1;
    if (per_sentence) per_sentence->push_back(vote);
  }
  EvalReport report;
  report.n = corpus.sentences.size();
  report.accuracy = static_cast<double>(correct) / static_cast<double>(report.n);
  report.tie_rate = static_cast<double>(ties) / static_cast<double>(report.n);
  for (int y : {0, 1}) {
    const auto yi = static_cast<std::size_t>(y);
    report.precision[yi] =
        predicted_count[yi] == 0
            ? 0.0
            : static_cast<double>(true_pos[yi]) / static_cast<double>(predicted_count[yi]);
    report.recall[yi] = corpus.class_sizes[yi] == 0
                            ? 0.0
                            : static_cast<double>(true_pos[yi]) /
                                  static_cast<double>(corpus.class_sizes[yi]);
  }
  return report;
}

}  // namespace pivot
