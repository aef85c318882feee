#pragma once

// Brute-force reference implementations, kept deliberately independent of the
// library code paths they check: plain per-sentence scans and a classic
// prefix-table edit-distance DP. Slow is fine here.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pivot/corpus.h"
#include "pivot/rng.h"

namespace oracles {

struct WordPrecision {
  std::uint32_t count0 = 0;
  std::uint32_t count1 = 0;
  double precision0 = 0.0;
  double precision1 = 0.0;
};

// Literal word-by-word procedure: classify every sentence by the existence of
// the word and tally the precision of predicting each class.
inline std::map<std::string, WordPrecision> precision_by_scan(const pivot::Corpus& corpus) {
  std::set<std::string> vocabulary;
  for (const pivot::Sentence& s : corpus.sentences) {
    vocabulary.insert(s.tokens.begin(), s.tokens.end());
  }
  std::map<std::string, WordPrecision> result;
  for (const std::string& word : vocabulary) {
    std::uint32_t containing = 0;
    std::uint32_t containing_label0 = 0;
    std::uint32_t containing_label1 = 0;
    for (const pivot::Sentence& s : corpus.sentences) {
      const bool has =
          std::find(s.tokens.begin(), s.tokens.end(), word) != s.tokens.end();
      if (!has) continue;
      ++containing;
      if (s.label == 0) ++containing_label0;
      else ++containing_label1;
    }
    WordPrecision wp;
    wp.count0 = containing_label0;
    wp.count1 = containing_label1;
    // Predicting class y for every sentence containing the word: precision is
    // the fraction of those predictions that are right.
    wp.precision0 = static_cast<double>(containing_label0) / containing;
    wp.precision1 = static_cast<double>(containing_label1) / containing;
    result[word] = wp;
  }
  return result;
}

// Recall of one histogram bin recomputed from scratch: membership of each
// word in the bin is re-derived with rational comparisons against the edges
// (n_bins + i) / (2 n_bins), then every sentence is scanned for bin words.
inline double bin_recall_by_scan(const pivot::Corpus& corpus, int class_label,
                                 std::uint32_t bin, std::uint32_t n_bins,
                                 std::uint32_t f0) {
  const auto words = precision_by_scan(corpus);
  std::set<std::string> in_bin;
  for (const auto& [word, wp] : words) {
    const std::uint64_t total = wp.count0 + wp.count1;
    if (total < f0) continue;
    const std::uint64_t c = class_label == 0 ? wp.count0 : wp.count1;
    const std::uint64_t two_n = 2ull * n_bins;
    const bool above_lo = two_n * c >= total * (n_bins + bin);
    const bool below_hi =
        bin == n_bins - 1 ? true : two_n * c < total * (n_bins + bin + 1);
    if (above_lo && below_hi) in_bin.insert(word);
  }
  std::uint32_t class_total = 0;
  std::uint32_t covered = 0;
  for (const pivot::Sentence& s : corpus.sentences) {
    if (s.label != class_label) continue;
    ++class_total;
    for (const std::string& t : s.tokens) {
      if (in_bin.count(t) != 0) {
        ++covered;
        break;
      }
    }
  }
  return class_total == 0 ? 0.0 : static_cast<double>(covered) / class_total;
}

// Voting overlap, recomputed with sorted word lists.
inline std::pair<std::uint32_t, std::uint32_t> vote_by_scan(
    const pivot::Sentence& sentence, const std::vector<std::string>& words0,
    const std::vector<std::string>& words1) {
  std::set<std::string> distinct(sentence.tokens.begin(), sentence.tokens.end());
  std::uint32_t s0 = 0, s1 = 0;
  for (const std::string& t : distinct) {
    if (std::binary_search(words0.begin(), words0.end(), t)) ++s0;
    if (std::binary_search(words1.begin(), words1.end(), t)) ++s1;
  }
  return {s0, s1};
}

// Textbook prefix-table Levenshtein, distance only.
inline std::size_t levenshtein_by_table(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace oracles
