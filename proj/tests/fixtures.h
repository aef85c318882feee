#pragma once

// Synthetic corpora and pair lists shared by the unit and acceptance suites.

#include <cstdint>
#include <string>
#include <vector>

#include "pivot/corpus.h"
#include "pivot/discovery.h"
#include "pivot/rng.h"

namespace fixtures {

inline pivot::Sentence sentence(std::initializer_list<const char*> tokens, int label) {
  pivot::Sentence s;
  for (const char* t : tokens) s.tokens.emplace_back(t);
  s.label = label;
  return s;
}

// Class 0: "good food", "good service"; class 1: "bad food", "bad service".
inline pivot::Corpus toy_corpus() {
  pivot::Corpus c = pivot::make_corpus({
      sentence({"good", "food"}, 0),
      sentence({"good", "service"}, 0),
      sentence({"bad", "food"}, 1),
      sentence({"bad", "service"}, 1),
  });
  c.balanced = true;  // already 2 vs 2
  return c;
}

// Two classes with disjoint vocabularies: every word has precision 1.0.
inline pivot::Corpus all_pivot_corpus(std::size_t per_class, std::uint64_t seed,
                                      std::size_t vocab_per_class = 40) {
  pivot::Rng rng(seed);
  std::vector<pivot::Sentence> sentences;
  for (int label : {0, 1}) {
    const std::string prefix = label == 0 ? "a" : "b";
    for (std::size_t i = 0; i < per_class; ++i) {
      pivot::Sentence s;
      s.label = label;
      const std::size_t len = 3 + rng.below(6);
      for (std::size_t k = 0; k < len; ++k) {
        s.tokens.push_back(prefix + std::to_string(rng.below(vocab_per_class)));
      }
      sentences.push_back(std::move(s));
    }
  }
  pivot::Corpus c = pivot::make_corpus(std::move(sentences));
  c.balanced = true;
  return c;
}

// Every pool sentence appears once per class, so each word's class counts are
// identical and every precision is exactly 0.5.
inline pivot::Corpus mirrored_corpus(std::size_t pool, std::uint64_t seed,
                                     std::size_t vocab = 60) {
  pivot::Rng rng(seed);
  std::vector<pivot::Sentence> sentences;
  for (std::size_t i = 0; i < pool; ++i) {
    pivot::Sentence s;
    const std::size_t len = 2 + rng.below(8);
    for (std::size_t k = 0; k < len; ++k) {
      s.tokens.push_back("w" + std::to_string(rng.below(vocab)));
    }
    s.label = 0;
    sentences.push_back(s);
    s.label = 1;
    sentences.push_back(std::move(s));
  }
  pivot::Corpus c = pivot::make_corpus(std::move(sentences));
  c.balanced = true;
  return c;
}

// Balanced random corpus: up to max_per_class sentences per class over a
// shared vocabulary of up to max_vocab words.
inline pivot::Corpus random_corpus(pivot::Rng& rng, std::size_t max_per_class = 100,
                                   std::size_t max_vocab = 50) {
  const std::size_t per_class = 1 + rng.below(max_per_class);
  const std::size_t vocab = 1 + rng.below(max_vocab);
  std::vector<pivot::Sentence> sentences;
  for (int label : {0, 1}) {
    for (std::size_t i = 0; i < per_class; ++i) {
      pivot::Sentence s;
      s.label = label;
      const std::size_t len = 1 + rng.below(12);
      for (std::size_t k = 0; k < len; ++k) {
        s.tokens.push_back("w" + std::to_string(rng.below(vocab)));
      }
      sentences.push_back(std::move(s));
    }
  }
  pivot::Corpus c = pivot::make_corpus(std::move(sentences));
  c.balanced = true;
  return c;
}

inline std::vector<std::string> random_tokens(pivot::Rng& rng, std::size_t max_len,
                                              std::size_t vocab) {
  const std::size_t len = 1 + rng.below(max_len);
  std::vector<std::string> tokens;
  for (std::size_t k = 0; k < len; ++k) {
    tokens.push_back("t" + std::to_string(rng.below(vocab)));
  }
  return tokens;
}

struct SwapFixture {
  std::vector<pivot::TransferPair> pairs;
  pivot::PivotSet pivots_src;
  pivot::PivotSet pivots_tgt;
};

// Pairs whose output differs from the source by exactly one pivot swapped in
// place for a pivot of the target class.
inline SwapFixture single_swap_pairs(std::size_t n_pairs, std::uint64_t seed,
                                     int source_label = 0) {
  pivot::Rng rng(seed);
  SwapFixture fx;
  fx.pivots_src.class_label = source_label;
  fx.pivots_tgt.class_label = 1 - source_label;
  fx.pivots_src.p0 = fx.pivots_tgt.p0 = 0.7;
  const std::size_t n_pivots = 12;
  for (std::size_t i = 0; i < n_pivots; ++i) {
    fx.pivots_src.words.insert("srcpiv" + std::to_string(i));
    fx.pivots_tgt.words.insert("tgtpiv" + std::to_string(i));
  }
  for (std::size_t i = 0; i < n_pairs; ++i) {
    pivot::TransferPair pair;
    pair.source.label = source_label;
    pair.target_label = 1 - source_label;
    const std::size_t len = 4 + rng.below(6);
    const std::size_t pivot_pos = rng.below(len);
    const std::size_t pivot_id = rng.below(n_pivots);
    for (std::size_t k = 0; k < len; ++k) {
      if (k == pivot_pos) {
        pair.source.tokens.push_back("srcpiv" + std::to_string(pivot_id));
        pair.output.push_back("tgtpiv" + std::to_string(pivot_id));
      } else {
        const std::string filler = "fill" + std::to_string(rng.below(20));
        pair.source.tokens.push_back(filler);
        pair.output.push_back(filler);
      }
    }
    fx.pairs.push_back(std::move(pair));
  }
  return fx;
}

}  // namespace fixtures
