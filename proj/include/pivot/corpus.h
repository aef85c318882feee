#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pivot {

using Token = std::string;

struct TokenizerConfig {
  bool lowercase = true;  // ASCII lowercasing before splitting
};

// Splits on whitespace runs; punctuation stays attached to its word. Never
// produces empty tokens.
std::vector<Token> tokenize(std::string_view line, const TokenizerConfig& config);

struct Sentence {
  std::vector<Token> tokens;
  int label = 0;  // 0 or 1

  bool operator==(const Sentence&) const = default;
};

struct LoadReport {
  std::size_t lines_read = 0;
  std::size_t sentences_kept = 0;
  std::size_t lines_skipped = 0;  // blank / whitespace-only lines
};

// Sentence-level occurrence counts per class: a token appearing twice in one
// sentence still counts once toward that class.
using VocabCounts = std::unordered_map<Token, std::array<std::uint32_t, 2>>;

struct Corpus {
  std::vector<Sentence> sentences;
  VocabCounts vocab;
  std::array<std::size_t, 2> class_sizes{0, 0};
  bool balanced = false;
  std::uint64_t seed = 0;  // seed used by balance(); 0 until balanced

  bool operator==(const Corpus&) const = default;
};

// Computes vocab and class sizes from the given sentences.
Corpus make_corpus(std::vector<Sentence> sentences);

// One sentence per line, one file per class. Blank lines are skipped and
// counted in the report; a file with no usable line is an error.
Corpus load_corpus(const std::string& class0_path, const std::string& class1_path,
                   const TokenizerConfig& config, LoadReport* report = nullptr);

// Uniformly down-samples the majority class to the minority size, without
// replacement; the minority class is untouched. An already balanced corpus is
// returned unchanged apart from the flag and seed, which makes the operation
// idempotent for a fixed seed.
Corpus balance(const Corpus& corpus, std::uint64_t seed);

struct TransferPair {
  Sentence source;            // label = source class
  std::vector<Token> output;  // the transferred sentence
  int target_label = 0;       // always 1 - source.label

  bool operator==(const TransferPair&) const = default;
};

// Reads a TSV of `source<TAB>output` pairs. Blank lines are skipped and
// counted; any other malformed line (no single tab, empty column) is an error
// naming the line number.
std::vector<TransferPair> load_pairs(const std::string& pairs_path, int source_label,
                                     const TokenizerConfig& config,
                                     LoadReport* report = nullptr);

}  // namespace pivot
