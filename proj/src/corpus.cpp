#include "pivot/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "pivot/rng.h"

namespace pivot {

std::vector<Token> tokenize(std::string_view line, const TokenizerConfig& config) {
  std::vector<Token> tokens;
  Token current;
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    if (config.lowercase) {
      ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    current.push_back(ch);
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

void count_sentence(VocabCounts& vocab, const Sentence& s) {
  std::unordered_set<std::string_view> seen;
  for (const Token& t : s.tokens) {
    if (seen.insert(t).second) {
      vocab[t][static_cast<std::size_t>(s.label)] += 1;
    }
  }
}

}  // namespace

Corpus make_corpus(std::vector<Sentence> sentences) {
  Corpus corpus;
  corpus.sentences = std::move(sentences);
  for (const Sentence& s : corpus.sentences) {
    if (s.label != 0 && s.label != 1) {
      throw std::invalid_argument("sentence label must be 0 or 1");
    }
    if (s.tokens.empty()) {
      throw std::invalid_argument("sentence with no tokens");
    }
    corpus.class_sizes[static_cast<std::size_t>(s.label)] += 1;
    count_sentence(corpus.vocab, s);
  }
  return corpus;
}

namespace {

void load_class_file(const std::string& path, int label, const TokenizerConfig& config,
                     std::vector<Sentence>& sentences, LoadReport& report) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open corpus file: " + path);
  }
  std::string line;
  std::size_t kept = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    report.lines_read += 1;
    std::vector<Token> tokens = tokenize(line, config);
    if (tokens.empty()) {
      report.lines_skipped += 1;
      continue;
    }
    sentences.push_back(Sentence{std::move(tokens), label});
    kept += 1;
  }
  if (kept == 0) {
    throw std::runtime_error("no usable sentences in corpus file: " + path);
  }
  report.sentences_kept += kept;
}

}  // namespace

Corpus load_corpus(const std::string& class0_path, const std::string& class1_path,
                   const TokenizerConfig& config, LoadReport* report) {
  LoadReport local;
  std::vector<Sentence> sentences;
  load_class_file(class0_path, 0, config, sentences, local);
  load_class_file(class1_path, 1, config, sentences, local);
  if (report) *report = local;
  return make_corpus(std::move(sentences));
}

Corpus balance(const Corpus& corpus, std::uint64_t seed) {
  if (corpus.class_sizes[0] == 0 || corpus.class_sizes[1] == 0) {
    throw std::invalid_argument("cannot balance a corpus with an empty class");
  }
  if (corpus.class_sizes[0] == corpus.class_sizes[1]) {
    Corpus out = corpus;
    out.balanced = true;
    out.seed = seed;
    return out;
  }

  const int majority = corpus.class_sizes[0] > corpus.class_sizes[1] ? 0 : 1;
  const std::size_t target = std::min(corpus.class_sizes[0], corpus.class_sizes[1]);

  std::vector<std::size_t> majority_idx;
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    if (corpus.sentences[i].label == majority) majority_idx.push_back(i);
  }
  Rng rng(seed);
  rng.shuffle(majority_idx);
  majority_idx.resize(target);
  std::sort(majority_idx.begin(), majority_idx.end());

  // Keep everything else, splice the sampled majority back in original order.
  std::vector<Sentence> kept;
  kept.reserve(target * 2);
  std::size_t next = 0;
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    if (corpus.sentences[i].label != majority) {
      kept.push_back(corpus.sentences[i]);
    } else if (next < majority_idx.size() && majority_idx[next] == i) {
      kept.push_back(corpus.sentences[i]);
      ++next;
    }
  }
  Corpus out = make_corpus(std::move(kept));
  out.balanced = true;
  out.seed = seed;
  return out;
}

std::vector<TransferPair> load_pairs(const std::string& pairs_path, int source_label,
                                     const TokenizerConfig& config, LoadReport* report) {
  if (source_label != 0 && source_label != 1) {
    throw std::invalid_argument("source label must be 0 or 1");
  }
  std::ifstream in(pairs_path);
  if (!in) {
    throw std::runtime_error("cannot open pairs file: " + pairs_path);
  }
  LoadReport local;
  std::vector<TransferPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    local.lines_read += 1;
    if (tokenize(line, config).empty()) {
      local.lines_skipped += 1;
      continue;
    }
    const std::size_t tabs = static_cast<std::size_t>(
        std::count(line.begin(), line.end(), '\t'));
    if (tabs != 1) {
      throw std::runtime_error(pairs_path + ":" + std::to_string(line_no) +
                               ": expected exactly one tab, found " +
                               std::to_string(tabs));
    }
    const std::size_t tab = line.find('\t');
    std::vector<Token> src = tokenize(std::string_view(line).substr(0, tab), config);
    std::vector<Token> out = tokenize(std::string_view(line).substr(tab + 1), config);
    if (src.empty() || out.empty()) {
      throw std::runtime_error(pairs_path + ":" + std::to_string(line_no) +
                               ": empty column");
    }
    TransferPair pair;
    pair.source = Sentence{std::move(src), source_label};
    pair.output = std::move(out);
    pair.target_label = 1 - source_label;
    pairs.push_back(std::move(pair));
    local.sentences_kept += 1;
  }
  if (report) *report = local;
  return pairs;
}

}  // namespace pivot
