#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pivot/corpus.h"
#include "pivot/discovery.h"

namespace pivot {

struct HistogramBin {
  int class_label = 0;
  double p_lo = 0.0;
  double p_hi = 0.0;
  std::uint32_t pivot_count = 0;  // words with total count >= f0 falling in the bin
  double recall = 0.0;            // fraction of the class's sentences containing a bin word
};

struct Histogram {
  std::vector<HistogramBin> bins;  // class 0 bins first, then class 1; same edges
  double bin_width = 0.1;
  std::string corpus_id;
};

// Index of the precision bin for a word seen in `c` sentences of the class out
// of `t` total, with bins of width 0.5/n_bins partitioning [0.5, 1.0]. Bins
// are half-open [p_i, p_{i+1}) except the top one, which is closed at 1.0 so
// precision-1.0 words are counted. Returns -1 when the precision is below 0.5
// (the word bins for the other class instead; a word at exactly 0.5 bins for
// both). Exact integer arithmetic, no floating-point edge cases.
int precision_bin(std::uint64_t c, std::uint64_t t, std::uint32_t n_bins);

// Per-class recall of each precision band: for each class y and bin i, gather
// the words with total count >= f0 whose precision for y falls in the bin, and
// measure the fraction of class-y sentences containing at least one of them.
// bin_width must divide 0.5 evenly (default 0.1); the corpus must be balanced
// and the matrix must have been built from it.
Histogram build_histogram(const Corpus& corpus, const PrecisionMatrix& matrix,
                          std::uint32_t f0, double bin_width);

enum class HistogramFormat { Csv, Json, Svg };

// Accepts "csv", "json", "svg"; anything else is an error.
HistogramFormat parse_histogram_format(const std::string& name);

// Renders the histogram as file bytes. Deterministic: the same histogram
// always yields identical bytes. CSV columns are
// `class,p_lo,p_hi,pivot_count,recall`; SVG is a grouped bar chart with one
// panel per class.
std::string emit_histogram(const Histogram& h, HistogramFormat format);

}  // namespace pivot
