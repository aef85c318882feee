#include "pivot/histogram.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace pivot {

int precision_bin(std::uint64_t c, std::uint64_t t, std::uint32_t n_bins) {
  // Edge i sits at (n_bins + i) / (2 * n_bins); c/t >= edge_i iff
  // 2 * n_bins * c >= t * (n_bins + i).
  if (t == 0 || 2 * c < t) return -1;
  const std::uint64_t q = (2 * static_cast<std::uint64_t>(n_bins) * c) / t;
  const std::uint64_t i = q - n_bins;
  return static_cast<int>(i >= n_bins ? n_bins - 1 : i);
}

namespace {

std::uint32_t bin_count_for_width(double bin_width) {
  if (!(bin_width > 0.0 && bin_width <= 0.5)) {
    throw std::invalid_argument("bin width must lie in (0, 0.5]");
  }
  const double n = std::round(0.5 / bin_width);
  if (n < 1.0 || std::fabs(n * bin_width - 0.5) > 1e-9) {
    throw std::invalid_argument("bin width must divide 0.5 evenly");
  }
  return static_cast<std::uint32_t>(n);
}

}  // namespace

Histogram build_histogram(const Corpus& corpus, const PrecisionMatrix& matrix,
                          std::uint32_t f0, double bin_width) {
  const std::uint32_t n_bins = bin_count_for_width(bin_width);
  if (!corpus.balanced) {
    throw std::invalid_argument("histogram requires a balanced corpus");
  }
  if (f0 < 1) {
    throw std::invalid_argument("f0 must be >= 1");
  }

  // Words with total count >= f0, binned per class.
  std::vector<std::vector<std::uint32_t>> pivot_counts(
      2, std::vector<std::uint32_t>(n_bins, 0));
  for (const auto& [token, stats] : matrix.entries) {
    if (stats.total() < f0) continue;
    for (int y : {0, 1}) {
      const int bin = precision_bin(stats.count[static_cast<std::size_t>(y)],
                                    stats.total(), n_bins);
      if (bin >= 0) pivot_counts[static_cast<std::size_t>(y)][static_cast<std::size_t>(bin)] += 1;
    }
  }

  // Per bin, how many sentences of the class contain at least one bin word.
  std::vector<std::vector<std::uint32_t>> covered(2, std::vector<std::uint32_t>(n_bins, 0));
  std::vector<int> hit(n_bins, 0);
  for (const Sentence& s : corpus.sentences) {
    const auto y = static_cast<std::size_t>(s.label);
    std::fill(hit.begin(), hit.end(), 0);
    std::unordered_set<std::string_view> seen;
    for (const Token& t : s.tokens) {
      if (!seen.insert(t).second) continue;
      const auto it = matrix.entries.find(t);
      if (it == matrix.entries.end()) {
        throw std::invalid_argument(
            "precision matrix does not cover this corpus (token: " + t + ")");
      }
      if (it->second.total() < f0) continue;
      const int bin = precision_bin(it->second.count[y], it->second.total(), n_bins);
      if (bin >= 0) hit[static_cast<std::size_t>(bin)] = 1;
    }
    for (std::uint32_t i = 0; i < n_bins; ++i) {
      covered[y][i] += static_cast<std::uint32_t>(hit[i]);
    }
  }

  Histogram h;
  h.bin_width = bin_width;
  for (int y : {0, 1}) {
    const auto yi = static_cast<std::size_t>(y);
    for (std::uint32_t i = 0; i < n_bins; ++i) {
      HistogramBin bin;
      bin.class_label = y;
      bin.p_lo = static_cast<double>(n_bins + i) / (2.0 * n_bins);
      bin.p_hi = static_cast<double>(n_bins + i + 1) / (2.0 * n_bins);
      bin.pivot_count = pivot_counts[yi][i];
      bin.recall = corpus.class_sizes[yi] == 0
                       ? 0.0
                       : static_cast<double>(covered[yi][i]) /
                             static_cast<double>(corpus.class_sizes[yi]);
      h.bins.push_back(bin);
    }
  }
  return h;
}

HistogramFormat parse_histogram_format(const std::string& name) {
  if (name == "csv") return HistogramFormat::Csv;
  if (name == "json") return HistogramFormat::Json;
  if (name == "svg") return HistogramFormat::Svg;
  throw std::invalid_argument("unknown histogram format: " + name);
}

namespace {

int edge_decimals(double bin_width) {
  int d = 1;
  double scaled = bin_width * 10.0;
  while (d < 6 && std::fabs(scaled - std::round(scaled)) > 1e-9) {
    scaled *= 10.0;
    ++d;
  }
  return d;
}

std::string format_fixed(double value, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string emit_csv(const Histogram& h) {
  const int d = edge_decimals(h.bin_width);
  std::string out = "class,p_lo,p_hi,pivot_count,recall\n";
  for (const HistogramBin& bin : h.bins) {
    out += std::to_string(bin.class_label);
    out += ',';
    out += format_fixed(bin.p_lo, d);
    out += ',';
    out += format_fixed(bin.p_hi, d);
    out += ',';
    out += std::to_string(bin.pivot_count);
    out += ',';
    out += format_fixed(bin.recall, 4);
    out += '\n';
  }
  return out;
}

std::string emit_json(const Histogram& h) {
  nlohmann::json bins = nlohmann::json::array();
  for (const HistogramBin& bin : h.bins) {
    bins.push_back({{"class", bin.class_label},
                    {"p_lo", bin.p_lo},
                    {"p_hi", bin.p_hi},
                    {"pivot_count", bin.pivot_count},
                    {"recall", bin.recall}});
  }
  nlohmann::json j{{"bin_width", h.bin_width}, {"corpus_id", h.corpus_id}, {"bins", bins}};
  return j.dump(2) + "\n";
}

std::string emit_svg(const Histogram& h) {
  const int n_bins = static_cast<int>(h.bins.size() / 2);
  const int d = edge_decimals(h.bin_width);
  const double panel_w = 280.0, panel_h = 200.0;
  const double margin_l = 46.0, margin_t = 40.0, gap = 40.0, margin_b = 44.0;
  const double width = margin_l + panel_w + gap + panel_w + 16.0;
  const double height = margin_t + panel_h + margin_b;

  std::string svg;
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                width, height, width, height);
  svg += buf;
  svg += "<desc>per-class precision-recall histogram";
  if (!h.corpus_id.empty()) svg += " of " + h.corpus_id;
  svg += "</desc>\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  for (int y = 0; y < 2; ++y) {
    const double px = margin_l + y * (panel_w + gap);
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                  "font-size=\"14\" text-anchor=\"middle\">class %d</text>\n",
                  px + panel_w / 2.0, margin_t - 14.0, y);
    svg += buf;
    // axes
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"#000000\"/>\n",
                  px, margin_t, px, margin_t + panel_h);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"#000000\"/>\n",
                  px, margin_t + panel_h, px + panel_w, margin_t + panel_h);
    svg += buf;
    for (int tick = 0; tick <= 4; ++tick) {
      const double frac = tick / 4.0;
      const double ty = margin_t + panel_h - frac * panel_h;
      std::snprintf(buf, sizeof(buf),
                    "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                    "stroke=\"#cccccc\"/>\n",
                    px, ty, px + panel_w, ty);
      svg += buf;
      std::snprintf(buf, sizeof(buf),
                    "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                    "font-size=\"10\" text-anchor=\"end\">%.2f</text>\n",
                    px - 4.0, ty + 3.0, frac);
      svg += buf;
    }
    const double slot = panel_w / n_bins;
    for (int i = 0; i < n_bins; ++i) {
      const HistogramBin& bin = h.bins[static_cast<std::size_t>(y * n_bins + i)];
      const double bar_w = slot * 0.7;
      const double bx = px + i * slot + slot * 0.15;
      const double bar_h = bin.recall * panel_h;
      std::snprintf(buf, sizeof(buf),
                    "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                    "fill=\"#4878a8\"/>\n",
                    bx, margin_t + panel_h - bar_h, bar_w, bar_h);
      svg += buf;
      std::snprintf(buf, sizeof(buf),
                    "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                    "font-size=\"9\" text-anchor=\"middle\">%s</text>\n",
                    px + i * slot + slot / 2.0, margin_t + panel_h + 12.0,
                    format_fixed(bin.p_lo, d).c_str());
      svg += buf;
      std::snprintf(buf, sizeof(buf),
                    "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                    "font-size=\"9\" text-anchor=\"middle\">%s</text>\n",
                    px + i * slot + slot / 2.0,
                    margin_t + panel_h - bar_h - 3.0, format_fixed(bin.recall, 4).c_str());
      svg += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                  "font-size=\"11\" text-anchor=\"middle\">precision bin</text>\n",
                  px + panel_w / 2.0, margin_t + panel_h + 28.0);
    svg += buf;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string emit_histogram(const Histogram& h, HistogramFormat format) {
  if (h.bins.empty()) {
    throw std::invalid_argument("cannot emit an empty histogram");
  }
  switch (format) {
    case HistogramFormat::Csv:
      return emit_csv(h);
    case HistogramFormat::Json:
      return emit_json(h);
    case HistogramFormat::Svg:
      return emit_svg(h);
  }
  throw std::invalid_argument("unknown histogram format");
}

}  // namespace pivot
