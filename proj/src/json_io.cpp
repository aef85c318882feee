#include "pivot/json_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pivot {

nlohmann::json load_report_json(const LoadReport& report) {
  return {{"lines_read", report.lines_read},
          {"sentences_kept", report.sentences_kept},
          {"lines_skipped", report.lines_skipped}};
}

nlohmann::json config_json(const RunConfig& config) {
  return {{"f0", config.f0},
          {"p0", config.p0},
          {"bin_width", config.bin_width},
          {"seed", config.seed},
          {"lowercase", config.lowercase},
          {"mask_mode", config.mask_mode},
          {"paths", config.paths}};
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig config;
  if (j.contains("f0")) config.f0 = j.at("f0").get<std::uint32_t>();
  if (j.contains("p0")) config.p0 = j.at("p0").get<double>();
  if (j.contains("bin_width")) config.bin_width = j.at("bin_width").get<double>();
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("lowercase")) config.lowercase = j.at("lowercase").get<bool>();
  if (j.contains("mask_mode")) config.mask_mode = j.at("mask_mode").get<std::string>();
  if (j.contains("paths")) {
    config.paths = j.at("paths").get<std::map<std::string, std::string>>();
  }
  return config;
}

nlohmann::json pivots_json(const PivotSet& pivots, const PrecisionMatrix& matrix) {
  struct Row {
    Token token;
    std::uint32_t count0 = 0;
    std::uint32_t count1 = 0;
    double precision = 0.0;
  };
  std::vector<Row> rows;
  rows.reserve(pivots.words.size());
  for (const Token& word : pivots.words) {
    const auto it = matrix.entries.find(word);
    if (it == matrix.entries.end()) {
      throw std::invalid_argument("pivot word missing from precision matrix: " + word);
    }
    rows.push_back({word, it->second.count[0], it->second.count[1],
                    it->second.precision[static_cast<std::size_t>(pivots.class_label)]});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.precision != b.precision) return a.precision > b.precision;
    return a.token < b.token;
  });
  nlohmann::json words = nlohmann::json::array();
  for (const Row& row : rows) {
    words.push_back({{"token", row.token},
                     {"count0", row.count0},
                     {"count1", row.count1},
                     {"precision", row.precision}});
  }
  return {{"class", pivots.class_label},
          {"f0", pivots.f0},
          {"p0", pivots.p0},
          {"words", words}};
}

PivotSet pivots_from_json(const nlohmann::json& j) {
  PivotSet pivots;
  pivots.class_label = j.at("class").get<int>();
  pivots.f0 = j.at("f0").get<std::uint32_t>();
  pivots.p0 = j.at("p0").get<double>();
  for (const auto& word : j.at("words")) {
    pivots.words.insert(word.at("token").get<std::string>());
  }
  return pivots;
}

nlohmann::json eval_report_json(const EvalReport& report) {
  nlohmann::json per_class = nlohmann::json::array();
  for (int y : {0, 1}) {
    const auto yi = static_cast<std::size_t>(y);
    per_class.push_back({{"class", y},
                         {"precision", report.precision[yi]},
                         {"recall", report.recall[yi]}});
  }
  return {{"accuracy", report.accuracy},
          {"n", report.n},
          {"tie_rate", report.tie_rate},
          {"per_class", per_class}};
}

nlohmann::json audit_report_json(const AuditReport& report) {
  return {{"n_pairs", report.n_pairs},
          {"mask_token", report.mask_token},
          {"mean_modified", report.mean_modified},
          {"pct_modified_of_length", report.pct_modified_of_length},
          {"pct_pivot_among_modified", report.pct_pivot_among_modified},
          {"mean_masked_distance", report.mean_masked_distance},
          {"pct_distance_of_length", report.pct_distance_of_length},
          {"mean_src_len", report.mean_src_len},
          {"distance_distribution", report.distance_distribution}};
}

nlohmann::json correlation_json(const CorrelationResult& result) {
  return {{"r", result.r},
          {"p", result.p_value},
          {"method", result.method},
          {"n", result.n},
          {"permutations", result.permutations},
          {"mc_stderr", result.mc_stderr}};
}

nlohmann::json model_json(const LogisticModel& model) {
  return {{"bias", model.bias},
          {"l2", model.l2},
          {"binary_features", model.binary_features},
          {"weights", model.weights}};
}

LogisticModel model_from_json(const nlohmann::json& j) {
  LogisticModel model;
  model.bias = j.at("bias").get<double>();
  model.l2 = j.at("l2").get<double>();
  model.binary_features = j.at("binary_features").get<bool>();
  model.weights = j.at("weights").get<std::map<Token, double>>();
  return model;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("short write to file: " + path);
  }
}

}  // namespace pivot
