// Command-line front end: discover / classify / histogram / audit /
// train-logistic / correlate / sweep. All randomness flows from --seed, and a
// given invocation always writes byte-identical reports.

#include <array>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pivot/audit.h"
#include "pivot/classifier.h"
#include "pivot/config.h"
#include "pivot/corpus.h"
#include "pivot/discovery.h"
#include "pivot/histogram.h"
#include "pivot/json_io.h"
#include "pivot/logistic.h"
#include "pivot/stats.h"

namespace {

using nlohmann::json;
using namespace pivot;

// Bad invocations exit 2; runtime failures exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FileConfig {
  RunConfig values;
  std::set<std::string> present;  // keys the file actually set
};

FileConfig preload_config(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    }
  }
  FileConfig config;
  if (path.empty()) return config;
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const std::exception& e) {
    throw UsageError("cannot load config file " + path + ": " + e.what());
  }
  config.values = config_from_json(j);
  for (const auto& item : j.items()) config.present.insert(item.key());
  return config;
}

std::uint64_t seed_default(const FileConfig& config) {
  if (const char* env = std::getenv("PIVOT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw UsageError("PIVOT_SEED is not an unsigned integer: " + std::string(env));
    }
    return v;
  }
  return config.values.seed;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

// "start:stop:step" or a comma-separated list.
std::vector<double> parse_double_grid(const std::string& spec) {
  std::vector<double> values;
  if (spec.find(':') != std::string::npos) {
    const std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 3) throw UsageError("grid must be start:stop:step, got '" + spec + "'");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0)) throw UsageError("grid step must be positive");
    for (int k = 0;; ++k) {
      const double v = start + k * step;
      if (v > stop + 1e-9) break;
      values.push_back(v);
    }
  } else {
    for (const std::string& part : split(spec, ',')) values.push_back(parse_double(part));
  }
  if (values.empty()) throw UsageError("empty grid: '" + spec + "'");
  return values;
}

std::vector<std::uint32_t> parse_count_grid(const std::string& spec) {
  std::vector<std::uint32_t> values;
  for (const double v : parse_double_grid(spec)) {
    if (v < 1.0 || v != std::floor(v)) {
      throw UsageError("count grid entries must be positive integers");
    }
    values.push_back(static_cast<std::uint32_t>(v));
  }
  return values;
}

MaskMode parse_mask_mode(const std::string& name) {
  if (name == "all-modified") return MaskMode::AllModified;
  if (name == "pivots-only") return MaskMode::PivotsOnly;
  throw UsageError("unknown mask mode: " + name);
}

void check_p0(double p0) {
  if (!(p0 >= 0.5 && p0 < 1.0)) throw UsageError("--p0 must lie in [0.5, 1.0)");
}

void check_distinct(const std::string& what, const std::string& a0, const std::string& a1,
                    const std::string& b0, const std::string& b1) {
  for (const std::string& train : {a0, a1}) {
    if (train == b0 || train == b1) {
      throw UsageError(what + " must use files disjoint from the discovery corpus; " +
                       train + " appears on both sides and would leak");
    }
  }
}

std::string join_tokens(const std::vector<Token>& tokens) {
  std::string s;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) s += ' ';
    s += tokens[i];
  }
  return s;
}

void write_json_report(const std::string& path, const json& j) {
  write_file(path, j.dump(2) + "\n");
}

// discover writes the training paths into its report; classify and sweep read
// them back to refuse evaluating on the same files.
std::pair<std::string, std::string> recorded_corpus_paths(const json& report) {
  std::pair<std::string, std::string> paths;
  if (report.contains("config") && report["config"].contains("paths")) {
    const json& p = report["config"]["paths"];
    if (p.contains("class0")) paths.first = p["class0"].get<std::string>();
    if (p.contains("class1")) paths.second = p["class1"].get<std::string>();
  }
  return paths;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pivot: mines attribute-predictive words from binary-labeled corpora, "
      "classifies sentences by word voting, builds precision-recall "
      "histograms, and audits style-transfer outputs"};
  app.require_subcommand(1);

  FileConfig file_config;
  try {
    file_config = preload_config(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  RunConfig base = file_config.values;
  try {
    base.seed = seed_default(file_config);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string config_path;  // informational; applied during preload
  app.add_option("--config", config_path, "JSON config file; flags override its values");

  auto add_common = [&](CLI::App* sub, RunConfig& cfg, bool& no_lowercase) {
    sub->add_option("--config", config_path, "JSON config file; flags override its values");
    sub->add_option("--seed", cfg.seed, "seed for all randomness (also: PIVOT_SEED)")
        ->capture_default_str();
    sub->add_flag("--no-lowercase", no_lowercase, "keep the original casing");
  };

  // --- discover ---------------------------------------------------------
  auto* discover = app.add_subcommand(
      "discover", "mine words whose presence predicts the class with high precision");
  RunConfig d_cfg = base;
  bool d_no_lower = false;
  std::string d_class0, d_class1, d_out;
  add_common(discover, d_cfg, d_no_lower);
  discover->add_option("--class0", d_class0, "class-0 sentences, one per line")->required();
  discover->add_option("--class1", d_class1, "class-1 sentences, one per line")->required();
  discover->add_option("--f0", d_cfg.f0, "minimum sentence-occurrence count (inclusive)")
      ->capture_default_str();
  discover->add_option("--p0", d_cfg.p0, "precision threshold in [0.5, 1.0), strict")
      ->capture_default_str();
  discover->add_option("--out", d_out, "output JSON")->required();

  // --- classify ---------------------------------------------------------
  auto* classify_cmd = app.add_subcommand(
      "classify", "evaluate the voting classifier (or a trained model) on a test corpus");
  RunConfig c_cfg = base;
  bool c_no_lower = false;
  std::string c_class0, c_class1, c_pivots, c_model, c_out, c_tsv;
  add_common(classify_cmd, c_cfg, c_no_lower);
  classify_cmd->add_option("--class0", c_class0, "test sentences for class 0")->required();
  classify_cmd->add_option("--class1", c_class1, "test sentences for class 1")->required();
  auto* opt_pivots = classify_cmd->add_option("--pivots", c_pivots, "pivot JSON from discover");
  auto* opt_model = classify_cmd->add_option("--model", c_model, "model JSON from train-logistic");
  opt_pivots->excludes(opt_model);
  classify_cmd->add_option("--out", c_out, "output JSON")->required();
  classify_cmd->add_option("--per-sentence", c_tsv, "optional per-sentence TSV");

  // --- histogram --------------------------------------------------------
  auto* histogram_cmd = app.add_subcommand(
      "histogram", "per-class recall of each precision band of words");
  RunConfig h_cfg = base;
  // Rare strong words stay visible by default here.
  if (file_config.present.count("f0") == 0) h_cfg.f0 = 1;
  bool h_no_lower = false;
  std::string h_class0, h_class1, h_format = "csv", h_out;
  add_common(histogram_cmd, h_cfg, h_no_lower);
  histogram_cmd->add_option("--class0", h_class0, "class-0 sentences")->required();
  histogram_cmd->add_option("--class1", h_class1, "class-1 sentences")->required();
  histogram_cmd->add_option("--f0", h_cfg.f0, "minimum sentence-occurrence count")
      ->capture_default_str();
  histogram_cmd->add_option("--bin-width", h_cfg.bin_width, "precision bin width; must divide 0.5")
      ->capture_default_str();
  histogram_cmd->add_option("--format", h_format, "csv, json or svg")->capture_default_str();
  histogram_cmd->add_option("--out", h_out, "output file")->required();

  // --- audit ------------------------------------------------------------
  auto* audit_cmd = app.add_subcommand(
      "audit", "lexical and structural audit of (source, transferred) sentence pairs");
  RunConfig a_cfg = base;
  bool a_no_lower = false;
  bool a_no_collapse = false;
  std::string a_pairs0, a_pairs1, a_pivots, a_mask_token = "<mask>", a_out, a_tsv;
  add_common(audit_cmd, a_cfg, a_no_lower);
  audit_cmd->add_option("--pairs0", a_pairs0, "TSV of pairs transferring class 0 -> 1")
      ->required();
  audit_cmd->add_option("--pairs1", a_pairs1, "TSV of pairs transferring class 1 -> 0")
      ->required();
  audit_cmd->add_option("--pivots", a_pivots, "pivot JSON from discover")->required();
  audit_cmd->add_option("--mask-mode", a_cfg.mask_mode, "all-modified or pivots-only")
      ->capture_default_str();
  audit_cmd->add_flag("--no-collapse", a_no_collapse, "keep runs of consecutive mask tokens");
  audit_cmd->add_option("--mask-token", a_mask_token, "mask sentinel")->capture_default_str();
  audit_cmd->add_option("--out", a_out, "output JSON")->required();
  audit_cmd->add_option("--per-pair", a_tsv, "optional per-pair TSV with alignment scripts");

  // --- train-logistic ---------------------------------------------------
  auto* train_cmd = app.add_subcommand(
      "train-logistic", "train the bag-of-words logistic baseline");
  RunConfig t_cfg = base;
  bool t_no_lower = false;
  LogisticOptions t_opts;
  std::string t_class0, t_class1, t_out;
  add_common(train_cmd, t_cfg, t_no_lower);
  train_cmd->add_option("--class0", t_class0, "class-0 sentences")->required();
  train_cmd->add_option("--class1", t_class1, "class-1 sentences")->required();
  train_cmd->add_option("--epochs", t_opts.epochs, "SGD epochs")->capture_default_str();
  train_cmd->add_option("--step", t_opts.step, "initial step size, decayed by 1/sqrt(epoch)")
      ->capture_default_str();
  train_cmd->add_option("--l2", t_opts.l2, "L2 regularization strength")->capture_default_str();
  train_cmd->add_flag("--binary-features", t_opts.binary_features,
                      "presence features instead of counts");
  train_cmd->add_option("--out", t_out, "output model JSON")->required();

  // --- correlate --------------------------------------------------------
  auto* correlate_cmd = app.add_subcommand(
      "correlate", "Pearson correlation with a permutation-test p-value");
  RunConfig r_cfg = base;
  bool r_no_lower = false;
  std::uint64_t r_permutations = 100000;
  std::string r_in, r_out;
  add_common(correlate_cmd, r_cfg, r_no_lower);
  correlate_cmd->add_option("--in", r_in, "CSV of label,x,y rows")->required();
  correlate_cmd
      ->add_option("--permutations", r_permutations,
                   "Monte-Carlo permutations (exhaustive when n! <= 1e6)")
      ->capture_default_str();
  correlate_cmd->add_option("--out", r_out, "output JSON")->required();

  // --- sweep ------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "grid-evaluate f0/p0 on a validation split and flag the best cell");
  RunConfig s_cfg = base;
  bool s_no_lower = false;
  std::string s_class0, s_class1, s_val0, s_val1, s_out;
  std::string s_p0_grid = "0.5:0.9:0.1", s_f0_grid = "1,10,100";
  add_common(sweep_cmd, s_cfg, s_no_lower);
  sweep_cmd->add_option("--class0", s_class0, "training sentences, class 0")->required();
  sweep_cmd->add_option("--class1", s_class1, "training sentences, class 1")->required();
  sweep_cmd->add_option("--val0", s_val0, "validation sentences, class 0")->required();
  sweep_cmd->add_option("--val1", s_val1, "validation sentences, class 1")->required();
  sweep_cmd->add_option("--p0", s_p0_grid, "p0 grid: start:stop:step or comma list")
      ->capture_default_str();
  sweep_cmd->add_option("--f0", s_f0_grid, "f0 grid: start:stop:step or comma list")
      ->capture_default_str();
  sweep_cmd->add_option("--out", s_out, "output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (discover->parsed()) {
      check_p0(d_cfg.p0);
      if (d_no_lower) d_cfg.lowercase = false;
      d_cfg.paths = {{"class0", d_class0}, {"class1", d_class1}, {"out", d_out}};
      LoadReport load;
      const Corpus raw = load_corpus(d_class0, d_class1, {d_cfg.lowercase}, &load);
      const Corpus corpus = balance(raw, d_cfg.seed);
      const PrecisionMatrix matrix = precision_matrix(corpus);
      const auto [set0, set1] = discover_pivots(matrix, d_cfg.f0, d_cfg.p0);
      json report{{"config", config_json(d_cfg)},
                  {"load_report", load_report_json(load)},
                  {"balanced_class_size", corpus.class_sizes[0]},
                  {"classes", json::array({pivots_json(set0, matrix),
                                           pivots_json(set1, matrix)})}};
      write_json_report(d_out, report);
    } else if (classify_cmd->parsed()) {
      if (c_pivots.empty() && c_model.empty()) {
        throw UsageError("classify needs --pivots or --model");
      }
      if (c_no_lower) c_cfg.lowercase = false;
      c_cfg.paths = {{"class0", c_class0}, {"class1", c_class1}, {"out", c_out}};
      if (!c_pivots.empty()) c_cfg.paths["pivots"] = c_pivots;
      if (!c_model.empty()) c_cfg.paths["model"] = c_model;

      const json source = json::parse(read_file(c_pivots.empty() ? c_model : c_pivots));
      const auto [train0, train1] = recorded_corpus_paths(source);
      if (!train0.empty()) check_distinct("classify", train0, train1, c_class0, c_class1);

      LoadReport load;
      const Corpus corpus =
          balance(load_corpus(c_class0, c_class1, {c_cfg.lowercase}, &load), c_cfg.seed);

      json report{{"config", config_json(c_cfg)}, {"load_report", load_report_json(load)}};
      if (!c_pivots.empty()) {
        const json& classes = source.at("classes");
        PivotSet set0 = pivots_from_json(classes.at(0));
        PivotSet set1 = pivots_from_json(classes.at(1));
        if (set0.class_label != 0) std::swap(set0, set1);
        std::vector<VoteResult> votes;
        const EvalReport eval = evaluate(corpus, set0, set1, c_cfg.seed,
                                         c_tsv.empty() ? nullptr : &votes);
        report["classifier"] = "pivot-voting";
        report["eval"] = eval_report_json(eval);
        if (!c_tsv.empty()) {
          std::string tsv = "sentence\ts0\ts1\tpredicted\tgold\n";
          for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
            tsv += join_tokens(corpus.sentences[i].tokens) + '\t' +
                   std::to_string(votes[i].s0) + '\t' + std::to_string(votes[i].s1) + '\t' +
                   std::to_string(votes[i].predicted) + '\t' +
                   std::to_string(corpus.sentences[i].label) + '\n';
          }
          write_file(c_tsv, tsv);
        }
      } else {
        const LogisticModel model = model_from_json(source.at("model"));
        const EvalReport eval = evaluate_logistic(model, corpus);
        report["classifier"] = "logistic";
        report["eval"] = eval_report_json(eval);
        if (!c_tsv.empty()) {
          std::string tsv = "sentence\tp1\tpredicted\tgold\n";
          char buf[32];
          for (const Sentence& s : corpus.sentences) {
            const auto [label, p] = predict(model, s);
            std::snprintf(buf, sizeof(buf), "%.6f", p);
            tsv += join_tokens(s.tokens) + '\t' + buf + '\t' + std::to_string(label) + '\t' +
                   std::to_string(s.label) + '\n';
          }
          write_file(c_tsv, tsv);
        }
      }
      write_json_report(c_out, report);
    } else if (histogram_cmd->parsed()) {
      if (h_no_lower) h_cfg.lowercase = false;
      h_cfg.paths = {{"class0", h_class0}, {"class1", h_class1}, {"out", h_out}};
      const HistogramFormat format = [&] {
        try {
          return parse_histogram_format(h_format);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      LoadReport load;
      const Corpus corpus =
          balance(load_corpus(h_class0, h_class1, {h_cfg.lowercase}, &load), h_cfg.seed);
      const PrecisionMatrix matrix = precision_matrix(corpus);
      Histogram h = build_histogram(corpus, matrix, h_cfg.f0, h_cfg.bin_width);
      h.corpus_id = h_class0 + "|" + h_class1;
      if (format == HistogramFormat::Json) {
        json report{{"config", config_json(h_cfg)},
                    {"load_report", load_report_json(load)},
                    {"histogram", json::parse(emit_histogram(h, format))}};
        write_json_report(h_out, report);
      } else {
        write_file(h_out, emit_histogram(h, format));
      }
    } else if (audit_cmd->parsed()) {
      if (a_no_lower) a_cfg.lowercase = false;
      const MaskMode selected = parse_mask_mode(a_cfg.mask_mode);
      a_cfg.paths = {{"pairs0", a_pairs0},
                     {"pairs1", a_pairs1},
                     {"pivots", a_pivots},
                     {"out", a_out}};

      const json pivots_doc = json::parse(read_file(a_pivots));
      const json& classes = pivots_doc.at("classes");
      PivotSet set0 = pivots_from_json(classes.at(0));
      PivotSet set1 = pivots_from_json(classes.at(1));
      if (set0.class_label != 0) std::swap(set0, set1);

      // Load both directions first so one mask token can be resolved over the
      // union and shared by every audit.
      std::array<std::vector<TransferPair>, 2> pairs_by_dir;
      std::array<LoadReport, 2> loads;
      for (int source_label : {0, 1}) {
        const std::string& path = source_label == 0 ? a_pairs0 : a_pairs1;
        pairs_by_dir[source_label] =
            load_pairs(path, source_label, {a_cfg.lowercase}, &loads[source_label]);
        if (pairs_by_dir[source_label].empty()) {
          throw std::runtime_error("no pairs in " + path);
        }
      }
      std::vector<TransferPair> all_pairs = pairs_by_dir[0];
      all_pairs.insert(all_pairs.end(), pairs_by_dir[1].begin(), pairs_by_dir[1].end());
      std::vector<std::string> warnings;
      AuditOptions options;
      options.collapse_masks = !a_no_collapse;
      options.mask_token = resolve_mask_token(all_pairs, a_mask_token, &warnings);
      for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

      // Per direction and mask mode, audit every pair with that direction's
      // pivot orientation; the overall block merges the two directions.
      json directions = json::array();
      std::array<std::vector<PairAudit>, 2> overall;  // [mode][pair]
      std::string tsv = "direction\tsource\toutput\tscript\tmasked_source\tmasked_output\t"
                        "masked_distance\tn_modified\tpivot_modified\n";
      for (int source_label : {0, 1}) {
        const std::vector<TransferPair>& pairs = pairs_by_dir[source_label];
        const PivotSet& src_set = source_label == 0 ? set0 : set1;
        const PivotSet& tgt_set = source_label == 0 ? set1 : set0;
        json direction{{"source_label", source_label},
                       {"target_label", 1 - source_label},
                       {"pairs_path", source_label == 0 ? a_pairs0 : a_pairs1},
                       {"load_report", load_report_json(loads[source_label])}};
        for (const MaskMode mode : {MaskMode::AllModified, MaskMode::PivotsOnly}) {
          AuditOptions mode_opts = options;
          mode_opts.mask_mode = mode;
          std::vector<PairAudit> audits;
          audits.reserve(pairs.size());
          for (const TransferPair& pair : pairs) {
            audits.push_back(audit_pair(pair, src_set, tgt_set, mode_opts));
          }
          const char* key = mode == MaskMode::AllModified ? "mask_all" : "mask_pivots_only";
          direction[key] = audit_report_json(aggregate_audits(audits, options.mask_token));
          auto& merged = overall[mode == MaskMode::AllModified ? 0 : 1];
          if (!a_tsv.empty() && mode == selected) {
            for (std::size_t i = 0; i < audits.size(); ++i) {
              const PairAudit& audit = audits[i];
              tsv += std::to_string(source_label) + "->" + std::to_string(1 - source_label) +
                     '\t' + join_tokens(pairs[i].source.tokens) + '\t' +
                     join_tokens(pairs[i].output) + '\t' + audit.alignment.script() + '\t' +
                     join_tokens(audit.masked_source) + '\t' +
                     join_tokens(audit.masked_output) + '\t' +
                     std::to_string(audit.masked_distance) + '\t' +
                     std::to_string(audit.n_modified) + '\t' +
                     std::to_string(audit.pivot_modified) + '\n';
            }
          }
          merged.insert(merged.end(), std::make_move_iterator(audits.begin()),
                        std::make_move_iterator(audits.end()));
        }
        directions.push_back(std::move(direction));
      }
      json report{{"config", config_json(a_cfg)},
                  {"directions", directions},
                  {"overall",
                   {{"mask_all", audit_report_json(
                         aggregate_audits(overall[0], options.mask_token))},
                    {"mask_pivots_only", audit_report_json(
                         aggregate_audits(overall[1], options.mask_token))}}}};
      write_json_report(a_out, report);
      if (!a_tsv.empty()) write_file(a_tsv, tsv);
    } else if (train_cmd->parsed()) {
      if (t_no_lower) t_cfg.lowercase = false;
      t_cfg.paths = {{"class0", t_class0}, {"class1", t_class1}, {"out", t_out}};
      LoadReport load;
      const Corpus corpus =
          balance(load_corpus(t_class0, t_class1, {t_cfg.lowercase}, &load), t_cfg.seed);
      const LogisticModel model = train_logistic(corpus, t_opts, t_cfg.seed);
      json train_log = json::array();
      for (const auto& [epoch, loss] : model.train_log) {
        train_log.push_back({{"epoch", epoch}, {"loss", loss}});
      }
      json report{{"config", config_json(t_cfg)},
                  {"load_report", load_report_json(load)},
                  {"options",
                   {{"epochs", t_opts.epochs},
                    {"step", t_opts.step},
                    {"l2", t_opts.l2},
                    {"binary_features", t_opts.binary_features}}},
                  {"train_log", train_log},
                  {"train_eval", eval_report_json(evaluate_logistic(model, corpus))},
                  {"model", model_json(model)}};
      write_json_report(t_out, report);
    } else if (correlate_cmd->parsed()) {
      r_cfg.paths = {{"in", r_in}, {"out", r_out}};
      const PairedSeries series = read_paired_csv(r_in);
      const CorrelationResult result = pearson(series, r_cfg.seed, r_permutations);
      json report{{"config", config_json(r_cfg)}, {"result", correlation_json(result)}};
      write_json_report(r_out, report);
    } else if (sweep_cmd->parsed()) {
      if (s_no_lower) s_cfg.lowercase = false;
      check_distinct("sweep", s_class0, s_class1, s_val0, s_val1);
      s_cfg.paths = {{"class0", s_class0},
                     {"class1", s_class1},
                     {"val0", s_val0},
                     {"val1", s_val1},
                     {"out", s_out}};
      const std::vector<double> p0_grid = parse_double_grid(s_p0_grid);
      for (const double p0 : p0_grid) check_p0(p0);
      const std::vector<std::uint32_t> f0_grid = parse_count_grid(s_f0_grid);

      const Corpus train =
          balance(load_corpus(s_class0, s_class1, {s_cfg.lowercase}, nullptr), s_cfg.seed);
      const Corpus val =
          balance(load_corpus(s_val0, s_val1, {s_cfg.lowercase}, nullptr), s_cfg.seed);
      const PrecisionMatrix matrix = precision_matrix(train);

      struct Cell {
        std::uint32_t f0;
        double p0;
        EvalReport eval;
      };
      std::vector<Cell> cells;
      std::size_t best = 0;
      for (const std::uint32_t f0 : f0_grid) {
        for (const double p0 : p0_grid) {
          const auto [set0, set1] = discover_pivots(matrix, f0, p0);
          cells.push_back({f0, p0, evaluate(val, set0, set1, s_cfg.seed)});
          if (cells.back().eval.accuracy > cells[best].eval.accuracy) {
            best = cells.size() - 1;
          }
        }
      }
      json grid = json::array();
      for (std::size_t i = 0; i < cells.size(); ++i) {
        json cell = eval_report_json(cells[i].eval);
        cell["f0"] = cells[i].f0;
        cell["p0"] = cells[i].p0;
        cell["best"] = i == best;
        grid.push_back(cell);
      }
      json report{{"config", config_json(s_cfg)},
                  {"grid", grid},
                  {"best",
                   {{"f0", cells[best].f0},
                    {"p0", cells[best].p0},
                    {"accuracy", cells[best].eval.accuracy}}}};
      write_json_report(s_out, report);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
