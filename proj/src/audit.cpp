#include "pivot/audit.h"

#include <algorithm>
#include <iostream>
#include <stdexcept>
#include <unordered_set>

namespace pivot {

namespace {

bool contains_token(const std::vector<Token>& tokens, const Token& t) {
  return std::find(tokens.begin(), tokens.end(), t) != tokens.end();
}

void collapse_runs(std::vector<Token>& tokens, const Token& mask) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (Token& t : tokens) {
    if (t == mask && !out.empty() && out.back() == mask) continue;
    out.push_back(std::move(t));
  }
  tokens = std::move(out);
}

}  // namespace

PairAudit audit_pair(const TransferPair& pair, const PivotSet& pivots_src,
                     const PivotSet& pivots_tgt, const AuditOptions& options) {
  if (contains_token(pair.source.tokens, options.mask_token) ||
      contains_token(pair.output, options.mask_token)) {
    throw std::invalid_argument("mask token '" + options.mask_token +
                                "' occurs in the sentence pair");
  }

  PairAudit audit;
  audit.src_len = pair.source.tokens.size();
  audit.alignment = align(pair.source.tokens, pair.output);

  const bool mask_all = options.mask_mode == MaskMode::AllModified;
  for (const EditOp& op : audit.alignment.ops) {
    switch (op.type) {
      case EditOpType::Keep:
        audit.masked_source.push_back(op.src);
        audit.masked_output.push_back(op.out);
        break;
      case EditOpType::Substitute: {
        audit.modified_src.insert(op.src);
        audit.modified_out.insert(op.out);
        audit.n_modified += 2;
        const bool src_pivot = pivots_src.contains(op.src);
        const bool out_pivot = pivots_tgt.contains(op.out);
        audit.pivot_modified += static_cast<std::uint32_t>(src_pivot) +
                                static_cast<std::uint32_t>(out_pivot);
        audit.masked_source.push_back(mask_all || src_pivot ? options.mask_token : op.src);
        audit.masked_output.push_back(mask_all || out_pivot ? options.mask_token : op.out);
        break;
      }
      case EditOpType::Delete: {
        audit.modified_src.insert(op.src);
        audit.n_modified += 1;
        const bool src_pivot = pivots_src.contains(op.src);
        audit.pivot_modified += static_cast<std::uint32_t>(src_pivot);
        audit.masked_source.push_back(mask_all || src_pivot ? options.mask_token : op.src);
        break;
      }
      case EditOpType::Insert: {
        audit.modified_out.insert(op.out);
        audit.n_modified += 1;
        const bool out_pivot = pivots_tgt.contains(op.out);
        audit.pivot_modified += static_cast<std::uint32_t>(out_pivot);
        audit.masked_output.push_back(mask_all || out_pivot ? options.mask_token : op.out);
        break;
      }
    }
  }

  if (options.collapse_masks) {
    collapse_runs(audit.masked_source, options.mask_token);
    collapse_runs(audit.masked_output, options.mask_token);
  }
  audit.masked_distance = align(audit.masked_source, audit.masked_output).distance();
  return audit;
}

Token resolve_mask_token(const std::vector<TransferPair>& pairs, Token candidate,
                         std::vector<std::string>* warnings) {
  std::unordered_set<Token> seen;
  for (const TransferPair& pair : pairs) {
    seen.insert(pair.source.tokens.begin(), pair.source.tokens.end());
    seen.insert(pair.output.begin(), pair.output.end());
  }
  const Token requested = candidate;
  while (seen.count(candidate) != 0) candidate += '#';
  if (candidate != requested && warnings) {
    warnings->push_back("mask token '" + requested + "' occurs in the data; using '" +
                        candidate + "' instead");
  }
  return candidate;
}

AuditReport aggregate_audits(const std::vector<PairAudit>& audits,
                             const Token& mask_token) {
  if (audits.empty()) {
    throw std::invalid_argument("cannot aggregate an empty audit list");
  }
  std::size_t sum_sites = 0;
  std::uint64_t sum_modified = 0;
  std::uint64_t sum_pivot = 0;
  std::size_t sum_distance = 0;
  std::size_t sum_src_len = 0;
  std::array<std::size_t, 8> buckets{};  // 0..6 and >6
  for (const PairAudit& audit : audits) {
    sum_sites += audit.alignment.distance();
    sum_modified += audit.n_modified;
    sum_pivot += audit.pivot_modified;
    sum_distance += audit.masked_distance;
    sum_src_len += audit.src_len;
    buckets[std::min<std::size_t>(audit.masked_distance, 7)] += 1;
  }

  const auto n = static_cast<double>(audits.size());
  AuditReport report;
  report.n_pairs = audits.size();
  report.mask_token = mask_token;
  report.mean_modified = static_cast<double>(sum_sites) / n;
  report.mean_src_len = static_cast<double>(sum_src_len) / n;
  report.pct_modified_of_length = report.mean_modified / report.mean_src_len;
  report.pct_pivot_among_modified =
      sum_modified == 0 ? 0.0
                        : static_cast<double>(sum_pivot) / static_cast<double>(sum_modified);
  report.mean_masked_distance = static_cast<double>(sum_distance) / n;
  report.pct_distance_of_length = report.mean_masked_distance / report.mean_src_len;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    const std::string key = b < 7 ? std::to_string(b) : ">6";
    report.distance_distribution[key] = static_cast<double>(buckets[b]) / n;
  }
  return report;
}

AuditReport audit_corpus(const std::vector<TransferPair>& pairs,
                         const PivotSet& pivots_src, const PivotSet& pivots_tgt,
                         const AuditOptions& options) {
  if (pairs.empty()) {
    throw std::invalid_argument("cannot audit an empty pair list");
  }
  std::vector<std::string> warnings;
  AuditOptions effective = options;
  effective.mask_token = resolve_mask_token(pairs, options.mask_token, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  std::vector<PairAudit> audits;
  audits.reserve(pairs.size());
  for (const TransferPair& pair : pairs) {
    audits.push_back(audit_pair(pair, pivots_src, pivots_tgt, effective));
  }
  return aggregate_audits(audits, effective.mask_token);
}

}  // namespace pivot
