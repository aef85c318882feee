#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pivot/align.h"
#include "pivot/corpus.h"
#include "pivot/discovery.h"

namespace pivot {

enum class MaskMode {
  AllModified,  // mask every token occurrence touched by a non-keep op
  PivotsOnly,   // mask only modified occurrences that are pivot words
};

struct AuditOptions {
  MaskMode mask_mode = MaskMode::AllModified;
  bool collapse_masks = true;  // collapse runs of consecutive masks to one
  Token mask_token = "<mask>";
};

struct PairAudit {
  Alignment alignment;
  std::set<Token> modified_src;  // source tokens touched by substitute/delete
  std::set<Token> modified_out;  // output tokens touched by substitute/insert
  // Token occurrences touched on both sides: a substitution contributes two
  // (its source and output token), a deletion or insertion one.
  std::uint32_t n_modified = 0;
  // Of those occurrences, how many are pivots: source side checked against the
  // source-class set, output side against the target-class set.
  std::uint32_t pivot_modified = 0;
  std::size_t masked_distance = 0;
  std::size_t src_len = 0;
  std::vector<Token> masked_source;  // the sentence stems, after masking
  std::vector<Token> masked_output;
};

// Aligns the pair, records what was modified, masks the modified occurrences
// in both sentences (replacing each with the mask token and collapsing mask
// runs), and measures the word-level distance between the resulting stems.
// Masking is positional: an unmodified occurrence of a token that was edited
// elsewhere stays visible. Throws if the mask token already occurs in either
// sentence.
PairAudit audit_pair(const TransferPair& pair, const PivotSet& pivots_src,
                     const PivotSet& pivots_tgt, const AuditOptions& options = {});

struct AuditReport {
  double mean_modified = 0.0;  // edit sites per pair: substitutions + deletions + insertions
  double pct_modified_of_length = 0.0;    // mean_modified / mean_src_len
  double pct_pivot_among_modified = 0.0;  // sum pivot_modified / sum n_modified
  double mean_masked_distance = 0.0;
  double pct_distance_of_length = 0.0;  // mean_masked_distance / mean_src_len
  // Fractions per masked-distance bucket; keys "0".."6" and ">6", always all
  // present, summing to 1.
  std::map<std::string, double> distance_distribution;
  double mean_src_len = 0.0;
  std::size_t n_pairs = 0;
  Token mask_token;  // the mask actually used after collision resolution
};

// Picks a mask token no sentence in `pairs` contains, starting from
// `candidate` and appending '#' until free. A change is reported through
// `warnings` when provided.
Token resolve_mask_token(const std::vector<TransferPair>& pairs, Token candidate,
                         std::vector<std::string>* warnings = nullptr);

// Folds per-pair audits into an AuditReport. The list may mix transfer
// directions as long as every audit was produced with the same mask token.
AuditReport aggregate_audits(const std::vector<PairAudit>& audits,
                             const Token& mask_token);

// Aggregates per-pair audits over a non-empty pair list. Mask collisions are
// resolved automatically via resolve_mask_token (with a warning on stderr).
AuditReport audit_corpus(const std::vector<TransferPair>& pairs,
                         const PivotSet& pivots_src, const PivotSet& pivots_tgt,
                         const AuditOptions& options = {});

}  // namespace pivot
