#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pivot/corpus.h"

namespace pivot {

enum class EditOpType { Keep, Substitute, Delete, Insert };

struct EditOp {
  EditOpType type = EditOpType::Keep;
  Token src;  // empty for Insert
  Token out;  // empty for Delete

  bool operator==(const EditOp&) const = default;
};

struct Alignment {
  std::vector<EditOp> ops;

  // Number of non-keep ops; equals the word-level Levenshtein distance.
  std::size_t distance() const;

  // Compact rendering, one letter per op: K, S, D, I.
  std::string script() const;
};

// Minimal-cost word-level alignment with unit costs for substitute, delete and
// insert. When several minimal alignments exist the backtrace is fixed:
// walking left to right, prefer keep, then substitute, then delete, then
// insert. This makes modified-word sets deterministic.
Alignment align(const std::vector<Token>& source, const std::vector<Token>& output);

}  // namespace pivot
