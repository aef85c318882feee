#include "pivot/align.h"

#include <algorithm>
#include <cstdint>

namespace pivot {

std::size_t Alignment::distance() const {
  std::size_t d = 0;
  for (const EditOp& op : ops) {
    if (op.type != EditOpType::Keep) ++d;
  }
  return d;
}

std::string Alignment::script() const {
  std::string s;
  s.reserve(ops.size());
  for (const EditOp& op : ops) {
    switch (op.type) {
      case EditOpType::Keep: s += 'K'; break;
      case EditOpType::Substitute: s += 'S'; break;
      case EditOpType::Delete: s += 'D'; break;
      case EditOpType::Insert: s += 'I'; break;
    }
  }
  return s;
}

Alignment align(const std::vector<Token>& source, const std::vector<Token>& output) {
  const std::size_t n = source.size();
  const std::size_t m = output.size();

  // d[i][j] = distance between the suffixes source[i..) and output[j..), so
  // the backtrace can walk forward and resolve ties left to right.
  std::vector<std::vector<std::uint32_t>> d(n + 1, std::vector<std::uint32_t>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) d[i][m] = static_cast<std::uint32_t>(n - i);
  for (std::size_t j = 0; j <= m; ++j) d[n][j] = static_cast<std::uint32_t>(m - j);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      if (source[i] == output[j]) {
        d[i][j] = d[i + 1][j + 1];
      } else {
        d[i][j] = 1 + std::min({d[i + 1][j + 1], d[i + 1][j], d[i][j + 1]});
      }
    }
  }

  Alignment result;
  result.ops.reserve(std::max(n, m));
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && source[i] == output[j] && d[i][j] == d[i + 1][j + 1]) {
      result.ops.push_back({EditOpType::Keep, source[i], output[j]});
      ++i, ++j;
    } else if (i < n && j < m && d[i][j] == d[i + 1][j + 1] + 1) {
      result.ops.push_back({EditOpType::Substitute, source[i], output[j]});
      ++i, ++j;
    } else if (i < n && d[i][j] == d[i + 1][j] + 1) {
      result.ops.push_back({EditOpType::Delete, source[i], {}});
      ++i;
    } else {
      result.ops.push_back({EditOpType::Insert, {}, output[j]});
      ++j;
    }
  }
  return result;
}

}  // namespace pivot
