#include "confspace/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace confspace {

void SparseIntMatrix::normalize() {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::vector<Triplet> merged;
  merged.reserve(entries.size());
  for (const Triplet& t : entries) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
      merged.back().value += t.value;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Triplet& t) { return t.value == 0; });
  entries = std::move(merged);
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> a_cols(a.cols);
  for (const Triplet& t : a.entries) a_cols[t.col].emplace_back(t.row, t.value);

  SparseIntMatrix out{a.rows, b.cols, {}};
  std::map<std::size_t, std::int64_t> column;
  std::size_t current = b.cols;
  auto flush = [&] {
    for (auto [r, v] : column) out.entries.push_back({r, current, v});
    column.clear();
  };
  SparseIntMatrix bn = b;
  bn.normalize();
  for (const Triplet& t : bn.entries) {
    if (t.col != current) {
      flush();
      current = t.col;
    }
    for (auto [r, v] : a_cols[t.row]) column[r] += v * t.value;
  }
  flush();
  out.normalize();
  return out;
}

}  // namespace confspace
