#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace confspace {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t value = 0;
};

// Integer matrix in coordinate form. Entries are sorted by (col, row) and
// contain no zeros and no duplicate positions once normalized.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Triplet> entries;

  // Sum duplicates, drop zeros, sort by (col, row).
  void normalize();
  bool is_zero() const noexcept { return entries.empty(); }
};

// Product a*b with the same normalization; throws on a dimension mismatch.
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

}  // namespace confspace
