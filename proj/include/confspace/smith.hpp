#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "confspace/matrix.hpp"

namespace confspace {

struct InvariantFactors {
  std::vector<mpz_class> factors;  // d1 | d2 | ... | dr, all positive
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const noexcept { return factors.size(); }
};

// Below this size in both dimensions the dense algorithm is used.
inline constexpr std::size_t dense_threshold = 500;

InvariantFactors smith_normal_form(const SparseIntMatrix& m);
InvariantFactors smith_dense(const SparseIntMatrix& m);
InvariantFactors smith_sparse(const SparseIntMatrix& m);

// Whether A x = b has an integer solution. b.size() must equal A.rows.
bool integer_solvable(const SparseIntMatrix& a, const std::vector<mpz_class>& b);

}  // namespace confspace
