#pragma once

// Dense Smith normal form over boost::multiprecision::cpp_int using 2x2
// extended-gcd (Bezout) row and column combinations. The pivot is the first
// nonzero entry in column-major order, unlike the library.

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

struct Bezout {
  Big g, s, t;  // g = s*a + t*b, g > 0
};

inline Bezout ext_gcd(Big a, Big b) {
  // A pivot that already divides b is kept with coefficients (+-1, 0).
  if (a != 0 && b % a == 0) return {abs(a), a < 0 ? Big(-1) : Big(1), 0};
  Big s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Big q = a / b;
    Big r = a - q * b;
    a = b;
    b = r;
    Big s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Big t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) return {-a, -s0, -t0};
  return {a, s0, t0};
}

// Invariant factors (positive, divisibility chain) of a dense matrix.
inline std::vector<Big> invariant_factors(std::vector<std::vector<Big>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Big> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool found = false;
    for (std::size_t j = t; j < cols && !found; ++j)
      for (std::size_t i = t; i < rows && !found; ++i)
        if (a[i][j] != 0) {
          std::swap(a[t], a[i]);
          for (auto& row : a) std::swap(row[t], row[j]);
          found = true;
        }
    if (!found) break;

    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Big x = a[t][t], y = a[i][t];
        const Bezout bz = ext_gcd(x, y);
        const Big xg = x / bz.g, yg = y / bz.g;
        for (std::size_t j = t; j < cols; ++j) {
          const Big p = a[t][j], q = a[i][j];
          a[t][j] = bz.s * p + bz.t * q;
          a[i][j] = -yg * p + xg * q;
        }
      }
      bool row_clean = true;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) row_clean = false;
      if (row_clean) break;

      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Big x = a[t][t], y = a[t][j];
        const Bezout bz = ext_gcd(x, y);
        const Big xg = x / bz.g, yg = y / bz.g;
        for (std::size_t i = t; i < rows; ++i) {
          const Big p = a[i][t], q = a[i][j];
          a[i][t] = bz.s * p + bz.t * q;
          a[i][j] = -yg * p + xg * q;
        }
      }
      bool col_clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) col_clean = false;
      if (col_clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  // Enforce d1 | d2 | ... by repeated gcd/lcm exchange until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] % diag[i] == 0) continue;
      const Big g = gcd(diag[i], diag[i + 1]);
      const Big l = diag[i] / g * diag[i + 1];
      diag[i] = g;
      diag[i + 1] = l;
      changed = true;
    }
  }
  return diag;
}

struct ReferenceHomology {
  std::vector<long long> betti;
  std::vector<std::vector<Big>> torsion;
};

// boundaries[k-1] is the boundary of dimension k, with f[k-1] rows.
inline ReferenceHomology reference_homology(const std::vector<long long>& f, const std::vector<std::vector<std::vector<Big>>>& boundaries) {
  std::vector<std::vector<Big>> factors(f.size() + 1);
  for (std::size_t k = 1; k < f.size(); ++k) factors[k] = invariant_factors(boundaries[k - 1]);
  ReferenceHomology h;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const long long rk = static_cast<long long>(factors[k].size());
    const long long rk1 = static_cast<long long>(factors[k + 1].size());
    h.betti.push_back(f[k] - rk - rk1);
    std::vector<Big> tors;
    for (const Big& d : factors[k + 1])
      if (d > 1) tors.push_back(d);
    h.torsion.push_back(tors);
  }
  return h;
}

}  // namespace oracle
