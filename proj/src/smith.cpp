#include "confspace/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace confspace {

namespace {

// Turn a list of nonzero pivots into the divisibility chain with the same
// product structure (pairwise gcd/lcm).
std::vector<mpz_class> divisibility_chain(std::vector<mpz_class> d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      const mpz_class g = gcd(d[i], d[j]);
      const mpz_class l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace

InvariantFactors smith_dense(const SparseIntMatrix& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (const Triplet& t : m.entries) a[t.row][t.col] += t.value;

  std::vector<mpz_class> pivots;
  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    // Minimal |entry| over the active block; ties by lowest row, then column.
    std::size_t pr = rows, pc = cols;
    mpz_class best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(a[i][j]) == 0) continue;
        if (pr == rows || mpz_cmpabs(a[i][j].get_mpz_t(), best.get_mpz_t()) < 0) {
          pr = i;
          pc = j;
          best = abs(a[i][j]);
          if (best == 1) break;
        }
      }
      if (pr != rows && best == 1) break;
    }
    if (pr == rows) break;

    std::swap(a[t], a[pr]);
    if (pc != t)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

    const mpz_class p = a[t][t];
    bool remainder = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (sgn(a[i][t]) == 0) continue;
      const mpz_class q = a[i][t] / p;
      if (q != 0)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a[t][j]) != 0) a[i][j] -= q * a[t][j];
      if (sgn(a[i][t]) != 0) remainder = true;
    }
    if (remainder) continue;

    for (std::size_t j = t + 1; j < cols; ++j) {
      if (sgn(a[t][j]) == 0) continue;
      // Column t is zero below the pivot, so the column operation only
      // touches row t.
      a[t][j] -= (a[t][j] / p) * p;
      if (sgn(a[t][j]) != 0) remainder = true;
    }
    if (remainder) continue;

    pivots.push_back(p);
    ++t;
  }
  return {divisibility_chain(std::move(pivots)), rows, cols};
}

namespace {

class SparseEliminator {
 public:
  SparseEliminator(const SparseIntMatrix& m, std::vector<mpz_class>* rhs)
      : rows_(m.rows), cols_(m.cols), rhs_(rhs) {
    for (const Triplet& t : m.entries) {
      if (t.value == 0) continue;
      rows_[t.row][t.col] += t.value;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (auto it = rows_[r].begin(); it != rows_[r].end();) {
        if (sgn(it->second) == 0) {
          it = rows_[r].erase(it);
        } else {
          cols_[it->first].insert(r);
          ++it;
        }
      }
    }
  }

  void run() {
    while (true) {
      std::size_t r = 0, c = 0;
      if (!pick_pivot(r, c)) return;
      const mpz_class p = rows_[r].at(c);

      bool remainder = false;
      const std::vector<std::size_t> others(cols_[c].begin(), cols_[c].end());
      for (std::size_t i : others) {
        if (i == r) continue;
        const mpz_class q = rows_[i].at(c) / p;
        if (q != 0) add_row_multiple(i, r, -q);
        if (rows_[i].count(c)) remainder = true;
      }
      if (remainder) continue;

      for (auto it = rows_[r].begin(); it != rows_[r].end();) {
        if (it->first == c) {
          ++it;
          continue;
        }
        it->second -= (it->second / p) * p;
        if (sgn(it->second) == 0) {
          cols_[it->first].erase(r);
          it = rows_[r].erase(it);
        } else {
          remainder = true;
          ++it;
        }
      }
      if (remainder) continue;

      pivots_.push_back(p);
      pivot_rows_.emplace_back(r, p);
      cols_[c].erase(r);
      rows_[r].clear();
    }
  }

  const std::vector<mpz_class>& pivots() const { return pivots_; }

  bool rhs_consistent() const {
    std::vector<char> is_pivot(rows_.size(), 0);
    for (const auto& [r, p] : pivot_rows_) {
      is_pivot[r] = 1;
      if (!mpz_divisible_p((*rhs_)[r].get_mpz_t(), p.get_mpz_t())) return false;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!is_pivot[r] && sgn((*rhs_)[r]) != 0) return false;
    return true;
  }

 private:
  bool pick_pivot(std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    const mpz_class* best = nullptr;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        if (!found || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
          found = true;
          best = &v;
          pr = r;
          pc = c;
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) return true;
        }
      }
    }
    return found;
  }

  // row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const mpz_class& k) {
    auto& dst = rows_[target];
    for (const auto& [c, v] : rows_[source]) {
      auto [it, inserted] = dst.try_emplace(c);
      it->second += k * v;
      if (sgn(it->second) == 0) {
        dst.erase(it);
        cols_[c].erase(target);
      } else if (inserted) {
        cols_[c].insert(target);
      }
    }
    if (rhs_) (*rhs_)[target] += k * (*rhs_)[source];
  }

  std::vector<std::map<std::size_t, mpz_class>> rows_;
  std::vector<std::set<std::size_t>> cols_;
  std::vector<mpz_class>* rhs_;
  std::vector<mpz_class> pivots_;
  std::vector<std::pair<std::size_t, mpz_class>> pivot_rows_;
};

}  // namespace

InvariantFactors smith_sparse(const SparseIntMatrix& m) {
  SparseEliminator elim(m, nullptr);
  elim.run();
  return {divisibility_chain(elim.pivots()), m.rows, m.cols};
}

InvariantFactors smith_normal_form(const SparseIntMatrix& m) {
  if (m.rows < dense_threshold && m.cols < dense_threshold) return smith_dense(m);
  return smith_sparse(m);
}

bool integer_solvable(const SparseIntMatrix& a, const std::vector<mpz_class>& b) {
  if (b.size() != a.rows) throw std::invalid_argument("integer_solvable: right-hand side has the wrong length");
  std::vector<mpz_class> rhs = b;
  SparseEliminator elim(a, &rhs);
  elim.run();
  return elim.rhs_consistent();
}

}  // namespace confspace
