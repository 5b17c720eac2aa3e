#include "confspace/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "confspace/smith.hpp"

namespace confspace {

bool HomologySummary::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

long long HomologySummary::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) chi += (k % 2 ? -1 : 1) * betti[k];
  return chi;
}

HomologySummary homology(const CubeComplex& k) {
  HomologySummary h;
  const int dim = k.dimension();
  if (dim < 0) return h;

  std::vector<InvariantFactors> snf(dim + 2);
  h.ranks.assign(dim + 2, 0);
  for (int d = 1; d <= dim; ++d) {
    snf[d] = smith_normal_form(k.boundary(d));
    h.ranks[d] = snf[d].rank();
  }
  for (int d = 0; d <= dim; ++d) {
    const auto f = static_cast<long long>(k.cell_count(d));
    h.betti.push_back(f - static_cast<long long>(h.ranks[d]) - static_cast<long long>(h.ranks[d + 1]));
    std::vector<mpz_class> tors;
    for (const auto& x : snf[d + 1].factors)
      if (x > 1) tors.push_back(x);
    h.torsion.push_back(std::move(tors));
  }
  h.ranks.pop_back();
  return h;
}

CycleClass cycle_homology_class(const CubeComplex& k, const std::vector<mpz_class>& z) {
  const std::size_t f1 = k.cell_count(1);
  if (z.size() != f1)
    throw std::out_of_range("1-chain has " + std::to_string(z.size()) + " entries, complex has " +
                            std::to_string(f1) + " 1-cells");
  CycleClass out;
  if (std::all_of(z.begin(), z.end(), [](const mpz_class& x) { return sgn(x) == 0; })) {
    out.is_cycle = out.is_boundary = true;
    return out;
  }

  std::vector<mpz_class> dz(k.cell_count(0));
  for (const Triplet& t : k.boundary(1).entries) dz[t.row] += z[t.col] * t.value;
  out.is_cycle = std::all_of(dz.begin(), dz.end(), [](const mpz_class& x) { return sgn(x) == 0; });
  if (!out.is_cycle) return out;

  if (k.dimension() < 2) {
    out.is_boundary = false;
    return out;
  }
  out.is_boundary = integer_solvable(k.boundary(2), z);
  return out;
}

}  // namespace confspace
