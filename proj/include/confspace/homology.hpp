#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "confspace/complex.hpp"

namespace confspace {

struct HomologySummary {
  std::vector<long long> betti;                 // index k = dimension
  std::vector<std::vector<mpz_class>> torsion;  // coefficients > 1 per dimension
  std::vector<std::size_t> ranks;               // ranks[k] = rank of boundary(k), ranks[0] = 0

  bool torsion_free() const;
  long long euler_characteristic() const;  // alternating sum of betti
};

HomologySummary homology(const CubeComplex& k);

struct CycleClass {
  bool is_cycle = false;
  bool is_boundary = false;
};

// z is indexed by the 1-cells of k. Throws std::out_of_range if z has the
// wrong length.
CycleClass cycle_homology_class(const CubeComplex& k, const std::vector<mpz_class>& z);

}  // namespace confspace
