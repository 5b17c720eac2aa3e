#include <doctest.h>

#include <chrono>
#include <random>

#include "confspace/complex.hpp"
#include "confspace/errors.hpp"
#include "oracles/brute_force.hpp"
#include "checks.hpp"
#include "support.hpp"

using namespace confspace;
using namespace testing_support;

namespace {

std::vector<long long> as_ll(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::vector<long long> oracle_f(const Graph& g, int n, Labeling l) {
  return oracle::enumerate(to_simple(g), n, l == Labeling::ordered).f_vector();
}

}  // namespace

TEST_CASE("K2 with two tokens") {
  const auto k = build_complex(k2(), 2, Labeling::ordered);
  CHECK(f_vector(k) == std::vector<std::size_t>{2});
  CHECK(component_count(k) == 2);
  CHECK(euler_characteristic(k) == 2);
}

TEST_CASE("P-graph and Y-graph f-vectors against the enumeration oracle") {
  for (auto l : {Labeling::unordered, Labeling::ordered}) {
    CHECK(as_ll(f_vector(build_complex(p_graph(), 3, l))) == oracle_f(p_graph(), 3, l));
    CHECK(as_ll(f_vector(build_complex(y_graph(), 3, l))) == oracle_f(y_graph(), 3, l));
  }
  CHECK(f_vector(build_complex(p_graph(), 3, Labeling::unordered)) == std::vector<std::size_t>{20, 36, 16, 2});
  CHECK(f_vector(build_complex(y_graph(), 3, Labeling::unordered)) == std::vector<std::size_t>{35, 60, 27, 4});
}

TEST_CASE("maximal-cell vectors") {
  const auto p = maximal_cell_vector(build_complex(p_graph(), 3, Labeling::unordered));
  CHECK(p.positive_dimensions() == std::vector<std::size_t>{4, 4, 2});
  CHECK(p.dimension_zero() == 0);
  const auto y = maximal_cell_vector(build_complex(y_graph(), 3, Labeling::unordered));
  CHECK(y.positive_dimensions() == std::vector<std::size_t>{6, 6, 4});

  const auto point = maximal_cell_vector(build_complex(make_graph(1, {}), 1, Labeling::unordered));
  CHECK(point.by_dimension == std::vector<std::size_t>{1});
  CHECK(point.positive_dimensions().empty());

  // Against the grow-a-coordinate oracle.
  for (const Graph& g : {p_graph(), y_graph(), complete(4), h_tree()}) {
    for (int n = 2; n <= 3; ++n) {
      const auto en = oracle::enumerate(to_simple(g), n, false);
      CHECK(as_ll(maximal_cell_vector(build_complex(g, n, Labeling::unordered)).by_dimension) ==
            oracle::maximal_cells(to_simple(g), en));
    }
  }
}

TEST_CASE("f-vector and Euler characteristic of K5") {
  const auto ko = build_complex(complete(5), 2, Labeling::ordered);
  const auto ku = build_complex(complete(5), 2, Labeling::unordered);
  CHECK(f_vector(ko) == std::vector<std::size_t>{20, 60, 30});
  CHECK(f_vector(ku) == std::vector<std::size_t>{10, 30, 15});
  CHECK(euler_characteristic(ko) == -10);
  CHECK(euler_characteristic(ku) == -5);
  CHECK(euler_characteristic(build_complex(p_graph(), 3, Labeling::unordered)) == -2);
  CHECK(euler_characteristic(build_complex(y_graph(), 3, Labeling::unordered)) == -2);
}

TEST_CASE("empty complexes") {
  const auto k = build_complex(k2(), 3, Labeling::unordered);
  CHECK(k.empty());
  CHECK(f_vector(k).empty());
  CHECK(maximal_cell_vector(k).by_dimension.empty());
  CHECK(euler_characteristic(k) == 0);
  CHECK(component_count(k) == 0);
  CHECK_THROWS_AS(build_complex(k2(), 0, Labeling::unordered), std::invalid_argument);
}

TEST_CASE("cell cap") {
  CHECK_THROWS_AS(build_complex(complete(5), 3, Labeling::ordered, 59), CapExceeded);
  CHECK_NOTHROW(build_complex(complete(5), 3, Labeling::ordered, 60));
}

TEST_CASE("boundary of a single 1-cell") {
  const auto k = build_complex(path(3), 2, Labeling::ordered);
  // 1-cell (edge 0 = {0,1}, vertex 2): tail face (0,2), head face (1,2).
  const CellCode cell[] = {k.edge_code(0), k.vertex_code(2)};
  const auto col = k.find(1, cell);
  REQUIRE(col);
  const CellCode tail[] = {0, 2};
  const CellCode head[] = {1, 2};
  const auto rt = *k.find(0, tail), rh = *k.find(0, head);
  int seen = 0;
  for (const auto& t : k.boundary(1).entries) {
    if (t.col != *col) continue;
    ++seen;
    if (t.row == rt) CHECK(t.value == -1);
    if (t.row == rh) CHECK(t.value == 1);
  }
  CHECK(seen == 2);
}

TEST_CASE("2-cell boundary has four entries") {
  const auto k = build_complex(path(4), 2, Labeling::ordered);
  const CellCode cell[] = {k.edge_code(0), k.edge_code(2)};
  const auto col = k.find(2, cell);
  REQUIRE(col);
  int count = 0, sum = 0;
  for (const auto& t : k.boundary(2).entries)
    if (t.col == *col) {
      ++count;
      sum += static_cast<int>(t.value);
    }
  CHECK(count == 4);
  CHECK(sum == 0);
  CHECK(multiply(k.boundary(1), k.boundary(2)).is_zero());
  CHECK_THROWS_AS(k.boundary(3), std::out_of_range);
  CHECK_THROWS_AS(k.boundary(0), std::out_of_range);
}

TEST_CASE("unordered lookup ignores coordinate order") {
  const auto k = build_complex(y_graph(), 3, Labeling::unordered);
  const CellCode a[] = {k.vertex_code(6), k.vertex_code(2), k.edge_code(2)};
  const CellCode b[] = {k.edge_code(2), k.vertex_code(2), k.vertex_code(6)};
  REQUIRE(k.find(1, a));
  CHECK(k.find(1, a) == k.find(1, b));
}

TEST_CASE("component counts") {
  CHECK(component_count(build_complex(p_graph(), 3, Labeling::unordered)) == 1);
  CHECK(component_count(build_complex(y_graph(), 3, Labeling::unordered)) == 1);
  CHECK(component_count(build_complex(path(4), 2, Labeling::ordered)) == 2);
  CHECK(component_count(build_complex(path(4), 2, Labeling::unordered)) == 1);
}

TEST_CASE("surface report") {
  const auto k5 = surface_report(build_complex(complete(5), 2, Labeling::ordered));
  CHECK(k5.is_closed_surface);
  CHECK(k5.orientable);
  CHECK(k5.components == 1);
  const auto k33r = surface_report(build_complex(k33(), 2, Labeling::ordered));
  CHECK(k33r.is_closed_surface);
  CHECK(k33r.orientable);
  const auto k5u = surface_report(build_complex(complete(5), 2, Labeling::unordered));
  CHECK(k5u.is_closed_surface);
  CHECK_FALSE(k5u.orientable);
  CHECK_FALSE(surface_report(build_complex(p_graph(), 2, Labeling::unordered)).is_closed_surface);
  CHECK_THROWS_AS(surface_report(build_complex(p_graph(), 3, Labeling::unordered)), std::invalid_argument);
}

TEST_CASE("chain-complex properties over random graphs") {
  std::mt19937 rng(7031);
  int graphs = 0;
  for (int trial = 0; trial < 220; ++trial) {
    const Graph g = random_connected(rng, 6, 5, trial % 4 == 0);
    ++graphs;
    for (int n = 2; n <= 3; ++n) {
      const auto ko = build_complex(g, n, Labeling::ordered);
      const auto ku = build_complex(g, n, Labeling::unordered);
      for (const auto* k : {&ko, &ku}) {
        for (int d = 2; d <= k->dimension(); ++d) CHECK(multiply(k->boundary(d - 1), k->boundary(d)).is_zero());
        CHECK(faces_registered(*k));
        const auto mcv = maximal_cell_vector(*k);
        const auto f = f_vector(*k);
        for (std::size_t d = 0; d < f.size(); ++d) CHECK(mcv.by_dimension[d] <= f[d]);
      }
      const auto fo = f_vector(ko), fu = f_vector(ku);
      REQUIRE(fo.size() == fu.size());
      const std::size_t fact = n == 2 ? 2 : 6;
      for (std::size_t d = 0; d < fo.size(); ++d) CHECK(fo[d] == fact * fu[d]);
      CHECK(euler_characteristic(ko) == static_cast<long long>(fact) * euler_characteristic(ku));
      CHECK((ku.cell_count(0) > 0) == (g.vertex_count() >= static_cast<std::size_t>(n)));
      CHECK(as_ll(fu) == oracle_f(g, n, Labeling::unordered));
    }
  }
  CHECK(graphs >= 200);
}

TEST_CASE("loops and parallel edges") {
  const Graph g = make_graph(3, {{0, 0}, {0, 1}, {0, 1}, {1, 2}});
  for (auto l : {Labeling::ordered, Labeling::unordered}) {
    const auto k = build_complex(g, 2, l);
    CHECK(as_ll(f_vector(k)) == oracle_f(g, 2, l));
    for (int d = 2; d <= k.dimension(); ++d) CHECK(multiply(k.boundary(d - 1), k.boundary(d)).is_zero());
  }
}

TEST_CASE("build is fast for the example graphs") {
  const auto t0 = std::chrono::steady_clock::now();
  build_complex(y_graph(), 3, Labeling::ordered);
  build_complex(p_graph(), 3, Labeling::ordered);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  CHECK(ms < 1000);
}
