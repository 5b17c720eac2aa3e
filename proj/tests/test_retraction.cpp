#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "confspace/complex.hpp"
#include "confspace/edge_path.hpp"
#include "confspace/errors.hpp"
#include "confspace/homology.hpp"
#include "confspace/retraction.hpp"
#include "support.hpp"
#include "walks.hpp"

using namespace confspace;
using namespace testing_support;

namespace {

GraphPoint V(VertexId v) { return GraphPoint::at_vertex(v); }
GraphPoint E(EdgeId e, long p, long q) { return GraphPoint::at_edge(e, mpq_class(p, q)); }

std::string key(const Combinatorics& k) {
  std::ostringstream s;
  for (const auto& v : k.vertex_tokens) s << (v ? std::to_string(*v) : "-") << ',';
  s << '|';
  for (const auto& list : k.arc_tokens) {
    for (auto t : list) s << t << ' ';
    s << ';';
  }
  return s.str();
}

// Star with center 0, one arm 0-1-2-3 and two short arms 0-4, 0-5.
Graph long_arm_star() { return make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}}); }

struct Model {
  const char* name;
  Graph graph;
  int n;
};

std::vector<Model> example_models() {
  return {{"P-graph", p_graph(), 3},
          {"Y-graph", y_graph(), 3},
          {"5-cycle", cycle(5), 3},
          {"K4", complete(4), 2},
          {"K3,3", k33(), 2},
          {"star", star3(), 2},
          {"subdivided H-tree", sufficiently_subdivide(h_tree(), 3), 3},
          {"long-arm star", sufficiently_subdivide(long_arm_star(), 3), 3}};
}

}  // namespace

TEST_CASE("decomposition of the example graphs") {
  const auto y = decompose(y_graph());
  CHECK(y.vertex_components().size() == 4);
  REQUIRE(y.arcs().size() == 3);
  for (const auto& a : y.arcs()) CHECK(a.q() == 1);

  const auto p = decompose(p_graph());
  CHECK(p.vertex_components() == std::vector<VertexId>{0, 5});
  REQUIRE(p.arcs().size() == 2);
  std::vector<std::size_t> qs{p.arcs()[0].q(), p.arcs()[1].q()};
  std::sort(qs.begin(), qs.end());
  CHECK(qs == std::vector<std::size_t>{1, 3});

  const auto c = decompose(cycle(5));
  CHECK(c.whole_graph());
  CHECK(c.vertex_components().empty());
  REQUIRE(c.arcs().size() == 1);
  CHECK(c.arcs()[0].q() == 5);

  CHECK_THROWS_AS(decompose(p_graph(), mpq_class(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(decompose(p_graph(), mpq_class(0)), std::invalid_argument);
  CHECK_THROWS_AS(decompose(make_graph(3, {{0, 1}})), DisconnectedGraph);
}

TEST_CASE("locate resolves points and rejects S_delta") {
  const auto d = decompose(p_graph());
  CHECK(d.locate(V(0)).kind == Location::Kind::vertex_component);
  CHECK(d.locate(E(4, 1, 8)).kind == Location::Kind::vertex_component);
  CHECK(d.locate(E(4, 3, 8)).kind == Location::Kind::arc);
  CHECK(d.locate(E(5, 7, 8)).kind == Location::Kind::vertex_component);
  CHECK(d.locate(E(5, 7, 8)).index == 1);
  CHECK_THROWS_AS(d.locate(E(4, 1, 4), 2), NoCombinatorics);
  CHECK_THROWS_AS(d.locate(E(5, 3, 4)), NoCombinatorics);
  CHECK_NOTHROW(d.locate(E(0, 3, 4)));
  CHECK(d.locate(E(1, 1, 4)).kind == Location::Kind::arc);
}

TEST_CASE("combinatorics") {
  const auto d = decompose(p_graph());
  const Configuration x{V(4), E(5, 1, 2)};
  const auto k = combinatorics(x, d);
  std::size_t tail_arc = d.arcs()[0].q() == 1 ? 0 : 1;
  CHECK(k.arc_tokens[tail_arc] == std::vector<std::size_t>{0, 1});

  try {
    combinatorics({V(1), E(4, 1, 4)}, d);
    FAIL("expected NoCombinatorics");
  } catch (const NoCombinatorics& e) {
    CHECK(e.token() == 1);
  }
  CHECK_THROWS_AS(combinatorics({V(0), E(0, 1, 8)}, d), NoCombinatorics);
  CHECK_THROWS_AS(combinatorics({V(0), V(0)}, d), std::invalid_argument);

  const auto c = decompose(path(5));
  const auto kc = combinatorics({V(3), V(1), V(2)}, c);
  REQUIRE(kc.arc_tokens.size() == 1);
  CHECK(kc.arc_tokens[0] == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("standard vertex examples") {
  SUBCASE("fixed point") {
    const auto d = decompose(y_graph());
    const auto s = standard_vertex(configuration_at({0, 1, 3}), d);
    CHECK(s.positions == std::vector<VertexId>{0, 1, 3});
    CHECK(s.rule == PhiRule::standard_position);
  }
  SUBCASE("case 2 on a q=1 arc") {
    const auto d = decompose(y_graph());
    const auto s = standard_vertex({E(0, 1, 2), V(1), E(1, 1, 2)}, d);
    CHECK(s.positions == std::vector<VertexId>{0, 1, 2});
    CHECK(s.rule == PhiRule::case2);
  }
  SUBCASE("case 1(b) on a q=2 arc") {
    const auto d = decompose(long_arm_star());
    const auto s = standard_vertex({E(0, 1, 2), E(1, 1, 2), E(2, 1, 2)}, d);
    CHECK(s.positions == std::vector<VertexId>{0, 1, 2});
    CHECK(s.rule == PhiRule::case1_b);
  }
  SUBCASE("case 1(a): extra token at the tail vertex") {
    const auto d = decompose(y_graph());
    const auto s = standard_vertex({E(0, 1, 2), E(1, 1, 2), E(2, 1, 8)}, d);
    CHECK(s.positions == std::vector<VertexId>{1, 2, 0});
    CHECK(s.rule == PhiRule::case1_a);
  }
  SUBCASE("case 1(c): extra token elsewhere") {
    const auto d = decompose(y_graph());
    const auto s = standard_vertex({E(0, 1, 2), E(1, 1, 2), V(4)}, d);
    CHECK(s.positions == std::vector<VertexId>{0, 1, 4});
    CHECK(s.rule == PhiRule::case1_c);
    const auto s2 = standard_vertex({E(0, 1, 2), E(1, 1, 2), E(3, 1, 2)}, d);
    CHECK(s2.positions == std::vector<VertexId>{0, 1, 3});
  }
  SUBCASE("two tokens on two single-edge arcs") {
    const auto d = decompose(star3());
    const auto s = standard_vertex({E(0, 1, 2), E(1, 1, 2)}, d);
    CHECK(s.positions == std::vector<VertexId>{1, 2});
    CHECK(s.rule == PhiRule::two_short_arcs);
    const auto k4 = decompose(complete(4));
    // edges (0,1) and (2,3) share no endpoint: tokens go to the tails
    const auto t = standard_vertex({E(0, 1, 2), E(5, 1, 2)}, k4);
    CHECK(t.positions == std::vector<VertexId>{0, 2});
  }
  SUBCASE("overcrowding beyond the definition") {
    const auto d = decompose(y_graph());
    CHECK_THROWS_AS(standard_vertex({E(0, 1, 2), V(1), E(1, 1, 2), E(1, 5, 8)}, d), NotSufficientlySubdivided);
    const auto h = decompose(h_tree());
    CHECK_THROWS_AS(standard_vertex({E(0, 3, 8), E(0, 5, 8), V(2)}, h), NotSufficientlySubdivided);
  }
  SUBCASE("whole-graph cycle") {
    const auto d = decompose(cycle(5));
    const auto s = standard_vertex({V(3), E(0, 1, 2), V(4)}, d);
    CHECK(s.positions == std::vector<VertexId>{1, 0, 2});
    CHECK_THROWS_AS(standard_vertex({V(0), V(1), E(0, 1, 2)}, decompose(cycle(2))), NotSufficientlySubdivided);
  }
}

TEST_CASE("standard vertex properties over random rational configurations") {
  std::mt19937 rng(20261015);
  int checked = 0;
  for (const auto& m : example_models()) {
    const auto d = decompose(m.graph);
    std::map<std::string, std::vector<VertexId>> by_class;
    int local = 0;
    for (int trial = 0; trial < 4000 && local < 400; ++trial) {
      const auto x = random_configuration(rng, m.graph, m.n);
      StandardVertex s;
      Combinatorics k;
      try {
        k = combinatorics(x, d);
        s = standard_vertex(x, d);
      } catch (const NoCombinatorics&) {
        continue;
      }
      ++local;
      INFO(m.name);
      const auto again = standard_vertex(configuration_at(s.positions), d);
      CHECK(again.positions == s.positions);

      const auto ks = combinatorics(configuration_at(s.positions), d);
      std::size_t placed = 0;
      for (std::size_t a = 0; a < d.arcs().size(); ++a) {
        CHECK(ks.theta(d, a) <= 0);
        placed += ks.arc_tokens[a].size();
      }
      for (const auto& v : ks.vertex_tokens) placed += v.has_value();
      CHECK(placed == static_cast<std::size_t>(m.n));

      auto [it, fresh] = by_class.emplace(key(k), s.positions);
      if (!fresh) CHECK(it->second == s.positions);
    }
    checked += local;
    CHECK(local >= 100);
  }
  CHECK(checked >= 1000);
}

TEST_CASE("standard moves validate along random walks") {
  std::mt19937 rng(7);
  std::set<PhiRule> rules_seen;
  for (const auto& m : example_models()) {
    INFO(m.name);
    const auto d = decompose(m.graph);
    const auto ordered = build_complex(m.graph, m.n, Labeling::ordered);
    const auto unordered = build_complex(m.graph, m.n, Labeling::unordered);
    int moves = 0, nonconstant = 0;
    for (int walk = 0; walk < 60; ++walk) {
      std::vector<Configuration> waypoints{random_grid_configuration(rng, d, m.n)};
      for (int step = 0; step < 80; ++step) {
        auto next = random_step(rng, waypoints.back(), d);
        if (!next) break;
        const auto& before = waypoints.back();
        const auto p = standard_move(before, *next, d);
        rules_seen.insert(standard_vertex(*next, d).rule);
        const auto s0 = standard_vertex(before, d).positions;
        const auto s1 = standard_vertex(*next, d).positions;
        CHECK(p.start == s0);
        CHECK(p.end(m.graph) == s1);
        CHECK(p.moves.empty() == (s0 == s1));
        const auto check = validate_path(p, ordered);
        CHECK_MESSAGE(check.valid, check.reason);
        CHECK(validate_path(p, unordered).valid);
        ++moves;
        nonconstant += !p.moves.empty();
        waypoints.push_back(*next);
      }
      const auto whole = standardize_path(waypoints, d);
      CHECK(validate_path(whole, ordered).valid);
      CHECK(whole.start == standard_vertex(waypoints.front(), d).positions);
      CHECK(whole.end(m.graph) == standard_vertex(waypoints.back(), d).positions);
    }
    CHECK(moves > 200);
    if (!d.whole_graph()) CHECK(nonconstant > 0);
  }
  CHECK(rules_seen.size() == 6);
}

TEST_CASE("trivial standard moves") {
  const auto d = decompose(y_graph());
  SUBCASE("a token enters the head of a minimally subdivided arc") {
    const Configuration before{E(0, 1, 2), V(1), V(2)};
    const Configuration after{E(0, 1, 2), V(1), E(1, 7, 8)};
    const auto p = standard_move(before, after, d);
    CHECK(p.moves.empty());
    CHECK(p.loop);
    CHECK(p.start == std::vector<VertexId>{0, 1, 2});
  }
  SUBCASE("a token enters the tail of a full arc") {
    const Configuration before{V(1), V(3), V(0)};
    const Configuration after{V(1), V(3), E(0, 1, 8)};
    const Configuration entered{V(1), V(3), E(0, 3, 8)};
    const auto p = standard_move(after, entered, d);
    CHECK(p.moves.empty());
    CHECK(standard_move(before, after, d).moves.empty());
    const Configuration full_before{E(0, 1, 2), E(1, 1, 2), E(0, 1, 8)};
    const Configuration full_after{E(0, 1, 2), E(1, 1, 2), E(0, 3, 8)};
    CHECK(standard_move(full_before, full_after, d).moves.empty());
  }
}

TEST_CASE("shift on the subdivided H-tree") {
  const Graph g = sufficiently_subdivide(h_tree(), 3);
  const auto d = decompose(g);
  const auto k = build_complex(g, 3, Labeling::ordered);
  // the bridge 0-1 is subdivided once; find its middle vertex
  std::optional<std::size_t> bridge;
  for (std::size_t a = 0; a < d.arcs().size(); ++a)
    if (d.arcs()[a].tail() == 0 && d.arcs()[a].head() == 1) bridge = a;
  REQUIRE(bridge);
  const auto& arc = d.arcs()[*bridge];
  REQUIRE(arc.length() == 2);
  const EdgeId first = arc.path.edges[0], second = arc.path.edges[1];
  auto along = [&](EdgeId e, VertexId from, long p, long q) {
    return g.edge(e).tail() == from ? E(e, p, q) : E(e, q - p, q);
  };
  const VertexId z1 = 4;
  // T0 and T1 on the bridge arc, T2 on a leaf arc at z; T1 leaves into X_z.
  const Configuration before{along(first, 0, 1, 2), along(second, arc.vertex_at(1), 1, 2), V(z1)};
  const Configuration after{along(first, 0, 1, 2), V(1), V(z1)};
  const auto p = standard_move(before, after, d);
  CHECK_FALSE(p.moves.empty());
  CHECK(p.start == standard_vertex(before, d).positions);
  CHECK(p.end(g) == standard_vertex(after, d).positions);
  CHECK(validate_path(p, k).valid);
  CHECK(p.moves.front().token == 1);
}

TEST_CASE("standardize path around the P-graph cycle") {
  const Graph g = p_graph();
  const auto d = decompose(g);
  const std::vector<Configuration> waypoints{
      {V(0), V(4), V(5)}, {E(0, 1, 2), V(4), V(5)}, {E(3, 1, 2), V(4), V(5)}, {V(0), V(4), V(5)}};
  const auto p = standardize_path(waypoints, d);
  CHECK(p.loop);
  CHECK(p.moves.size() == 4);
  for (auto labeling : {Labeling::unordered, Labeling::ordered}) {
    const auto k = build_complex(g, 3, labeling);
    REQUIRE(validate_path(p, k).valid);
    const auto cls = cycle_homology_class(k, to_chain(p, k));
    CHECK(cls.is_cycle);
    CHECK_FALSE(cls.is_boundary);
  }

  SUBCASE("single waypoint") {
    const auto q = standardize_path({waypoints[1]}, d);
    CHECK(q.moves.empty());
    CHECK(q.start == standard_vertex(waypoints[1], d).positions);
  }
  SUBCASE("two waypoints") {
    const auto q = standardize_path({waypoints[0], waypoints[1]}, d);
    const auto r = standard_move(waypoints[0], waypoints[1], d);
    CHECK(q.moves == r.moves);
    CHECK(q.start == r.start);
  }
  SUBCASE("bad pair is reported") {
    const std::vector<Configuration> bad{waypoints[0], waypoints[1], {V(2), V(3), V(5)}};
    try {
      standardize_path(bad, d);
      FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
      CHECK(std::string(e.what()).find("waypoints 1 and 2") != std::string::npos);
    }
  }
}

TEST_CASE("standard move preconditions") {
  const auto d = decompose(y_graph());
  CHECK_THROWS_AS(standard_move(configuration_at({1, 3, 5}), configuration_at({0, 4, 5}), d), ConstructionError);
  CHECK_THROWS_AS(standard_move(configuration_at({1, 3}), configuration_at({1, 3, 5}), d), ConstructionError);
  CHECK_THROWS_AS(standard_move({V(1), V(3), V(5)}, {V(1), V(3), E(4, 1, 4)}, d), NoCombinatorics);
}
