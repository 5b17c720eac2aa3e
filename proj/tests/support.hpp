#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "confspace/graph.hpp"
#include "oracles/brute_force.hpp"

namespace testing_support {

inline confspace::Graph make_graph(std::size_t vertices, const std::vector<std::pair<int, int>>& edges) {
  confspace::Graph g(vertices);
  for (auto [u, v] : edges) g.add_edge(static_cast<confspace::VertexId>(u), static_cast<confspace::VertexId>(v));
  return g;
}

inline confspace::Graph p_graph() { return make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}}); }
inline confspace::Graph y_graph() { return make_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }
inline confspace::Graph h_tree() { return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }
inline confspace::Graph k2() { return make_graph(2, {{0, 1}}); }
inline confspace::Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline confspace::Graph cycle(int length) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < length; ++i) edges.push_back({i, (i + 1) % length});
  return make_graph(length, edges);
}

inline confspace::Graph path(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
  return make_graph(vertices, edges);
}

inline confspace::Graph complete(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) edges.push_back({i, j});
  return make_graph(vertices, edges);
}

inline confspace::Graph k33() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) edges.push_back({i, j});
  return make_graph(6, edges);
}

inline oracle::SimpleGraph to_simple(const confspace::Graph& g) {
  oracle::SimpleGraph s;
  s.vertices = static_cast<int>(g.vertex_count());
  for (const auto& e : g.edges()) s.edges.push_back({static_cast<int>(e.u), static_cast<int>(e.v)});
  return s;
}

// Random connected multigraph: a random spanning tree plus extra edges,
// occasionally a parallel edge or a loop.
inline confspace::Graph random_connected(std::mt19937& rng, int max_vertices, int max_extra, bool allow_multi) {
  std::uniform_int_distribution<int> vd(1, max_vertices);
  const int v = vd(rng);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < v; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    edges.push_back({parent(rng), i});
  }
  std::uniform_int_distribution<int> extra(0, max_extra);
  std::uniform_int_distribution<int> pick(0, v - 1);
  const int k = extra(rng);
  for (int i = 0; i < k; ++i) {
    int a = pick(rng), b = pick(rng);
    if (!allow_multi) {
      if (a == b) continue;
      bool dup = false;
      for (auto [x, y] : edges)
        if ((x == a && y == b) || (x == b && y == a)) dup = true;
      if (dup) continue;
    }
    edges.push_back({a, b});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return make_graph(v, edges);
}

inline std::string data_file(const std::string& name) { return std::string(CONFSPACE_DATA_DIR) + "/" + name; }

}  // namespace testing_support
