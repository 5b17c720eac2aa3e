#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "confspace/edge_path.hpp"
#include "confspace/graph.hpp"

namespace confspace {

enum class RotationMode { unit, full };

std::string_view to_string(RotationMode m);
RotationMode parse_rotation_mode(std::string_view s);

/**
 * Tokens 0..n-1 start on the first n vertices c_0..c_{n-1} of the cycle,
 * where c_0 is the endpoint of the first edge shared with the last edge. One
 * unit rotation advances every token one vertex along the cycle, front token
 * first. `full` repeats the unit L times so every token returns to its start.
 * Throws ConstructionError if the edges do not form a simple closed cycle or
 * if the cycle has at most n vertices.
 */
EdgePath rotation_loop(const Graph& g, const std::vector<EdgeId>& cycle, int n, RotationMode mode = RotationMode::full);

struct Case2Aux {
  EdgeId e1 = 0, e2 = 0;  // at v0, not on the path
  EdgeId f1 = 0, f2 = 0;  // at v1, not on the path

  friend bool operator==(const Case2Aux&, const Case2Aux&) = default;
};

struct Case2Witness {
  EdgePath path;
  Case2Aux aux;
  VertexId w1 = 0, w2 = 0, z1 = 0, z2 = 0;
};

/**
 * The nine-step loop for an essential path gamma (from v0 = start to
 * v1 = end) of length m <= n-2 whose endpoints both have degree >= 3. Token 0
 * dances between w1 and w2 through v0, token 1 between z1 and z2 through v1,
 * tokens 2..m+1 shift along gamma in between, and the remaining tokens stay
 * on the lowest-id vertices outside H. Exactly 4m+8 moves. Auxiliary edges
 * are the lexicographically smallest valid choice unless supplied. Throws
 * ConstructionError naming the failed precondition.
 */
Case2Witness case2_witness_loop(const Graph& g, const EssentialPath& gamma, int n,
                                const std::optional<Case2Aux>& aux = std::nullopt);

struct Case1Witness {
  Graph fine_graph;  // sufficiently_subdivide(G, n)
  EdgePath path;     // a loop in D^n of fine_graph
};

/**
 * Double exchange of two tokens at the essential endpoint v0 of a path gamma
 * whose other endpoint has degree 1, with m tokens parked along gamma's
 * image. Emitted in the sufficiently subdivided model, 12 moves. Throws
 * ConstructionError if gamma has no degree-1 endpoint, if both endpoints
 * have degree 1 (D^n(G) is then empty), or if m > n-2.
 */
Case1Witness case1_dance_loop(const Graph& g, const EssentialPath& gamma, int n);

}  // namespace confspace
