#pragma once

#include <vector>

#include <gmpxx.h>

#include "confspace/graph.hpp"

namespace confspace {

// A point of the metric graph: a vertex, or an interior point of an edge at
// parameter 0 < t < 1 measured from the edge's tail (lower-id endpoint).
struct GraphPoint {
  bool on_edge = false;
  VertexId vertex = 0;
  EdgeId edge = 0;
  mpq_class t;

  static GraphPoint at_vertex(VertexId v) { return {false, v, 0, 0}; }
  static GraphPoint at_edge(EdgeId e, const mpq_class& t);

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
    if (a.on_edge != b.on_edge) return false;
    return a.on_edge ? (a.edge == b.edge && a.t == b.t) : a.vertex == b.vertex;
  }
};

// Token i sits at entry i.
using Configuration = std::vector<GraphPoint>;

// Throws std::invalid_argument on unknown ids, parameters outside (0,1), or
// coincident tokens.
void check_configuration(const Graph& g, const Configuration& x);

// Tokens placed on the given vertices.
Configuration configuration_at(const std::vector<VertexId>& vertices);

}  // namespace confspace
