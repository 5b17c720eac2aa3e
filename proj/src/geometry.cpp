#include "confspace/geometry.hpp"

#include <stdexcept>
#include <string>

namespace confspace {

GraphPoint GraphPoint::at_edge(EdgeId e, const mpq_class& t) {
  if (t <= 0 || t >= 1) throw std::invalid_argument("edge parameter must lie strictly between 0 and 1");
  GraphPoint p;
  p.on_edge = true;
  p.edge = e;
  p.t = t;
  p.t.canonicalize();
  return p;
}

void check_configuration(const Graph& g, const Configuration& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const GraphPoint& p = x[i];
    if (p.on_edge) {
      if (p.edge >= g.edge_count())
        throw std::invalid_argument("token " + std::to_string(i) + ": unknown edge " + std::to_string(p.edge));
      if (p.t <= 0 || p.t >= 1)
        throw std::invalid_argument("token " + std::to_string(i) + ": edge parameter outside (0,1)");
    } else if (p.vertex >= g.vertex_count()) {
      throw std::invalid_argument("token " + std::to_string(i) + ": unknown vertex " + std::to_string(p.vertex));
    }
    for (std::size_t j = 0; j < i; ++j)
      if (x[j] == p)
        throw std::invalid_argument("tokens " + std::to_string(j) + " and " + std::to_string(i) +
                                    " occupy the same point");
  }
}

Configuration configuration_at(const std::vector<VertexId>& vertices) {
  Configuration x;
  for (VertexId v : vertices) x.push_back(GraphPoint::at_vertex(v));
  return x;
}

}  // namespace confspace
