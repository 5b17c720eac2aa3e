#pragma once

#include <json.hpp>

#include "confspace/complex.hpp"
#include "confspace/edge_path.hpp"
#include "confspace/geometry.hpp"
#include "confspace/graph.hpp"
#include "confspace/homology.hpp"
#include "confspace/retraction.hpp"

namespace confspace {

using Json = nlohmann::ordered_json;

Json to_json(const SufficiencyReport& r);
Json to_json(const EssentialPath& p);
Json to_json(const HomologySummary& h);
Json to_json(const EdgePath& p);
Json to_json(const GraphPoint& p);

// f-vector, maximal-cell vector, Euler characteristic and component count.
// With `full`, also every cell (as "v<id>"/"e<id>" codes) and every boundary
// matrix as [row, col, value] triplets.
Json complex_json(const CubeComplex& k, bool full = false);

// Combinatorics of x, theta per arc component, and Phi(x). Throws like
// standard_vertex.
Json phi_json(const Configuration& x, const Decomposition& d);

// Token list of {"vertex": v} or {"edge": e, "t": "p/q"}. Throws ParseError on
// malformed input; the result is checked against g.
Configuration configuration_from_json(const Json& j, const Graph& g);

EdgePath edge_path_from_json(const Json& j);

}  // namespace confspace
