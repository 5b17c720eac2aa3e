#include "confspace/json_io.hpp"

#include <stdexcept>
#include <string>

#include "confspace/errors.hpp"

namespace confspace {

Json to_json(const EssentialPath& p) {
  return Json{{"start", p.start},
              {"end", p.end},
              {"length", p.length()},
              {"edges", p.edges},
              {"interior", p.interior},
              {"no_essential_vertices", p.no_essential_vertices}};
}

Json to_json(const SufficiencyReport& r) {
  Json j;
  j["criterion"] = std::string(to_string(r.criterion));
  j["n"] = r.n;
  j["passes"] = r.passes;
  j["shortest_essential_path"] = r.shortest_path ? to_json(*r.shortest_path) : Json(nullptr);
  j["girth"] = {{"length", r.girth.length ? Json(*r.girth.length) : Json("infinity")}, {"cycle", r.girth.cycle}};
  j["vertex_count"] = r.vertex_count;
  j["fewer_vertices_than_tokens"] = r.fewer_vertices_than_tokens;
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"condition", std::string(to_string(v.condition))},
                          {"length", v.length},
                          {"required", v.required},
                          {"from", v.from},
                          {"to", v.to},
                          {"witness", v.witness}});
  j["violations"] = violations;
  return j;
}

Json to_json(const HomologySummary& h) {
  Json torsion = Json::array();
  for (const auto& dim : h.torsion) {
    Json factors = Json::array();
    for (const auto& f : dim) factors.push_back(f.get_str());
    torsion.push_back(factors);
  }
  return Json{{"betti", h.betti},
              {"torsion", torsion},
              {"torsion_free", h.torsion_free()},
              {"boundary_ranks", h.ranks},
              {"euler_characteristic", h.euler_characteristic()}};
}

Json to_json(const EdgePath& p) {
  Json moves = Json::array();
  for (const auto& m : p.moves) moves.push_back({{"token", m.token}, {"edge", m.edge}, {"dir", m.dir}});
  return Json{{"start", p.start}, {"moves", moves}, {"loop", p.loop}};
}

Json to_json(const GraphPoint& p) {
  if (!p.on_edge) return Json{{"vertex", p.vertex}};
  return Json{{"edge", p.edge}, {"t", p.t.get_str()}};
}

Json complex_json(const CubeComplex& k, bool full) {
  const auto mcv = maximal_cell_vector(k);
  Json j;
  j["graph_hash"] = graph_hash(k.graph());
  j["n"] = k.tokens();
  j["labeling"] = std::string(to_string(k.labeling()));
  j["dimension"] = k.dimension();
  j["f_vector"] = f_vector(k);
  j["maximal_cell_vector"] = mcv.positive_dimensions();
  j["isolated_vertices"] = mcv.dimension_zero();
  j["euler_characteristic"] = euler_characteristic(k);
  j["components"] = component_count(k);
  if (!full) return j;

  Json cells = Json::array();
  for (int d = 0; d <= k.dimension(); ++d) {
    Json level = Json::array();
    for (std::size_t i = 0; i < k.cell_count(d); ++i) {
      Json cell = Json::array();
      for (CellCode c : k.cell(d, i)) {
        const GraphCell gc = k.decode(c);
        cell.push_back((gc.is_edge ? "e" : "v") + std::to_string(gc.id));
      }
      level.push_back(cell);
    }
    cells.push_back(level);
  }
  j["cells"] = cells;
  Json boundaries = Json::array();
  for (int d = 1; d <= k.dimension(); ++d) {
    const auto& m = k.boundary(d);
    Json entries = Json::array();
    for (const auto& t : m.entries) entries.push_back(Json::array({t.row, t.col, t.value}));
    boundaries.push_back({{"dimension", d}, {"rows", m.rows}, {"cols", m.cols}, {"entries", entries}});
  }
  j["boundaries"] = boundaries;
  return j;
}

Json phi_json(const Configuration& x, const Decomposition& d) {
  const auto k = combinatorics(x, d);
  const auto s = standard_vertex(x, d);
  Json vertex_components = Json::array();
  for (std::size_t i = 0; i < d.vertex_components().size(); ++i)
    vertex_components.push_back(
        {{"vertex", d.vertex_components()[i]}, {"token", k.vertex_tokens[i] ? Json(*k.vertex_tokens[i]) : Json(nullptr)}});
  Json arcs = Json::array();
  for (std::size_t a = 0; a < d.arcs().size(); ++a) {
    const auto& arc = d.arcs()[a];
    arcs.push_back({{"tail", arc.tail()},
                    {"head", arc.head()},
                    {"edges", arc.path.edges},
                    {"whole_graph", arc.whole_graph},
                    {"q", arc.q()},
                    {"tokens", k.arc_tokens[a]},
                    {"theta", k.theta(d, a)}});
  }
  Json config = Json::array();
  for (const auto& p : x) config.push_back(to_json(p));
  return Json{{"configuration", config},
              {"delta", d.delta().get_str()},
              {"combinatorics", {{"vertex_components", vertex_components}, {"arcs", arcs}}},
              {"rule", std::string(to_string(s.rule))},
              {"overcrowded_arc", s.overcrowded_arc ? Json(*s.overcrowded_arc) : Json(nullptr)},
              {"standard_vertex", s.positions}};
}

namespace {

std::size_t index_field(const Json& item, const char* name, std::size_t token) {
  const auto& v = item.at(name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(0, "token " + std::to_string(token) + ": '" + name + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

Configuration configuration_from_json(const Json& j, const Graph& g) {
  const Json& list = j.is_object() && j.contains("configuration") ? j.at("configuration") : j;
  if (!list.is_array()) throw ParseError(0, "configuration must be a list of tokens");
  Configuration x;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& item = list[i];
    if (!item.is_object()) throw ParseError(0, "token " + std::to_string(i) + " must be an object");
    try {
      if (item.contains("vertex")) {
        x.push_back(GraphPoint::at_vertex(index_field(item, "vertex", i)));
      } else if (item.contains("edge") && item.contains("t")) {
        if (!item.at("t").is_string()) throw ParseError(0, "token " + std::to_string(i) + ": t must be a string \"p/q\"");
        mpq_class t;
        if (t.set_str(item.at("t").get<std::string>(), 10) != 0)
          throw ParseError(0, "token " + std::to_string(i) + ": malformed rational");
        t.canonicalize();
        x.push_back(GraphPoint::at_edge(index_field(item, "edge", i), t));
      } else {
        throw ParseError(0, "token " + std::to_string(i) + " needs 'vertex' or 'edge' and 't'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, "token " + std::to_string(i) + ": " + e.what());
    } catch (const Json::exception& e) {
      throw ParseError(0, "token " + std::to_string(i) + ": " + e.what());
    }
  }
  try {
    check_configuration(g, x);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return x;
}

EdgePath edge_path_from_json(const Json& j) {
  try {
    EdgePath p;
    p.start = j.at("start").get<std::vector<VertexId>>();
    for (const auto& m : j.at("moves"))
      p.moves.push_back({m.at("token").get<std::size_t>(), m.at("edge").get<EdgeId>(), m.at("dir").get<int>()});
    p.loop = j.value("loop", false);
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("edge path: ") + e.what());
  }
}

}  // namespace confspace
