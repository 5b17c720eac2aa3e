#include "confspace/edge_path.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "confspace/errors.hpp"

namespace confspace {

std::vector<VertexId> EdgePath::end(const Graph& g) const {
  std::vector<VertexId> pos = start;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& m = moves[i];
    if (m.token >= pos.size() || m.edge >= g.edge_count())
      throw ConstructionError("move " + std::to_string(i) + " names an unknown token or edge");
    const Edge& e = g.edge(m.edge);
    const VertexId from = m.dir > 0 ? e.tail() : e.head();
    if (pos[m.token] != from)
      throw ConstructionError("move " + std::to_string(i) + ": token " + std::to_string(m.token) +
                              " is not at the start of edge " + std::to_string(m.edge));
    pos[m.token] = m.dir > 0 ? e.head() : e.tail();
  }
  return pos;
}

void EdgePath::push(const Graph& g, std::size_t token, EdgeId e, VertexId from) {
  const Edge& ed = g.edge(e);
  if (!ed.touches(from)) throw ConstructionError("edge " + std::to_string(e) + " does not touch the token");
  moves.push_back({token, e, ed.tail() == from ? 1 : -1});
}

namespace {

std::vector<CellCode> codes_of(const CubeComplex& k, const std::vector<VertexId>& pos) {
  std::vector<CellCode> c;
  for (VertexId v : pos) c.push_back(k.vertex_code(v));
  return c;
}

PathCheck fail(std::string reason, std::optional<std::size_t> step = std::nullopt) {
  return {false, std::move(reason), step};
}

}  // namespace

PathCheck validate_path(const EdgePath& p, const CubeComplex& k) {
  const Graph& g = k.graph();
  if (p.start.size() != static_cast<std::size_t>(k.tokens()))
    return fail("start has " + std::to_string(p.start.size()) + " tokens, complex has " + std::to_string(k.tokens()));
  for (VertexId v : p.start)
    if (v >= g.vertex_count()) return fail("start names an unknown vertex");
  if (!k.find(0, codes_of(k, p.start))) return fail("start is not a 0-cell");

  std::vector<VertexId> pos = p.start;
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    const Move& m = p.moves[i];
    if (m.token >= pos.size()) return fail("unknown token", i);
    if (m.edge >= g.edge_count()) return fail("unknown edge", i);
    if (m.dir != 1 && m.dir != -1) return fail("direction must be +1 or -1", i);
    const Edge& e = g.edge(m.edge);
    const VertexId from = m.dir > 0 ? e.tail() : e.head();
    if (pos[m.token] != from) return fail("token is not at the start of its edge", i);

    auto cell = codes_of(k, pos);
    cell[m.token] = k.edge_code(m.edge);
    if (!k.find(1, cell)) return fail("move is not a 1-cell", i);

    pos[m.token] = m.dir > 0 ? e.head() : e.tail();
    if (!k.find(0, codes_of(k, pos))) return fail("intermediate state is not a 0-cell", i);
  }

  if (p.loop) {
    bool closed = pos == p.start;
    if (!closed && k.labeling() == Labeling::unordered)
      closed = std::multiset<VertexId>(pos.begin(), pos.end()) ==
               std::multiset<VertexId>(p.start.begin(), p.start.end());
    if (!closed) return fail("path is flagged as a loop but does not return to its start");
  }
  return {true, {}, std::nullopt};
}

std::vector<mpz_class> to_chain(const EdgePath& p, const CubeComplex& k) {
  const auto check = validate_path(p, k);
  if (!check.valid) throw ConstructionError("invalid edge path: " + check.reason);
  std::vector<mpz_class> z(k.cell_count(1));
  std::vector<VertexId> pos = p.start;
  for (const Move& m : p.moves) {
    auto cell = codes_of(k, pos);
    cell[m.token] = k.edge_code(m.edge);
    z[*k.find(1, cell)] += m.dir;
    const Edge& e = k.graph().edge(m.edge);
    pos[m.token] = m.dir > 0 ? e.head() : e.tail();
  }
  return z;
}

}  // namespace confspace
