#include "confspace/retraction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "confspace/errors.hpp"

namespace confspace {

VertexId ArcComponent::vertex_at(std::size_t coord) const {
  if (coord == 0) return path.start;
  if (coord == path.length()) return path.end;
  if (coord > path.length()) throw std::out_of_range("arc coordinate out of range");
  return path.interior[coord - 1];
}

std::optional<std::size_t> Decomposition::vertex_component_of(VertexId v) const {
  if (v >= vertex_component_index_.size()) return std::nullopt;
  return vertex_component_index_[v];
}

Decomposition decompose(const Graph& g, const mpq_class& delta) {
  if (delta <= 0 || delta >= mpq_class(1, 2)) throw std::invalid_argument("delta must lie strictly between 0 and 1/2");
  Decomposition d;
  d.graph_ = g;
  d.delta_ = delta;
  const auto paths = essential_path_decomposition(g);

  d.vertex_component_index_.assign(g.vertex_count(), std::nullopt);
  d.interior_position_.assign(g.vertex_count(), {std::numeric_limits<std::size_t>::max(), 0});
  d.edge_position_.assign(g.edge_count(), {0, 0});

  for (const auto& p : paths) {
    ArcComponent arc;
    arc.path = p;
    arc.whole_graph = p.no_essential_vertices;
    d.arcs_.push_back(std::move(arc));
  }
  if (!d.whole_graph()) {
    d.vertex_components_ = essential_vertices(g);
    for (std::size_t i = 0; i < d.vertex_components_.size(); ++i) d.vertex_component_index_[d.vertex_components_[i]] = i;
  }
  for (std::size_t a = 0; a < d.arcs_.size(); ++a) {
    const auto& arc = d.arcs_[a];
    for (std::size_t i = 0; i < arc.path.edges.size(); ++i) d.edge_position_[arc.path.edges[i]] = {a, i};
    for (std::size_t j = 0; j < arc.path.interior.size(); ++j) d.interior_position_[arc.path.interior[j]] = {a, j + 1};
    if (arc.whole_graph) d.interior_position_[arc.path.start] = {a, 0};
  }
  return d;
}

Location Decomposition::locate(const GraphPoint& p, std::size_t token) const {
  if (!p.on_edge) {
    if (p.vertex >= graph_.vertex_count()) throw std::invalid_argument("unknown vertex");
    if (const auto vc = vertex_component_index_[p.vertex]) return {Location::Kind::vertex_component, *vc, 0};
    const auto [a, j] = interior_position_[p.vertex];
    return {Location::Kind::arc, a, mpq_class(static_cast<unsigned long>(j))};
  }
  if (p.edge >= graph_.edge_count()) throw std::invalid_argument("unknown edge");
  const auto [a, i] = edge_position_[p.edge];
  const ArcComponent& arc = arcs_[a];
  const Edge& e = graph_.edge(p.edge);
  const bool along = e.is_loop() || arc.vertex_at(i) == e.tail();
  mpq_class s = mpq_class(static_cast<unsigned long>(i)) + (along ? p.t : 1 - p.t);
  if (arc.whole_graph) return {Location::Kind::arc, a, s};

  const mpq_class to_head = mpq_class(static_cast<unsigned long>(arc.length())) - s;
  if (s == delta_ || to_head == delta_)
    throw NoCombinatorics(token, "token " + std::to_string(token) + " lies on S_delta");
  if (s < delta_) return {Location::Kind::vertex_component, *vertex_component_index_[arc.tail()], 0};
  if (to_head < delta_) return {Location::Kind::vertex_component, *vertex_component_index_[arc.head()], 0};
  return {Location::Kind::arc, a, s};
}

long Combinatorics::theta(const Decomposition& d, std::size_t arc) const {
  return static_cast<long>(arc_tokens.at(arc).size()) - static_cast<long>(d.arcs().at(arc).q());
}

namespace {

struct Resolved {
  Combinatorics k;
  std::vector<Location> where;  // by token
};

Resolved resolve(const Configuration& x, const Decomposition& d) {
  check_configuration(d.graph(), x);
  Resolved r;
  r.k.vertex_tokens.assign(d.vertex_components().size(), std::nullopt);
  r.k.arc_tokens.assign(d.arcs().size(), {});
  std::vector<std::vector<std::pair<mpq_class, std::size_t>>> on_arc(d.arcs().size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    Location loc = d.locate(x[t], t);
    if (loc.kind == Location::Kind::vertex_component) {
      auto& slot = r.k.vertex_tokens[loc.index];
      if (slot)
        throw NoCombinatorics(t, "tokens " + std::to_string(*slot) + " and " + std::to_string(t) +
                                     " share the vertex component of vertex " +
                                     std::to_string(d.vertex_components()[loc.index]));
      slot = t;
    } else {
      on_arc[loc.index].emplace_back(loc.s, t);
    }
    r.where.push_back(std::move(loc));
  }
  for (std::size_t a = 0; a < on_arc.size(); ++a) {
    std::sort(on_arc[a].begin(), on_arc[a].end());
    for (const auto& [s, t] : on_arc[a]) r.k.arc_tokens[a].push_back(t);
  }
  return r;
}

// Component id: vertex components first, then arcs.
std::size_t component_id(const Decomposition& d, const Location& loc) {
  return loc.kind == Location::Kind::vertex_component ? loc.index : d.vertex_components().size() + loc.index;
}

class Placement {
 public:
  Placement(const Decomposition& d, std::size_t n) : d_(d), sv_() {
    sv_.positions.assign(n, 0);
    sv_.anchors.assign(n, {});
    placed_.assign(n, 0);
  }

  void at_vertex_component(std::size_t token, std::size_t vc) {
    const VertexId v = d_.vertex_components()[vc];
    set(token, v, {false, 0, 0, v});
  }
  void at_arc(std::size_t token, std::size_t arc, std::size_t coord) {
    const VertexId v = d_.arcs()[arc].vertex_at(coord);
    set(token, v, {true, arc, coord, v});
  }

  void standard(const Combinatorics& k, std::size_t skip_arc = std::numeric_limits<std::size_t>::max()) {
    for (std::size_t vc = 0; vc < k.vertex_tokens.size(); ++vc)
      if (k.vertex_tokens[vc]) at_vertex_component(*k.vertex_tokens[vc], vc);
    for (std::size_t a = 0; a < k.arc_tokens.size(); ++a) {
      if (a == skip_arc) continue;
      const auto& kappa = k.arc_tokens[a];
      for (std::size_t i = 0; i < kappa.size(); ++i) at_arc(kappa[i], a, d_.arcs()[a].slot(i));
    }
  }

  StandardVertex finish(PhiRule rule, std::optional<std::size_t> arc) {
    for (std::size_t t = 0; t < placed_.size(); ++t)
      if (!placed_[t]) throw std::logic_error("standard vertex left a token unplaced");
    std::vector<VertexId> sorted = sv_.positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw NotSufficientlySubdivided("standard vertex would place two tokens on one vertex");
    sv_.rule = rule;
    sv_.overcrowded_arc = arc;
    return std::move(sv_);
  }

 private:
  void set(std::size_t token, VertexId v, Anchor a) {
    sv_.positions[token] = v;
    sv_.anchors[token] = a;
    placed_[token] = 1;
  }

  const Decomposition& d_;
  StandardVertex sv_;
  std::vector<char> placed_;
};

StandardVertex phi(const Resolved& r, const Decomposition& d, std::size_t n) {
  const Combinatorics& k = r.k;
  std::vector<std::size_t> over;
  for (std::size_t a = 0; a < d.arcs().size(); ++a) {
    const long th = k.theta(d, a);
    if (th >= 3)
      throw NotSufficientlySubdivided("arc component " + std::to_string(a) + " is overcrowded by " +
                                      std::to_string(th) + " tokens");
    if (th > 0) over.push_back(a);
  }

  Placement place(d, n);
  if (over.empty()) {
    place.standard(k);
    return place.finish(PhiRule::standard_position, std::nullopt);
  }

  for (std::size_t a : over) {
    const ArcComponent& arc = d.arcs()[a];
    if (arc.whole_graph)
      throw NotSufficientlySubdivided("the cycle holds more tokens than it has vertices");
    if (arc.tail() == arc.head())
      throw NotSufficientlySubdivided("overcrowded arc component " + std::to_string(a) +
                                      " has equal endpoints (condition (B) fails)");
  }

  if (over.size() == 2 && n == 2) {
    const ArcComponent& ea = d.arcs()[over[0]];
    const ArcComponent& fa = d.arcs()[over[1]];
    if (ea.q() != 0 || fa.q() != 0 || k.arc_tokens[over[0]].size() != 1 || k.arc_tokens[over[1]].size() != 1)
      throw NotSufficientlySubdivided("two overcrowded arc components outside the two-token rule");
    std::vector<VertexId> shared;
    for (VertexId x : {ea.tail(), ea.head()})
      if (x == fa.tail() || x == fa.head()) shared.push_back(x);
    if (shared.size() == 2)
      throw NotSufficientlySubdivided("two single-edge essential paths share both endpoints (condition (B) fails)");
    for (std::size_t a : over) {
      const ArcComponent& arc = d.arcs()[a];
      const std::size_t token = k.arc_tokens[a][0];
      if (shared.empty())
        place.at_arc(token, a, 0);
      else
        place.at_arc(token, a, arc.tail() == shared[0] ? arc.length() : 0);
    }
    return place.finish(PhiRule::two_short_arcs, std::nullopt);
  }
  if (over.size() > 1) throw NotSufficientlySubdivided("more than one overcrowded arc component");

  const std::size_t i = over[0];
  const ArcComponent& arc = d.arcs()[i];
  const auto& kappa = k.arc_tokens[i];
  const long th = k.theta(d, i);
  const std::size_t m = arc.length();
  const std::size_t q = arc.q();

  if (th == 2) {
    if (kappa.size() != n)
      throw NotSufficientlySubdivided("arc component " + std::to_string(i) + " has " + std::to_string(q) +
                                      " vertices, fewer than n-2 (condition (A) fails)");
    place.at_arc(kappa[0], i, 0);
    for (std::size_t j = 1; j + 1 < n; ++j) place.at_arc(kappa[j], i, j);
    place.at_arc(kappa[n - 1], i, m);
    return place.finish(PhiRule::case2, i);
  }

  // theta == 1
  if (kappa.size() == n) {
    place.at_arc(kappa[0], i, 0);
    for (std::size_t j = 1; j < n; ++j) place.at_arc(kappa[j], i, j);
    return place.finish(PhiRule::case1_b, i);
  }
  if (kappa.size() + 1 != n)
    throw NotSufficientlySubdivided("arc component " + std::to_string(i) + " has " + std::to_string(q) +
                                    " vertices, fewer than n-2 (condition (A) fails)");

  std::size_t outside = n;
  for (std::size_t t = 0; t < n; ++t)
    if (std::find(kappa.begin(), kappa.end(), t) == kappa.end()) outside = t;
  const Location& where = r.where[outside];
  const auto w_component = d.vertex_component_of(arc.tail());

  if (where.kind == Location::Kind::vertex_component && w_component && where.index == *w_component) {
    place.at_vertex_component(outside, where.index);
    for (std::size_t j = 0; j + 2 < n; ++j) place.at_arc(kappa[j], i, j + 1);
    place.at_arc(kappa[n - 2], i, m);
    return place.finish(PhiRule::case1_a, i);
  }

  place.at_arc(kappa[0], i, 0);
  for (std::size_t j = 1; j + 1 < n; ++j) place.at_arc(kappa[j], i, j);
  if (where.kind == Location::Kind::vertex_component)
    place.at_vertex_component(outside, where.index);
  else
    place.at_arc(outside, where.index, d.arcs()[where.index].slot(0));
  return place.finish(PhiRule::case1_c, i);
}

}  // namespace

std::string_view to_string(PhiRule r) {
  switch (r) {
    case PhiRule::standard_position: return "standard_position";
    case PhiRule::case1_a: return "case1_a";
    case PhiRule::case1_b: return "case1_b";
    case PhiRule::case1_c: return "case1_c";
    case PhiRule::case2: return "case2";
    case PhiRule::two_short_arcs: return "two_short_arcs";
  }
  return "?";
}

Combinatorics combinatorics(const Configuration& x, const Decomposition& d) { return resolve(x, d).k; }

StandardVertex standard_vertex(const Configuration& x, const Decomposition& d) {
  return phi(resolve(x, d), d, x.size());
}

namespace {

// A token crossing a point of S_delta, or passing the basepoint of a
// whole-graph cycle (which reorders the cycle's token list).
struct Crossing {
  enum class Kind { boundary, wrap_forward, wrap_backward };
  std::size_t token = 0;
  std::size_t arc = 0;
  bool at_tail = true;
  Kind kind = Kind::boundary;
};

std::optional<Crossing> find_wrap(const Resolved& a, const Resolved& b, const Decomposition& d) {
  if (!d.whole_graph()) return std::nullopt;
  const auto& ka = a.k.arc_tokens[0];
  const auto& kb = b.k.arc_tokens[0];
  if (ka.size() < 2 || ka.size() != kb.size()) return std::nullopt;
  const std::size_t last = ka.back(), first = ka.front();
  std::vector<std::size_t> rotated{last};
  rotated.insert(rotated.end(), ka.begin(), ka.end() - 1);
  if (kb == rotated && a.where[last].s > b.where[last].s)
    return Crossing{last, 0, true, Crossing::Kind::wrap_forward};
  rotated.assign(ka.begin() + 1, ka.end());
  rotated.push_back(first);
  if (kb == rotated && a.where[first].s < b.where[first].s)
    return Crossing{first, 0, true, Crossing::Kind::wrap_backward};
  return std::nullopt;
}

Combinatorics without(Combinatorics k, std::size_t token) {
  for (auto& v : k.vertex_tokens)
    if (v == token) v.reset();
  for (auto& list : k.arc_tokens) std::erase(list, token);
  return k;
}

std::optional<Crossing> find_crossing(const Resolved& a, const Resolved& b, const Decomposition& d) {
  std::vector<std::size_t> changed;
  for (std::size_t t = 0; t < a.where.size(); ++t)
    if (component_id(d, a.where[t]) != component_id(d, b.where[t])) changed.push_back(t);

  if (changed.empty()) {
    if (a.k == b.k) return std::nullopt;
    if (auto wrap = find_wrap(a, b, d)) return wrap;
    throw ConstructionError("configurations have different combinatorics without a crossing");
  }
  if (changed.size() > 1) throw ConstructionError("more than one token changes component");

  const std::size_t t = changed[0];
  const Location& la = a.where[t];
  const Location& lb = b.where[t];
  const bool a_on_arc = la.kind == Location::Kind::arc;
  if (a_on_arc == (lb.kind == Location::Kind::arc))
    throw ConstructionError("token " + std::to_string(t) + " moves between non-adjacent components");

  const Resolved& arc_side = a_on_arc ? a : b;
  const Location& on_arc = a_on_arc ? la : lb;
  const Location& on_vertex = a_on_arc ? lb : la;
  const ArcComponent& arc = d.arcs()[on_arc.index];
  const VertexId v = d.vertex_components()[on_vertex.index];
  const auto& kappa = arc_side.k.arc_tokens[on_arc.index];

  const bool via_tail = kappa.front() == t && arc.tail() == v;
  const bool via_head = kappa.back() == t && arc.head() == v;
  if (!via_tail && !via_head)
    throw ConstructionError("token " + std::to_string(t) + " does not cross a single point of S_delta");
  if (!(without(a.k, t) == without(b.k, t)))
    throw ConstructionError("tokens other than " + std::to_string(t) + " change their combinatorics");

  Crossing c{t, on_arc.index, via_tail};
  if (via_tail && via_head) c.at_tail = on_arc.s * 2 < mpq_class(static_cast<unsigned long>(arc.length()));
  return c;
}

// A monotone walk along one arc between two coordinates.
void walk(const ArcComponent& arc, std::size_t from, std::size_t to,
          std::vector<std::pair<EdgeId, VertexId>>& out) {
  while (from < to) {
    out.emplace_back(arc.path.edges[from], arc.vertex_at(from + 1));
    ++from;
  }
  while (from > to) {
    out.emplace_back(arc.path.edges[from - 1], arc.vertex_at(from - 1));
    --from;
  }
}

std::vector<std::size_t> endpoint_coords(const ArcComponent& arc, VertexId v) {
  std::vector<std::size_t> c;
  if (arc.tail() == v) c.push_back(0);
  if (arc.head() == v) c.push_back(arc.length());
  return c;
}

std::size_t nearest(const std::vector<std::size_t>& cands, std::size_t target) {
  std::size_t best = cands.front();
  for (std::size_t c : cands) {
    const auto dc = c > target ? c - target : target - c;
    const auto db = best > target ? best - target : target - best;
    if (dc < db) best = c;
  }
  return best;
}

// Route of one token as (edge, vertex reached) steps, plus the coordinate of
// its target on the arc it ends on (used to order the schedule).
struct Route {
  std::vector<std::pair<EdgeId, VertexId>> steps;
  std::size_t target_coord = 0;
};

Route route_for(std::size_t token, const Anchor& from, const Anchor& to, VertexId p0, VertexId p1,
                const Decomposition& d, const std::optional<Crossing>& crossing) {
  Route r;
  if (p0 == p1) return r;
  const auto& arcs = d.arcs();

  auto vertex_coord = [&](VertexId v, std::size_t arc, std::size_t other) {
    const auto cands = endpoint_coords(arcs[arc], v);
    if (cands.empty())
      throw ConstructionError("token " + std::to_string(token) + " has no route between its standard positions");
    if (crossing && crossing->token == token && crossing->arc == arc) {
      const std::size_t side = crossing->at_tail ? 0 : arcs[arc].length();
      if (std::find(cands.begin(), cands.end(), side) != cands.end()) return side;
    }
    return nearest(cands, other);
  };

  if (crossing && crossing->token == token && crossing->kind != Crossing::Kind::boundary) {
    const std::size_t full = arcs[from.arc].length();
    if (crossing->kind == Crossing::Kind::wrap_forward)
      walk(arcs[from.arc], from.coord, full, r.steps);
    else
      walk(arcs[from.arc], full, to.coord, r.steps);
    r.target_coord = to.coord;
  } else if (from.on_arc && to.on_arc && from.arc == to.arc) {
    walk(arcs[from.arc], from.coord, to.coord, r.steps);
    r.target_coord = to.coord;
  } else if (!from.on_arc && to.on_arc) {
    walk(arcs[to.arc], vertex_coord(from.vertex, to.arc, to.coord), to.coord, r.steps);
    r.target_coord = to.coord;
  } else if (from.on_arc && !to.on_arc) {
    const std::size_t c = vertex_coord(to.vertex, from.arc, from.coord);
    walk(arcs[from.arc], from.coord, c, r.steps);
    r.target_coord = c;
  } else if (from.on_arc && to.on_arc) {
    const ArcComponent& a = arcs[from.arc];
    const ArcComponent& b = arcs[to.arc];
    std::optional<std::tuple<std::size_t, VertexId, std::size_t, std::size_t>> best;
    for (VertexId x : {a.tail(), a.head()})
      for (std::size_t ca : endpoint_coords(a, x))
        for (std::size_t cb : endpoint_coords(b, x)) {
          const std::size_t cost = (ca > from.coord ? ca - from.coord : from.coord - ca) +
                                   (cb > to.coord ? cb - to.coord : to.coord - cb);
          const auto cand = std::make_tuple(cost, x, ca, cb);
          if (!best || cand < *best) best = cand;
        }
    if (!best)
      throw ConstructionError("token " + std::to_string(token) + " has no route between its standard positions");
    walk(a, from.coord, std::get<2>(*best), r.steps);
    walk(b, std::get<3>(*best), to.coord, r.steps);
    r.target_coord = to.coord;
  } else {
    throw ConstructionError("token " + std::to_string(token) + " has no route between its standard positions");
  }
  return r;
}

}  // namespace

EdgePath standard_move(const Configuration& before, const Configuration& after, const Decomposition& d) {
  if (before.size() != after.size()) throw ConstructionError("configurations have different token counts");
  const Resolved rb = resolve(before, d);
  const Resolved ra = resolve(after, d);
  const auto crossing = find_crossing(rb, ra, d);
  const std::size_t n = before.size();
  const StandardVertex s0 = phi(rb, d, n);
  const StandardVertex s1 = phi(ra, d, n);

  EdgePath path;
  path.start = s0.positions;
  if (s0.positions == s1.positions) {
    path.loop = true;
    return path;
  }

  std::vector<Route> routes;
  for (std::size_t t = 0; t < n; ++t)
    routes.push_back(route_for(t, s0.anchors[t], s1.anchors[t], s0.positions[t], s1.positions[t], d, crossing));

  const Graph& g = d.graph();
  std::vector<VertexId> pos = s0.positions;
  // Tokens whose whole remaining route is free move first, head-most target
  // first; when none is free, the head-most token that can advance moves as
  // far as it can.
  std::vector<std::size_t> progress(n, 0);
  auto free_steps = [&](std::size_t t) {
    std::size_t k = progress[t];
    while (k < routes[t].steps.size()) {
      const VertexId v = routes[t].steps[k].second;
      bool occupied = false;
      for (std::size_t o = 0; o < n; ++o) occupied = occupied || (o != t && pos[o] == v);
      if (occupied) break;
      ++k;
    }
    return k - progress[t];
  };
  auto remaining = [&](std::size_t t) { return routes[t].steps.size() - progress[t]; };

  for (;;) {
    std::optional<std::size_t> whole, partial;
    for (std::size_t t = 0; t < n; ++t) {
      if (remaining(t) == 0) continue;
      const std::size_t k = free_steps(t);
      if (k == 0) continue;
      auto& slot = k == remaining(t) ? whole : partial;
      if (!slot || routes[t].target_coord > routes[*slot].target_coord) slot = t;
    }
    const auto pick = whole ? whole : partial;
    if (!pick) break;
    const std::size_t k = free_steps(*pick);
    for (std::size_t i = 0; i < k; ++i) {
      const auto [e, v] = routes[*pick].steps[progress[*pick]++];
      path.push(g, *pick, e, pos[*pick]);
      pos[*pick] = v;
    }
  }
  for (std::size_t t = 0; t < n; ++t)
    if (remaining(t) != 0) throw ConstructionError("standard move schedule is blocked");
  if (pos != s1.positions) throw ConstructionError("standard move did not reach the target standard vertex");
  path.loop = false;
  return path;
}

EdgePath standardize_path(const std::vector<Configuration>& waypoints, const Decomposition& d) {
  if (waypoints.empty()) throw ConstructionError("standardize_path needs at least one waypoint");
  EdgePath out;
  out.start = standard_vertex(waypoints[0], d).positions;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    EdgePath piece;
    try {
      piece = standard_move(waypoints[i], waypoints[i + 1], d);
    } catch (const Error& e) {
      throw ConstructionError("waypoints " + std::to_string(i) + " and " + std::to_string(i + 1) + ": " + e.what());
    }
    out.moves.insert(out.moves.end(), piece.moves.begin(), piece.moves.end());
  }
  out.loop = out.end(d.graph()) == out.start;
  return out;
}

}  // namespace confspace
