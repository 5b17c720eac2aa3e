#include "confspace/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "confspace/errors.hpp"

namespace confspace {

std::string_view to_string(RotationMode m) { return m == RotationMode::unit ? "unit" : "full"; }

RotationMode parse_rotation_mode(std::string_view s) {
  if (s == "unit") return RotationMode::unit;
  if (s == "full") return RotationMode::full;
  throw std::invalid_argument("unknown rotation mode '" + std::string(s) + "'");
}

EdgePath rotation_loop(const Graph& g, const std::vector<EdgeId>& cycle, int n, RotationMode mode) {
  if (n < 1) throw std::invalid_argument("rotation_loop: n must be at least 1");
  if (cycle.empty()) throw ConstructionError("cycle is empty");
  for (EdgeId e : cycle)
    if (e >= g.edge_count()) throw ConstructionError("cycle names unknown edge " + std::to_string(e));

  const std::size_t L = cycle.size();
  const Edge& first = g.edge(cycle.front());
  const Edge& last = g.edge(cycle.back());
  VertexId c0 = 0;
  if (L == 1 && first.is_loop())
    c0 = first.u;
  else if (L > 1 && last.touches(first.tail()))
    c0 = first.tail();
  else if (L > 1 && last.touches(first.head()))
    c0 = first.head();
  else
    throw ConstructionError("edges do not form a closed cycle");

  std::vector<VertexId> c{c0};
  for (std::size_t i = 0; i < L; ++i) {
    if (!g.edge(cycle[i]).touches(c.back()))
      throw ConstructionError("cycle edge " + std::to_string(cycle[i]) + " does not continue the cycle");
    c.push_back(g.other_end(cycle[i], c.back()));
  }
  if (c.back() != c0) throw ConstructionError("edges do not form a closed cycle");
  c.pop_back();
  if (std::set<VertexId>(c.begin(), c.end()).size() != L ||
      std::set<EdgeId>(cycle.begin(), cycle.end()).size() != L)
    throw ConstructionError("cycle is not simple");
  if (L <= static_cast<std::size_t>(n))
    throw ConstructionError("cycle too short: " + std::to_string(L) + " vertices cannot rotate " + std::to_string(n) +
                            " tokens");

  EdgePath path;
  path.start.assign(c.begin(), c.begin() + n);
  std::vector<std::size_t> index(n);
  for (int t = 0; t < n; ++t) index[t] = t;
  const std::size_t units = mode == RotationMode::unit ? 1 : L;
  for (std::size_t u = 0; u < units; ++u)
    for (int t = n - 1; t >= 0; --t) {
      path.push(g, t, cycle[index[t] % L], c[index[t] % L]);
      ++index[t];
    }
  path.loop = mode == RotationMode::full;
  return path;
}

namespace {

struct Case2Setup {
  VertexId v0, v1;
  std::set<EdgeId> gamma_edges;
};

bool aux_valid(const Graph& g, const Case2Setup& s, const Case2Aux& a) {
  for (EdgeId e : {a.e1, a.e2, a.f1, a.f2})
    if (e >= g.edge_count() || s.gamma_edges.count(e) || g.edge(e).is_loop()) return false;
  if (a.e1 == a.e2 || a.f1 == a.f2) return false;
  if (!g.edge(a.e1).touches(s.v0) || !g.edge(a.e2).touches(s.v0)) return false;
  if (!g.edge(a.f1).touches(s.v1) || !g.edge(a.f2).touches(s.v1)) return false;
  const VertexId w1 = g.other_end(a.e1, s.v0), w2 = g.other_end(a.e2, s.v0);
  const VertexId z1 = g.other_end(a.f1, s.v1), z2 = g.other_end(a.f2, s.v1);
  for (VertexId x : {w1, w2, z1, z2})
    if (x == s.v0 || x == s.v1) return false;
  return w1 != w2 && z1 != z2 && w1 != z1 && w1 != z2 && w2 != z1 && w2 != z2;
}

std::optional<Case2Aux> smallest_aux(const Graph& g, const Case2Setup& s) {
  std::vector<EdgeId> at0(g.incident(s.v0).begin(), g.incident(s.v0).end());
  std::vector<EdgeId> at1(g.incident(s.v1).begin(), g.incident(s.v1).end());
  std::sort(at0.begin(), at0.end());
  std::sort(at1.begin(), at1.end());
  for (EdgeId e1 : at0)
    for (EdgeId e2 : at0)
      for (EdgeId f1 : at1)
        for (EdgeId f2 : at1)
          if (Case2Aux a{e1, e2, f1, f2}; aux_valid(g, s, a)) return a;
  return std::nullopt;
}

void check_path_in(const Graph& g, const EssentialPath& gamma) {
  if (gamma.edges.empty()) throw ConstructionError("gamma has no edges");
  VertexId at = gamma.start;
  for (EdgeId e : gamma.edges) {
    if (e >= g.edge_count() || !g.edge(e).touches(at)) throw ConstructionError("gamma is not a path of the graph");
    at = g.other_end(e, at);
  }
  if (at != gamma.end) throw ConstructionError("gamma does not end at its stated endpoint");
}

// Lowest-id vertices not in `taken`.
std::vector<VertexId> lowest_free(const Graph& g, const std::set<VertexId>& taken, std::size_t count) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count() && out.size() < count; ++v)
    if (!taken.count(v)) out.push_back(v);
  if (out.size() < count) throw ConstructionError("not enough free vertices for the fixed tokens");
  return out;
}

}  // namespace

Case2Witness case2_witness_loop(const Graph& g, const EssentialPath& gamma, int n, const std::optional<Case2Aux>& aux) {
  check_path_in(g, gamma);
  const std::size_t m = gamma.length();
  Case2Setup s{gamma.start, gamma.end, {gamma.edges.begin(), gamma.edges.end()}};
  if (s.v0 == s.v1) throw ConstructionError("gamma must join two distinct essential vertices");
  if (g.degree(s.v0) < 3 || g.degree(s.v1) < 3)
    throw ConstructionError("both endpoints of gamma must have degree at least 3");
  if (n < 2 || m > static_cast<std::size_t>(n) - 2)
    throw ConstructionError("gamma has length " + std::to_string(m) + " > n-2, so condition (A) holds for it");
  if (!(static_cast<std::size_t>(n) + 2 < g.vertex_count()))
    throw ConstructionError("vertex budget: need n < |G| - 2, have n = " + std::to_string(n) +
                            " and |G| = " + std::to_string(g.vertex_count()));

  Case2Witness w;
  if (aux) {
    if (!aux_valid(g, s, *aux)) throw ConstructionError("supplied auxiliary edges are invalid");
    w.aux = *aux;
  } else {
    const auto found = smallest_aux(g, s);
    if (!found) throw ConstructionError("no valid auxiliary edges e1, e2, f1, f2");
    w.aux = *found;
  }
  w.w1 = g.other_end(w.aux.e1, s.v0);
  w.w2 = g.other_end(w.aux.e2, s.v0);
  w.z1 = g.other_end(w.aux.f1, s.v1);
  w.z2 = g.other_end(w.aux.f2, s.v1);

  const auto p = gamma.vertices();
  std::set<VertexId> h(p.begin(), p.end());
  h.insert({w.w1, w.w2, w.z1, w.z2});

  EdgePath& path = w.path;
  path.start = {w.w1, w.z1};
  for (std::size_t k = 0; k < m; ++k) path.start.push_back(p[k]);
  for (VertexId v : lowest_free(g, h, n - m - 2)) path.start.push_back(v);

  auto shift_forward = [&] {
    for (std::size_t k = m; k-- > 0;) path.push(g, k + 2, gamma.edges[k], p[k]);
  };
  auto shift_back = [&] {
    for (std::size_t k = 0; k < m; ++k) path.push(g, k + 2, gamma.edges[k], p[k + 1]);
  };
  auto dance = [&](std::size_t token, VertexId center, EdgeId in, EdgeId out) {
    path.push(g, token, in, g.other_end(in, center));
    path.push(g, token, out, center);
  };

  shift_forward();
  dance(0, s.v0, w.aux.e1, w.aux.e2);
  shift_back();
  dance(1, s.v1, w.aux.f1, w.aux.f2);
  shift_forward();
  dance(0, s.v0, w.aux.e2, w.aux.e1);
  shift_back();
  dance(1, s.v1, w.aux.f2, w.aux.f1);
  path.loop = true;
  return w;
}

Case1Witness case1_dance_loop(const Graph& g, const EssentialPath& gamma, int n) {
  check_path_in(g, gamma);
  const std::size_t m = gamma.length();
  const bool start_leaf = g.degree(gamma.start) == 1;
  const bool end_leaf = g.degree(gamma.end) == 1;
  if (start_leaf && end_leaf) {
    if (g.vertex_count() < static_cast<std::size_t>(n))
      throw ConstructionError("both endpoints of gamma have degree 1, so |G| < n and D^n(G) is empty");
    throw ConstructionError("both endpoints of gamma have degree 1");
  }
  if (!start_leaf && !end_leaf) throw ConstructionError("gamma has no endpoint of degree 1");
  if (n < 2 || m > static_cast<std::size_t>(n) - 2)
    throw ConstructionError("gamma has length " + std::to_string(m) + " > n-2, so condition (A) holds for it");

  const VertexId v0 = start_leaf ? gamma.end : gamma.start;
  if (g.degree(v0) < 3) throw ConstructionError("the essential endpoint of gamma has degree below 3");
  const EdgeId h = start_leaf ? gamma.edges.back() : gamma.edges.front();

  Case1Witness w;
  w.fine_graph = sufficiently_subdivide(g, n);
  const Graph& f = w.fine_graph;
  std::optional<EssentialPath> fine;
  for (auto& p : essential_path_decomposition(f))
    if (std::find(p.edges.begin(), p.edges.end(), h) != p.edges.end()) fine = std::move(p);
  if (!fine) throw ConstructionError("gamma has no image in the subdivided graph");

  std::vector<VertexId> verts = fine->vertices();
  std::vector<EdgeId> edges = fine->edges;
  if (verts.front() != v0) {
    std::reverse(verts.begin(), verts.end());
    std::reverse(edges.begin(), edges.end());
  }
  const std::size_t len = edges.size();
  if (len < m + 1) throw ConstructionError("subdivided image of gamma is too short");

  std::vector<EdgeId> others;
  std::set<VertexId> other_ends;
  std::vector<EdgeId> at_v0(f.incident(v0).begin(), f.incident(v0).end());
  std::sort(at_v0.begin(), at_v0.end());
  for (EdgeId e : at_v0) {
    if (e == edges.front() || f.edge(e).is_loop()) continue;
    const VertexId x = f.other_end(e, v0);
    if (other_ends.insert(x).second) others.push_back(e);
    if (others.size() == 2) break;
  }
  if (others.size() < 2) throw ConstructionError("v0 needs two further edges with distinct endpoints");

  const EdgeId ea = others[0], ec = others[1], eb = edges.front();
  const VertexId a1 = f.other_end(ea, v0), c1 = f.other_end(ec, v0), b1 = verts[1];
  std::set<VertexId> taken{v0, a1, b1, c1};
  std::vector<VertexId> parked(verts.end() - static_cast<std::ptrdiff_t>(m), verts.end());
  for (VertexId v : parked)
    if (!taken.insert(v).second) throw ConstructionError("parked tokens collide with the dance");

  EdgePath& path = w.path;
  path.start = {a1, b1};
  path.start.insert(path.start.end(), parked.begin(), parked.end());
  for (VertexId v : lowest_free(f, taken, n - m - 2)) path.start.push_back(v);

  auto through = [&](std::size_t token, EdgeId in, EdgeId out) {
    path.push(f, token, in, f.other_end(in, v0));
    path.push(f, token, out, v0);
  };
  std::size_t on_a = 0, on_b = 1;
  for (int round = 0; round < 2; ++round) {
    through(on_a, ea, ec);
    through(on_b, eb, ea);
    through(on_a, ec, eb);
    std::swap(on_a, on_b);
  }
  path.loop = true;
  return w;
}

}  // namespace confspace
