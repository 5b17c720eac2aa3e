#include "confspace/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "confspace/errors.hpp"

namespace confspace {

Graph::Graph(std::size_t vertex_count) : labels_(vertex_count), incidence_(vertex_count) {}

VertexId Graph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  incidence_.emplace_back();
  return static_cast<VertexId>(labels_.size() - 1);
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("add_edge: endpoint is not a vertex");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({id, u, v});
  // Edge ids only grow, so appending keeps incidence lists sorted.
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  return id;
}

VertexId Graph::other_end(EdgeId e, VertexId from) const {
  const Edge& ed = edge(e);
  if (ed.u == from) return ed.v;
  if (ed.v == from) return ed.u;
  throw std::invalid_argument("other_end: vertex is not an endpoint");
}

bool Graph::is_connected() const {
  if (vertex_count() <= 1) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : incidence_[x]) {
      const VertexId y = other_end(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == vertex_count();
}

std::string Graph::to_text() const {
  std::ostringstream out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    out << "v " << v;
    if (!labels_[v].empty()) out << ' ' << labels_[v];
    out << '\n';
  }
  for (const Edge& e : edges_) out << "e " << e.id << ' ' << e.u << ' ' << e.v << '\n';
  return out.str();
}

bool Graph::operator==(const Graph& other) const {
  if (labels_ != other.labels_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  return true;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::uint32_t parse_id(std::string_view word, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* first = word.data();
  const auto* last = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value > std::numeric_limits<std::uint32_t>::max())
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(word) + "'");
  return static_cast<std::uint32_t>(value);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  struct PendingEdge {
    VertexId u, v;
    std::size_t line;
  };
  std::vector<std::string> labels;
  std::vector<PendingEdge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "v") {
      if (words.size() < 2) throw ParseError(line_no, "vertex line needs an id");
      const auto id = parse_id(words[1], line_no, "vertex id");
      if (id < labels.size()) throw ParseError(line_no, "duplicate vertex id " + std::to_string(id));
      if (id > labels.size())
        throw ParseError(line_no, "vertex id " + std::to_string(id) + " out of sequence (expected " +
                                      std::to_string(labels.size()) + ")");
      std::string label;
      for (std::size_t i = 2; i < words.size(); ++i) {
        if (!label.empty()) label += ' ';
        label += words[i];
      }
      labels.push_back(std::move(label));
    } else if (words[0] == "e") {
      if (words.size() != 4) throw ParseError(line_no, "edge line must be 'e <id> <u> <v>'");
      const auto id = parse_id(words[1], line_no, "edge id");
      if (id < edges.size()) throw ParseError(line_no, "duplicate edge id " + std::to_string(id));
      if (id > edges.size())
        throw ParseError(line_no, "edge id " + std::to_string(id) + " out of sequence (expected " +
                                      std::to_string(edges.size()) + ")");
      edges.push_back({parse_id(words[2], line_no, "endpoint"), parse_id(words[3], line_no, "endpoint"), line_no});
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(words[0]) + "'");
    }
  }

  Graph g;
  for (auto& label : labels) g.add_vertex(std::move(label));
  for (const auto& e : edges) {
    for (VertexId x : {e.u, e.v})
      if (x >= g.vertex_count()) throw ParseError(e.line, "unknown endpoint " + std::to_string(x));
    g.add_edge(e.u, e.v);
  }
  return g;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string graph_hash(const Graph& g) { return fnv1a_hex(g.to_text()); }

std::vector<VertexId> essential_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (is_essential(g, v)) out.push_back(v);
  return out;
}

std::vector<VertexId> EssentialPath::vertices() const {
  std::vector<VertexId> out;
  out.reserve(interior.size() + 2);
  out.push_back(start);
  out.insert(out.end(), interior.begin(), interior.end());
  out.push_back(end);
  return out;
}

namespace {

void reverse_path(EssentialPath& p) {
  std::swap(p.start, p.end);
  std::reverse(p.edges.begin(), p.edges.end());
  std::reverse(p.interior.begin(), p.interior.end());
}

// Orient so that the lowest-id edge runs from its tail to its head.
void orient_by_lowest_edge(const Graph& g, EssentialPath& p) {
  const auto it = std::min_element(p.edges.begin(), p.edges.end());
  const auto k = static_cast<std::size_t>(it - p.edges.begin());
  const Edge& e = g.edge(*it);
  if (e.is_loop()) return;
  const auto verts = p.vertices();
  if (verts[k] != e.tail()) reverse_path(p);
}

}  // namespace

std::vector<EssentialPath> essential_path_decomposition(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraph();
  std::vector<EssentialPath> paths;
  if (g.edge_count() == 0) return paths;

  std::vector<char> used(g.edge_count(), 0);
  const auto essentials = essential_vertices(g);

  if (essentials.empty()) {
    // Connected and 2-regular: a single cycle.
    EssentialPath p;
    p.no_essential_vertices = true;
    p.start = p.end = 0;
    VertexId cur = 0;
    EdgeId e = g.incident(0).front();
    while (true) {
      p.edges.push_back(e);
      used[e] = 1;
      const VertexId next = g.other_end(e, cur);
      if (next == p.start) break;
      p.interior.push_back(next);
      const auto inc = g.incident(next);
      e = (inc[0] == e) ? inc[1] : inc[0];
      cur = next;
    }
    paths.push_back(std::move(p));
    return paths;
  }

  for (VertexId v : essentials) {
    for (EdgeId first : g.incident(v)) {
      if (used[first]) continue;
      EssentialPath p;
      p.start = v;
      VertexId cur = v;
      EdgeId e = first;
      while (true) {
        p.edges.push_back(e);
        used[e] = 1;
        const VertexId next = g.other_end(e, cur);
        if (is_essential(g, next)) {
          p.end = next;
          break;
        }
        p.interior.push_back(next);
        const auto inc = g.incident(next);
        e = (inc[0] == e) ? inc[1] : inc[0];
        cur = next;
      }
      if (p.start > p.end)
        reverse_path(p);
      else if (p.start == p.end)
        orient_by_lowest_edge(g, p);
      paths.push_back(std::move(p));
    }
  }
  return paths;
}

namespace {

// BFS distance from `from` to `to` avoiding edge `skip`; fills the edge route.
std::optional<std::size_t> distance_without(const Graph& g, VertexId from, VertexId to, EdgeId skip,
                                            std::vector<EdgeId>& route) {
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), none);
  std::vector<EdgeId> via(g.vertex_count(), 0);
  std::deque<VertexId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (EdgeId e : g.incident(x)) {
      if (e == skip) continue;
      const VertexId y = g.other_end(e, x);
      if (dist[y] != none) continue;
      dist[y] = dist[x] + 1;
      via[y] = e;
      queue.push_back(y);
    }
  }
  if (dist[to] == none) return std::nullopt;
  route.clear();
  for (VertexId x = to; x != from; x = g.other_end(via[x], x)) route.push_back(via[x]);
  std::reverse(route.begin(), route.end());
  return dist[to];
}

}  // namespace

Girth girth(const Graph& g) {
  Girth best;
  std::vector<EdgeId> route;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      best.length = 1;
      best.cycle = {e.id};
      return best;
    }
    const auto d = distance_without(g, e.u, e.v, e.id, route);
    if (!d) continue;
    if (!best.length || *d + 1 < *best.length) {
      best.length = *d + 1;
      best.cycle.assign(1, e.id);
      // route runs u -> v; the cycle closes through e from v back to u.
      best.cycle.insert(best.cycle.end(), route.rbegin(), route.rend());
    }
  }
  return best;
}

std::string_view to_string(Criterion c) { return c == Criterion::improved ? "improved" : "original"; }

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::A: return "A";
    case Condition::A_prime: return "A'";
    case Condition::B: return "B";
  }
  return "?";
}

SufficiencyReport check_sufficient(const Graph& g, int n, Criterion criterion) {
  if (n < 1) throw std::invalid_argument("check_sufficient: n must be at least 1");
  const auto paths = essential_path_decomposition(g);

  SufficiencyReport report;
  report.criterion = criterion;
  report.n = n;
  report.vertex_count = g.vertex_count();
  report.fewer_vertices_than_tokens = g.vertex_count() < static_cast<std::size_t>(n);
  report.girth = girth(g);

  const std::size_t path_bound = criterion == Criterion::improved ? static_cast<std::size_t>(std::max(n - 1, 0))
                                                                  : static_cast<std::size_t>(n + 1);
  const Condition path_condition = criterion == Criterion::improved ? Condition::A : Condition::A_prime;

  for (const auto& p : paths) {
    // Only distinct essential endpoints fall under (A)/(A'); closed paths are (B)'s business.
    if (p.no_essential_vertices || p.is_closed()) continue;
    if (!report.shortest_path || p.length() < report.shortest_path->length()) report.shortest_path = p;
    if (p.length() < path_bound)
      report.violations.push_back({path_condition, p.length(), path_bound, p.edges, p.start, p.end});
  }

  const auto cycle_bound = static_cast<std::size_t>(n + 1);
  if (report.girth.length && *report.girth.length < cycle_bound) {
    const Edge& first = g.edge(report.girth.cycle.front());
    report.violations.push_back(
        {Condition::B, *report.girth.length, cycle_bound, report.girth.cycle, first.u, first.u});
  }
  report.passes = report.violations.empty();
  return report;
}

Graph subdivide_edge(const Graph& g, EdgeId e, std::size_t k) {
  if (e >= g.edge_count()) throw std::out_of_range("subdivide_edge: unknown edge id " + std::to_string(e));
  Graph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.label(v));
  std::vector<VertexId> fresh;
  for (std::size_t i = 0; i < k; ++i) fresh.push_back(out.add_vertex());

  const Edge& target = g.edge(e);
  for (const Edge& ed : g.edges()) {
    if (ed.id == e)
      out.add_edge(target.u, k ? fresh.front() : target.v);
    else
      out.add_edge(ed.u, ed.v);
  }
  for (std::size_t i = 0; i < k; ++i) out.add_edge(fresh[i], i + 1 < k ? fresh[i + 1] : target.v);
  return out;
}

Graph sufficiently_subdivide(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("sufficiently_subdivide: n must be at least 1");
  Graph out = g;
  const auto target = static_cast<std::size_t>(std::max(n - 1, 0));
  // Edge ids survive subdivision, so the original decomposition stays valid.
  for (const auto& p : essential_path_decomposition(g)) {
    if (p.no_essential_vertices || p.is_closed() || p.length() >= target) continue;
    const EdgeId lowest = *std::min_element(p.edges.begin(), p.edges.end());
    out = subdivide_edge(out, lowest, target - p.length());
  }
  const auto cycle_bound = static_cast<std::size_t>(n + 1);
  while (true) {
    const auto gr = girth(out);
    if (!gr.length || *gr.length >= cycle_bound) break;
    out = subdivide_edge(out, gr.cycle.front(), cycle_bound - *gr.length);
  }
  return out;
}

}  // namespace confspace
