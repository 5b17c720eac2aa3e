#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace confspace {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// An edge as declared. Globally, every edge is oriented from its lower-id
// endpoint (tail) to its higher-id endpoint (head); a loop has tail == head.
struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  VertexId tail() const noexcept { return u < v ? u : v; }
  VertexId head() const noexcept { return u < v ? v : u; }
  bool is_loop() const noexcept { return u == v; }
  bool touches(VertexId x) const noexcept { return u == x || v == x; }
};

/**
 * Finite multigraph with dense vertex and edge ids (0..count-1). Parallel
 * edges and self-loops are allowed. A self-loop contributes 2 to the degree
 * of its vertex and appears twice in that vertex's incidence list.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  VertexId add_vertex(std::string label = {});
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }

  // Incident edge ids in ascending order; loops are listed twice.
  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }
  VertexId other_end(EdgeId e, VertexId from) const;

  bool is_connected() const;

  // Canonical line-format text (see parse_graph).
  std::string to_text() const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Parse the line format:
//   # comment
//   v <id> [label]
//   e <id> <u> <v>
// Ids are non-negative integers declared in order 0, 1, 2, ... per kind.
// Throws ParseError carrying the offending line number.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

// 64-bit FNV-1a of arbitrary bytes, as a 16-digit hex string.
std::string fnv1a_hex(std::string_view bytes);

// fnv1a_hex of the canonical text.
std::string graph_hash(const Graph& g);

// Vertices of degree != 2, ascending.
std::vector<VertexId> essential_vertices(const Graph& g);

inline bool is_essential(const Graph& g, VertexId v) { return g.degree(v) != 2; }

// A maximal trail whose interior vertices all have degree 2. `start` is the
// tail of the path's canonical orientation and `end` its head.
struct EssentialPath {
  VertexId start = 0;
  VertexId end = 0;
  std::vector<EdgeId> edges;        // h_1..h_m from start to end
  std::vector<VertexId> interior;   // the m-1 vertices between start and end
  bool no_essential_vertices = false;

  std::size_t length() const noexcept { return edges.size(); }
  bool is_closed() const noexcept { return start == end; }
  // start, interior..., end (m+1 entries).
  std::vector<VertexId> vertices() const;
};

// Partition of the edge set into essential paths. Orientation: tail is the
// endpoint with the lower id; a path with equal endpoints is oriented so its
// lowest-id edge runs tail->head. A graph without essential vertices (a
// cycle) yields one path flagged `no_essential_vertices`, starting at vertex 0
// along its lowest-id edge. Requires a connected graph.
std::vector<EssentialPath> essential_path_decomposition(const Graph& g);

struct Girth {
  std::optional<std::size_t> length;  // nullopt = infinity (forest)
  std::vector<EdgeId> cycle;          // witness; cycle.front() is the lowest-id edge on any shortest cycle

  bool infinite() const noexcept { return !length.has_value(); }
};

// Loops count 1, parallel pairs 2.
Girth girth(const Graph& g);

enum class Criterion { improved, original };
enum class Condition { A, A_prime, B };

std::string_view to_string(Criterion c);
std::string_view to_string(Condition c);

struct Violation {
  Condition condition = Condition::A;
  std::size_t length = 0;
  std::size_t required = 0;
  std::vector<EdgeId> witness;  // edges of the offending path or cycle
  VertexId from = 0;
  VertexId to = 0;
};

struct SufficiencyReport {
  Criterion criterion = Criterion::improved;
  int n = 0;
  bool passes = false;
  // Shortest essential path between distinct essential vertices, if any.
  std::optional<EssentialPath> shortest_path;
  Girth girth;
  std::size_t vertex_count = 0;
  bool fewer_vertices_than_tokens = false;  // informational only
  std::vector<Violation> violations;
};

// improved: (A) every essential path between distinct essential vertices
// has length >= n-1, (B) girth >= n+1. original: (A') length >= n+1, (B).
SufficiencyReport check_sufficient(const Graph& g, int n, Criterion criterion = Criterion::improved);

// Replace edge e by a path of k+1 edges through k new vertices. Edge e keeps
// its id and becomes (u, first new vertex); new vertex and edge ids are
// appended in order along the path.
Graph subdivide_edge(const Graph& g, EdgeId e, std::size_t k);

// Greedy subdivision until check_sufficient(., n, improved) passes.
Graph sufficiently_subdivide(const Graph& g, int n);

}  // namespace confspace
