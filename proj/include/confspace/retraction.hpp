#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "confspace/edge_path.hpp"
#include "confspace/geometry.hpp"
#include "confspace/graph.hpp"

namespace confspace {

// Arc component inside one essential path. Coordinates run from 0 at the
// tail to m = length at the head; vertex p_j sits at coordinate j.
struct ArcComponent {
  EssentialPath path;
  bool whole_graph = false;

  VertexId tail() const noexcept { return path.start; }
  VertexId head() const noexcept { return path.end; }
  std::size_t length() const noexcept { return path.length(); }
  // Vertices of G lying in the component: the interior vertices, or every
  // vertex for the whole-graph component of a cycle.
  std::size_t q() const noexcept { return whole_graph ? path.length() : path.length() - 1; }
  VertexId vertex_at(std::size_t coord) const;
  // Coordinate of the k-th standard slot (k = 0, 1, ...).
  std::size_t slot(std::size_t k) const noexcept { return whole_graph ? k : k + 1; }
};

struct Location {
  enum class Kind { vertex_component, arc };
  Kind kind = Kind::vertex_component;
  std::size_t index = 0;  // vertex component or arc index
  mpq_class s;            // arc coordinate (arcs only)
};

/**
 * The components of G minus S_delta: one vertex component per essential
 * vertex and one arc component per essential path. A graph without
 * essential vertices gives a single whole-graph arc based at vertex 0.
 */
class Decomposition {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const mpq_class& delta() const noexcept { return delta_; }
  const std::vector<VertexId>& vertex_components() const noexcept { return vertex_components_; }
  const std::vector<ArcComponent>& arcs() const noexcept { return arcs_; }
  bool whole_graph() const noexcept { return !arcs_.empty() && arcs_[0].whole_graph; }

  std::optional<std::size_t> vertex_component_of(VertexId v) const;

  // Component of a point. Throws NoCombinatorics (with `token`) for points
  // on S_delta.
  Location locate(const GraphPoint& p, std::size_t token = 0) const;

 private:
  friend Decomposition decompose(const Graph& g, const mpq_class& delta);

  Graph graph_;
  mpq_class delta_;
  std::vector<VertexId> vertex_components_;
  std::vector<ArcComponent> arcs_;
  std::vector<std::optional<std::size_t>> vertex_component_index_;
  std::vector<std::pair<std::size_t, std::size_t>> interior_position_;  // vertex -> (arc, coord)
  std::vector<std::pair<std::size_t, std::size_t>> edge_position_;      // edge -> (arc, index)
};

Decomposition decompose(const Graph& g, const mpq_class& delta = mpq_class(1, 4));

struct Combinatorics {
  std::vector<std::optional<std::size_t>> vertex_tokens;  // per vertex component
  std::vector<std::vector<std::size_t>> arc_tokens;       // per arc, tail to head

  long theta(const Decomposition& d, std::size_t arc) const;

  friend bool operator==(const Combinatorics&, const Combinatorics&) = default;
};

Combinatorics combinatorics(const Configuration& x, const Decomposition& d);

// Where Phi placed a token: at a vertex component, or at an arc coordinate
// (which may be 0 or m when the token sits on an endpoint of an overcrowded
// arc).
struct Anchor {
  bool on_arc = false;
  std::size_t arc = 0;
  std::size_t coord = 0;
  VertexId vertex = 0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

enum class PhiRule { standard_position, case1_a, case1_b, case1_c, case2, two_short_arcs };

std::string_view to_string(PhiRule r);

struct StandardVertex {
  std::vector<VertexId> positions;  // by token
  std::vector<Anchor> anchors;      // by token
  PhiRule rule = PhiRule::standard_position;
  std::optional<std::size_t> overcrowded_arc;
};

// Phi(x). Throws NoCombinatorics, or NotSufficientlySubdivided when an arc
// is overcrowded beyond what the definition covers.
StandardVertex standard_vertex(const Configuration& x, const Decomposition& d);

// Edge path from Phi(before) to Phi(after) for configurations related by
// one crossing of S_delta (or by none, when their combinatorics agree).
EdgePath standard_move(const Configuration& before, const Configuration& after, const Decomposition& d);

// Concatenated standard moves along consecutive waypoints.
EdgePath standardize_path(const std::vector<Configuration>& waypoints, const Decomposition& d);

}  // namespace confspace
