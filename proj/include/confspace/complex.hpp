#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "confspace/graph.hpp"
#include "confspace/matrix.hpp"

namespace confspace {

enum class Labeling { ordered, unordered };

std::string_view to_string(Labeling l);
Labeling parse_labeling(std::string_view s);

// A cell of G encoded as one integer: vertex v -> v, edge e -> |V| + e.
// Codes therefore follow the canonical cell order (vertices by id, then
// edges by id).
using CellCode = std::uint32_t;

struct GraphCell {
  bool is_edge = false;
  std::uint32_t id = 0;
};

inline constexpr std::size_t default_cell_cap = 10'000'000;

class CubeComplex;

// Enumerate every cell of D^n(G) (ordered) or UD^n(G) (unordered).
// Throws CapExceeded when the 0-cell count would exceed `cap`.
CubeComplex build_complex(const Graph& g, int n, Labeling labeling, std::size_t cap = default_cell_cap);

/**
 * Cells are n-tuples of G-cells with pairwise disjoint closures, stored flat
 * per dimension (n codes per cell) in lexicographic order of their codes.
 * Unordered cells are stored by their sorted representative.
 */
class CubeComplex {
 public:
  const Graph& graph() const noexcept { return graph_; }
  int tokens() const noexcept { return n_; }
  Labeling labeling() const noexcept { return labeling_; }

  // Highest dimension with at least one cell, or -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  bool empty() const noexcept { return cells_.empty(); }
  std::size_t cell_count(int k) const;
  std::span<const CellCode> cell(int k, std::size_t index) const;

  // Index of a cell given as codes; unordered inputs are sorted first.
  std::optional<std::size_t> find(int k, std::span<const CellCode> codes) const;

  // Rows are (k-1)-cells, columns k-cells. Requires 1 <= k <= dimension().
  const SparseIntMatrix& boundary(int k) const;

  // Decode helpers.
  GraphCell decode(CellCode c) const;
  CellCode vertex_code(VertexId v) const noexcept { return v; }
  CellCode edge_code(EdgeId e) const noexcept { return static_cast<CellCode>(graph_.vertex_count() + e); }
  bool is_edge_code(CellCode c) const noexcept { return c >= graph_.vertex_count(); }

  // Combinatorial faces of a k-cell: for every edge coordinate, the cell
  // with that coordinate set to tail and to head. Unlike the boundary
  // column, faces through a loop are reported even though they cancel.
  std::vector<std::size_t> faces(int k, std::size_t index) const;

 private:
  friend CubeComplex build_complex(const Graph&, int, Labeling, std::size_t);

  struct CodeHash {
    std::size_t operator()(const std::vector<CellCode>& v) const noexcept;
  };

  Graph graph_;
  int n_ = 0;
  Labeling labeling_ = Labeling::unordered;
  std::vector<std::vector<CellCode>> cells_;
  std::vector<std::unordered_map<std::vector<CellCode>, std::size_t, CodeHash>> index_;
  std::vector<SparseIntMatrix> boundaries_;  // boundaries_[k-1] = boundary(k)
};

std::vector<std::size_t> f_vector(const CubeComplex& k);

struct MaximalCellVector {
  std::vector<std::size_t> by_dimension;  // index 0..dim

  std::size_t dimension_zero() const { return by_dimension.empty() ? 0 : by_dimension.front(); }
  // Entries for dimensions 1..dim, the form used for cube complexes.
  std::vector<std::size_t> positive_dimensions() const;
};

MaximalCellVector maximal_cell_vector(const CubeComplex& k);

long long euler_characteristic(const CubeComplex& k);

const SparseIntMatrix& boundary_matrix(const CubeComplex& k, int dim);

// Connected components of the 1-skeleton.
std::size_t component_count(const CubeComplex& k);

struct SurfaceReport {
  bool is_closed_surface = false;
  bool orientable = false;
  std::size_t components = 0;
};

// Requires a 2-dimensional complex. `orientable` is only meaningful (and
// only set) for closed surfaces.
SurfaceReport surface_report(const CubeComplex& k);

}  // namespace confspace
