#include "confspace/complex.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "confspace/errors.hpp"
#include "confspace/union_find.hpp"

namespace confspace {

std::string_view to_string(Labeling l) { return l == Labeling::ordered ? "ordered" : "unordered"; }

Labeling parse_labeling(std::string_view s) {
  if (s == "ordered") return Labeling::ordered;
  if (s == "unordered") return Labeling::unordered;
  throw std::invalid_argument("labeling must be 'ordered' or 'unordered'");
}

std::size_t CubeComplex::CodeHash::operator()(const std::vector<CellCode>& v) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (CellCode c : v) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::size_t CubeComplex::cell_count(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return cells_[k].size() / static_cast<std::size_t>(n_);
}

std::span<const CellCode> CubeComplex::cell(int k, std::size_t index) const {
  if (index >= cell_count(k)) throw std::out_of_range("cell index out of range");
  return std::span<const CellCode>(cells_[k]).subspan(index * n_, n_);
}

std::optional<std::size_t> CubeComplex::find(int k, std::span<const CellCode> codes) const {
  if (k < 0 || k > dimension() || codes.size() != static_cast<std::size_t>(n_)) return std::nullopt;
  std::vector<CellCode> key(codes.begin(), codes.end());
  if (labeling_ == Labeling::unordered) std::sort(key.begin(), key.end());
  const auto it = index_[k].find(key);
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

const SparseIntMatrix& CubeComplex::boundary(int k) const {
  if (k < 1 || k > dimension())
    throw std::out_of_range("boundary: dimension " + std::to_string(k) + " out of range");
  return boundaries_[k - 1];
}

GraphCell CubeComplex::decode(CellCode c) const {
  if (c < graph_.vertex_count()) return {false, c};
  return {true, static_cast<std::uint32_t>(c - graph_.vertex_count())};
}

namespace {

struct SignedFace {
  std::size_t index;
  int coefficient;
  bool through_loop;
};

// Parity of the permutation that sorts the edge codes of `face`.
int edge_parity(const CubeComplex& k, const std::vector<CellCode>& face) {
  std::vector<CellCode> edges;
  for (CellCode c : face)
    if (k.is_edge_code(c)) edges.push_back(c);
  int inversions = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i] > edges[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<SignedFace> signed_faces(const CubeComplex& k, int dim, std::size_t index) {
  std::vector<SignedFace> out;
  if (dim < 1) return out;
  const auto cell = k.cell(dim, index);
  int j = 0;
  for (std::size_t pos = 0; pos < cell.size(); ++pos) {
    if (!k.is_edge_code(cell[pos])) continue;
    const Edge& e = k.graph().edge(k.decode(cell[pos]).id);
    const int sign = (j % 2 == 0) ? 1 : -1;
    ++j;
    for (int side : {-1, 1}) {
      std::vector<CellCode> face(cell.begin(), cell.end());
      face[pos] = k.vertex_code(side < 0 ? e.tail() : e.head());
      int parity = 1;
      if (k.labeling() == Labeling::unordered) parity = edge_parity(k, face);
      const auto found = k.find(dim - 1, face);
      if (!found) throw std::logic_error("face of a registered cell is missing");
      out.push_back({*found, sign * side * parity, e.is_loop()});
    }
  }
  return out;
}

bool closure_free(const Graph& g, const std::vector<char>& used, CellCode c, const Edge** edge_out) {
  const auto vcount = g.vertex_count();
  if (c < vcount) {
    *edge_out = nullptr;
    return !used[c];
  }
  const Edge& e = g.edge(static_cast<EdgeId>(c - vcount));
  *edge_out = &e;
  return !used[e.u] && !used[e.v];
}

// Saturating count of n-tuples (ordered) or n-sets (unordered) of vertices.
long double zero_cell_estimate(std::size_t v, int n, Labeling labeling) {
  long double count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<long double>(v - i);
    if (labeling == Labeling::unordered) count /= static_cast<long double>(i + 1);
  }
  return count;
}

}  // namespace

std::vector<std::size_t> CubeComplex::faces(int k, std::size_t index) const {
  std::vector<std::size_t> out;
  for (const auto& f : signed_faces(*this, k, index)) out.push_back(f.index);
  return out;
}

CubeComplex build_complex(const Graph& g, int n, Labeling labeling, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("build_complex: n must be at least 1");
  CubeComplex k;
  k.graph_ = g;
  k.n_ = n;
  k.labeling_ = labeling;

  const std::size_t vcount = g.vertex_count();
  if (static_cast<std::size_t>(n) > vcount) return k;
  const long double estimate = zero_cell_estimate(vcount, n, labeling);
  if (estimate > static_cast<long double>(cap))
    throw CapExceeded("0-cell count " + std::to_string(static_cast<unsigned long long>(estimate)) +
                      " exceeds the cell cap " + std::to_string(cap));

  const auto code_count = static_cast<CellCode>(vcount + g.edge_count());
  std::vector<char> used(vcount, 0);
  std::vector<CellCode> tuple(n);
  std::vector<CellCode> next(n, 0);

  // Iterative DFS over positions; next[pos] is the next code to try there.
  int pos = 0;
  int edges_in_tuple = 0;
  next[0] = 0;
  while (pos >= 0) {
    if (next[pos] >= code_count) {
      --pos;
      if (pos < 0) break;
      // Undo the choice at pos.
      const Edge* e = nullptr;
      closure_free(g, used, tuple[pos], &e);
      if (e) {
        used[e->u] = used[e->v] = 0;
        --edges_in_tuple;
      } else {
        used[tuple[pos]] = 0;
      }
      continue;
    }
    const CellCode c = next[pos]++;
    const Edge* e = nullptr;
    if (!closure_free(g, used, c, &e)) continue;
    tuple[pos] = c;
    if (pos + 1 == n) {
      const int dim = edges_in_tuple + (e ? 1 : 0);
      if (static_cast<int>(k.cells_.size()) <= dim) k.cells_.resize(dim + 1);
      k.cells_[dim].insert(k.cells_[dim].end(), tuple.begin(), tuple.end());
      continue;
    }
    if (e) {
      used[e->u] = used[e->v] = 1;
      ++edges_in_tuple;
    } else {
      used[c] = 1;
    }
    ++pos;
    next[pos] = labeling == Labeling::unordered ? c + 1 : 0;
  }

  k.index_.resize(k.cells_.size());
  for (std::size_t dim = 0; dim < k.cells_.size(); ++dim) {
    const std::size_t count = k.cells_[dim].size() / n;
    k.index_[dim].reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto first = k.cells_[dim].begin() + static_cast<std::ptrdiff_t>(i * n);
      k.index_[dim].emplace(std::vector<CellCode>(first, first + n), i);
    }
  }

  for (int dim = 1; dim <= k.dimension(); ++dim) {
    SparseIntMatrix m{k.cell_count(dim - 1), k.cell_count(dim), {}};
    for (std::size_t col = 0; col < k.cell_count(dim); ++col)
      for (const auto& f : signed_faces(k, dim, col))
        if (!f.through_loop) m.entries.push_back({f.index, col, f.coefficient});
    m.normalize();
    k.boundaries_.push_back(std::move(m));
  }
  return k;
}

std::vector<std::size_t> f_vector(const CubeComplex& k) {
  std::vector<std::size_t> out;
  for (int dim = 0; dim <= k.dimension(); ++dim) out.push_back(k.cell_count(dim));
  return out;
}

std::vector<std::size_t> MaximalCellVector::positive_dimensions() const {
  if (by_dimension.size() <= 1) return {};
  return {by_dimension.begin() + 1, by_dimension.end()};
}

MaximalCellVector maximal_cell_vector(const CubeComplex& k) {
  MaximalCellVector out;
  for (int dim = 0; dim <= k.dimension(); ++dim) {
    std::vector<char> is_face(k.cell_count(dim), 0);
    if (dim < k.dimension())
      for (std::size_t i = 0; i < k.cell_count(dim + 1); ++i)
        for (std::size_t f : k.faces(dim + 1, i)) is_face[f] = 1;
    out.by_dimension.push_back(static_cast<std::size_t>(std::count(is_face.begin(), is_face.end(), 0)));
  }
  return out;
}

long long euler_characteristic(const CubeComplex& k) {
  long long chi = 0;
  for (int dim = 0; dim <= k.dimension(); ++dim)
    chi += (dim % 2 ? -1LL : 1LL) * static_cast<long long>(k.cell_count(dim));
  return chi;
}

const SparseIntMatrix& boundary_matrix(const CubeComplex& k, int dim) { return k.boundary(dim); }

std::size_t component_count(const CubeComplex& k) {
  UnionFind uf(k.cell_count(0));
  for (std::size_t i = 0; i < k.cell_count(1); ++i) {
    const auto f = k.faces(1, i);
    uf.unite(f[0], f[1]);
  }
  return uf.set_count();
}

SurfaceReport surface_report(const CubeComplex& k) {
  if (k.dimension() != 2)
    throw std::invalid_argument("surface_report: complex has dimension " + std::to_string(k.dimension()) +
                                ", expected 2");
  SurfaceReport report;
  report.components = component_count(k);

  const std::size_t f0 = k.cell_count(0), f1 = k.cell_count(1), f2 = k.cell_count(2);

  // Link vertices are (1-cell, end) pairs encoded as 2*c + end.
  std::vector<std::size_t> link_owner(2 * f1);
  for (std::size_t c = 0; c < f1; ++c) {
    const auto sf = signed_faces(k, 1, c);
    link_owner[2 * c] = sf[0].index;      // tail face
    link_owner[2 * c + 1] = sf[1].index;  // head face
  }

  std::vector<int> coface_count(f1, 0);
  std::vector<std::vector<std::pair<std::size_t, int>>> cofaces(f1);
  std::vector<int> link_degree(2 * f1, 0);
  UnionFind link(2 * f1);

  for (std::size_t s = 0; s < f2; ++s) {
    const auto sf = signed_faces(k, 2, s);
    // sf = [p1 tail, p1 head, p2 tail, p2 head]; the p1 faces keep the
    // p2 edge free and vice versa.
    for (const auto& f : sf) {
      ++coface_count[f.index];
      cofaces[f.index].emplace_back(s, f.coefficient);
    }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const std::size_t x = 2 * sf[a].index + b;      // p1 fixed at end a, p2 edge at end b
        const std::size_t y = 2 * sf[2 + b].index + a;  // p2 fixed at end b, p1 edge at end a
        ++link_degree[x];
        ++link_degree[y];
        link.unite(x, y);
      }
  }

  bool closed = f2 > 0 && std::all_of(coface_count.begin(), coface_count.end(), [](int c) { return c == 2; });
  if (closed) {
    std::vector<std::size_t> root(f0, static_cast<std::size_t>(-1));
    std::vector<char> seen(f0, 0);
    for (std::size_t x = 0; x < 2 * f1 && closed; ++x) {
      if (link_degree[x] != 2) closed = false;
      const std::size_t v = link_owner[x];
      const std::size_t r = link.find(x);
      if (!seen[v]) {
        seen[v] = 1;
        root[v] = r;
      } else if (root[v] != r) {
        closed = false;
      }
    }
    if (std::count(seen.begin(), seen.end(), 0) > 0) closed = false;
  }
  report.is_closed_surface = closed;
  if (!closed) return report;

  std::vector<int> eps(f2, 0);
  bool orientable = true;
  std::vector<std::vector<std::size_t>> square_edges(f2);
  for (std::size_t c = 0; c < f1; ++c)
    for (const auto& [s, coef] : cofaces[c]) square_edges[s].push_back(c);

  for (std::size_t seed = 0; seed < f2 && orientable; ++seed) {
    if (eps[seed]) continue;
    eps[seed] = 1;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty() && orientable) {
      const std::size_t s = queue.front();
      queue.pop_front();
      for (std::size_t c : square_edges[s]) {
        const auto& [s1, c1] = cofaces[c][0];
        const auto& [s2, c2] = cofaces[c][1];
        if (s1 == s2) {
          if (c1 != -c2) orientable = false;
          continue;
        }
        const std::size_t other = s1 == s ? s2 : s1;
        const int mine = s1 == s ? c1 : c2;
        const int theirs = s1 == s ? c2 : c1;
        const int want = -eps[s] * mine * theirs;  // eps[s]*mine + want*theirs == 0
        if (!eps[other]) {
          eps[other] = want;
          queue.push_back(other);
        } else if (eps[other] != want) {
          orientable = false;
        }
      }
    }
  }
  report.orientable = orientable;
  return report;
}

}  // namespace confspace
