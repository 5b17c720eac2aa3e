#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "confspace/complex.hpp"
#include "confspace/graph.hpp"

namespace confspace {

// One token traverses one edge. dir is +1 for tail->head, -1 for head->tail.
struct Move {
  std::size_t token = 0;
  EdgeId edge = 0;
  int dir = 1;

  friend bool operator==(const Move&, const Move&) = default;
};

struct EdgePath {
  std::vector<VertexId> start;  // vertex of each token
  std::vector<Move> moves;
  bool loop = false;

  // Token positions after all moves. Throws ConstructionError if a move
  // does not start where its token is.
  std::vector<VertexId> end(const Graph& g) const;

  // Append a move of `token` from its current vertex `from` to `to` along e.
  void push(const Graph& g, std::size_t token, EdgeId e, VertexId from);
};

struct PathCheck {
  bool valid = false;
  std::string reason;               // empty when valid
  std::optional<std::size_t> step;  // offending move index, if any
};

// Every prefix must be a 0-cell of k, every move a 1-cell of k, and a path
// flagged `loop` must end at its start 0-cell.
PathCheck validate_path(const EdgePath& p, const CubeComplex& k);

// The path as a 1-chain indexed by the 1-cells of k (forward traversals
// count +1). Throws ConstructionError if the path is not valid in k.
std::vector<mpz_class> to_chain(const EdgePath& p, const CubeComplex& k);

}  // namespace confspace
