#pragma once

// Cycle space H_1(X; Q) of a graph as edge-weight vectors, the induced action
// of graph automorphisms on it, and collapsing maps.

#include <vector>

#include "outfn/graph.hpp"
#include "outfn/rep.hpp"

namespace outfn {

// |V| x |E|; column e is tau(e) - iota(e).
RationalMatrix boundary_matrix(const Graph& g);

// Columns are integer edge-weight vectors balanced at every vertex.
Subspace h1_basis(const Graph& g);

// |E| x |E| signed permutation: e goes to ±g.e, negative iff g flips e.
// Push-forward makes (ab)_* = a_* b_*.
RationalMatrix edge_action(const GraphAut& a);

// Matrix of a_* on H_1 in the coordinates of `basis`. Throws
// std::domain_error if the image leaves the cycle space.
RationalMatrix induced_h1(const Subspace& basis, const GraphAut& a);

// Representation of the acting group on H_1 in h1_basis coordinates.
FiniteRep homology_rep(const GraphAction& action);

struct Collapse {
  Graph quotient;
  std::vector<int> vertex_map;  // vertex -> quotient vertex
  std::vector<int> edge_map;    // edge -> quotient edge, -1 if collapsed
  RationalMatrix projection;    // |E'| x |E| edge-weight projection
  RationalMatrix homology_map;  // H_1(X) -> H_1(X') in h1_basis coordinates
  bool surjective = false;
};

// Collapses each connected component of the chosen edge set to a point.
Collapse collapse(const Graph& g, const std::vector<int>& edges);

}  // namespace outfn
