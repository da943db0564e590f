#pragma once

// Splitting a graph along the fixed set of an involution that reverses every
// simple loop.

#include <string>
#include <vector>

#include "outfn/graph.hpp"

namespace outfn {

struct Subgraph {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted
  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

struct Subdivision {
  Graph graph;
  GraphAut xi;
  // Midpoint vertex of each edge that xi maps to itself reversed.
  std::vector<int> midpoints;
};

// Inserts a vertex at the midpoint of every edge reversed by xi; on the
// result no edge is mapped to itself reversed.
Subdivision subdivide_reversed_edges(const Graph& g, const GraphAut& xi);

struct DoubleTree {
  std::string failure;  // empty on success
  Subdivision sub;
  Subgraph fixed;
  Subgraph d;
  Subgraph d_prime;
  bool d_is_tree = false;
  bool covers = false;               // D ∪ D' is everything
  bool meets_in_fixed_set = false;   // D ∩ D' = F
  bool ok() const { return failure.empty() && d_is_tree && covers && meets_in_fixed_set; }
};

// Requires g connected and xi an involution flipping every simple loop;
// otherwise `failure` says which precondition failed.
DoubleTree double_tree_decomposition(const Graph& g, const GraphAut& xi);

// Whether the subgraph is connected and has |E| = |V| - 1.
bool is_tree(const Graph& g, const Subgraph& s);

}  // namespace outfn
