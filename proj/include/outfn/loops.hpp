#pragma once

// Simple loops (embedded circles) in small graphs.

#include <optional>
#include <vector>

#include "outfn/graph.hpp"
#include "outfn/matrix.hpp"

namespace outfn {

// Edge-count bound for exhaustive loop enumeration: 32, or the value of the
// OUTFN_MAX_EDGES environment variable when set.
int max_edges();

// Throws std::length_error when g exceeds max_edges().
void check_size(const Graph& g);

struct Step {
  int edge = 0;
  bool forward = true;  // traversed from iota to tau
  friend bool operator==(const Step&, const Step&) = default;
};

// Cyclic sequence of steps. Normal form: starts with its smallest edge,
// traversed forward.
struct Loop {
  std::vector<Step> steps;
  int length() const { return static_cast<int>(steps.size()); }
  bool contains(int edge) const;
  // Signed edge-weight vector, a cycle in H_1.
  RationalMatrix vector(int num_edges) const;
  friend bool operator==(const Loop&, const Loop&) = default;
};

// Every simple loop exactly once, sorted by (first edge, then step sequence).
std::vector<Loop> simple_loops(const Graph& g);

// m(e): length of a shortest simple loop through e, nothing if e separates.
// Found by a shortest-path search, independent of simple_loops.
std::optional<int> min_loop_through_edge(const Graph& g, int e);

// Every simple loop l satisfies xi_*(l) = -l.
bool flips_all_simple_loops(const Graph& g, const GraphAut& xi);

}  // namespace outfn
