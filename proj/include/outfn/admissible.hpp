#pragma once

// Admissibility of graph actions, the loop-length obstruction, invariant
// orientations of roses and the trivial-multiplicity count on cages.

#include <optional>
#include <vector>

#include "outfn/graph.hpp"

namespace outfn {

struct ObstructionWitness {
  int edge = 0;
  int vertex = 0;
  friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

struct ObstructionReport {
  // Edges lying on no simple loop. The obstruction lemma assumes there are
  // none, so these are reported separately.
  std::vector<int> separating_edges;
  // First (edge, endpoint) in edge order, iota before tau, such that every
  // other edge incident to the endpoint has a different m-value.
  std::optional<ObstructionWitness> witness;
};

ObstructionReport admissibility_obstruction(const Graph& g);

struct AdmissibilityReport {
  std::vector<std::vector<int>> orbits;
  // Each entry is a bitmask over `orbits` whose union is a nonempty forest.
  std::vector<std::uint32_t> invariant_forests;
  std::vector<int> valence_two_vertices;
  bool connected = false;
  bool admissible() const { return connected && invariant_forests.empty() && valence_two_vertices.empty(); }
};

// Throws std::length_error beyond 20 edge orbits.
std::vector<std::uint32_t> invariant_forests(const GraphAction& action);
AdmissibilityReport check_admissible(const GraphAction& action);
inline bool is_admissible(const GraphAction& action) { return check_admissible(action).admissible(); }

struct OrientationReport {
  // +1 keeps the edge's orientation, -1 reverses it; present iff the group
  // preserves some orientation of every edge.
  std::optional<std::vector<int>> orientation;
  int orbit_count = 0;
  int trivial_multiplicity = 0;
};

// Requires a rose (one vertex, every edge a loop).
OrientationReport invariant_orientation(const GraphAction& action);

struct CageMultiplicityReport {
  bool applicable = false;  // the descriptor is flagged perfect
  int orbit_count = 0;
  int trivial_multiplicity = 0;
  bool pass() const { return applicable && trivial_multiplicity == orbit_count - 1; }
};

// Requires a cage (two vertices, every edge joins them).
CageMultiplicityReport cage_trivial_multiplicity_check(const GraphAction& action);

bool is_rose(const Graph& g);
bool is_cage(const Graph& g);

}  // namespace outfn
