#include "outfn/admissible.hpp"

#include <numeric>
#include <stdexcept>

#include "outfn/homology.hpp"
#include "outfn/loops.hpp"

namespace outfn {

ObstructionReport admissibility_obstruction(const Graph& g) {
  check_size(g);
  ObstructionReport r;
  std::vector<std::optional<int>> m;
  for (int e = 0; e < g.num_edges(); ++e) {
    m.push_back(min_loop_through_edge(g, e));
    if (!m.back()) r.separating_edges.push_back(e);
  }
  for (int e = 0; e < g.num_edges() && !r.witness; ++e) {
    for (const int x : {g.iota(e), g.tau(e)}) {
      bool all_differ = true;
      for (int f = 0; f < g.num_edges() && all_differ; ++f) {
        if (f == e || (g.iota(f) != x && g.tau(f) != x)) continue;
        if (m[static_cast<std::size_t>(f)] == m[static_cast<std::size_t>(e)]) all_differ = false;
      }
      if (all_differ) {
        r.witness = ObstructionWitness{e, x};
        break;
      }
    }
  }
  return r;
}

namespace {

bool acyclic(const Graph& g, const std::vector<int>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (int e : edges) {
    const int a = find(g.iota(e));
    const int b = find(g.tau(e));
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> invariant_forests(const GraphAction& action) {
  const auto orbits = edge_orbits(action);
  if (orbits.size() > 20) throw std::length_error("more than 20 edge orbits");
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = 1u << orbits.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<int> edges;
    for (std::size_t k = 0; k < orbits.size(); ++k)
      if (mask >> k & 1u) edges.insert(edges.end(), orbits[k].begin(), orbits[k].end());
    if (acyclic(action.graph, edges)) out.push_back(mask);
  }
  return out;
}

AdmissibilityReport check_admissible(const GraphAction& action) {
  AdmissibilityReport r;
  r.orbits = edge_orbits(action);
  r.invariant_forests = invariant_forests(action);
  r.connected = action.graph.connected();
  for (int v = 0; v < action.graph.num_vertices(); ++v)
    if (action.graph.valence(v) == 2) r.valence_two_vertices.push_back(v);
  return r;
}

bool is_rose(const Graph& g) {
  if (g.num_vertices() != 1) return false;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!g.is_loop(e)) return false;
  return true;
}

bool is_cage(const Graph& g) {
  if (g.num_vertices() != 2) return false;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) return false;
  return true;
}

OrientationReport invariant_orientation(const GraphAction& action) {
  if (!is_rose(action.graph)) throw std::invalid_argument("invariant_orientation needs a rose");
  const int n = action.graph.num_edges();
  OrientationReport r;
  std::vector<int> sign(static_cast<std::size_t>(n), 0);
  bool consistent = true;
  for (int e = 0; e < n; ++e) {
    if (sign[static_cast<std::size_t>(e)] != 0) continue;
    ++r.orbit_count;
    sign[static_cast<std::size_t>(e)] = 1;
    std::vector<int> stack{e};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& m : action.maps) {
        const int y = m.edge_map[static_cast<std::size_t>(x)];
        const int s = m.flip[static_cast<std::size_t>(x)] ? -sign[static_cast<std::size_t>(x)] : sign[static_cast<std::size_t>(x)];
        if (sign[static_cast<std::size_t>(y)] == 0) {
          sign[static_cast<std::size_t>(y)] = s;
          stack.push_back(y);
        } else if (sign[static_cast<std::size_t>(y)] != s) {
          consistent = false;
        }
      }
    }
  }
  if (consistent) r.orientation = sign;
  r.trivial_multiplicity = trivial_multiplicity(homology_rep(action));
  return r;
}

CageMultiplicityReport cage_trivial_multiplicity_check(const GraphAction& action) {
  if (!is_cage(action.graph)) throw std::invalid_argument("cage_trivial_multiplicity_check needs a cage");
  CageMultiplicityReport r;
  r.applicable = action.group.perfect;
  r.orbit_count = static_cast<int>(edge_orbits(action).size());
  r.trivial_multiplicity = trivial_multiplicity(homology_rep(action));
  return r;
}

}  // namespace outfn
