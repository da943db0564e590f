#include "outfn/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace outfn {

RationalMatrix boundary_matrix(const Graph& g) {
  RationalMatrix d(g.num_vertices(), g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    d(g.tau(e), e) += 1;
    d(g.iota(e), e) -= 1;
  }
  return d;
}

Subspace h1_basis(const Graph& g) {
  if (g.num_edges() == 0) return Subspace(0);
  return kernel(boundary_matrix(g));
}

RationalMatrix edge_action(const GraphAut& a) {
  const int n = static_cast<int>(a.edge_map.size());
  RationalMatrix p(n, n);
  for (int e = 0; e < n; ++e) p(a.edge_map[static_cast<std::size_t>(e)], e) = a.flip[static_cast<std::size_t>(e)] ? -1 : 1;
  return p;
}

RationalMatrix induced_h1(const Subspace& basis, const GraphAut& a) {
  return basis.coordinates(edge_action(a) * basis.basis());
}

FiniteRep homology_rep(const GraphAction& action) {
  const Subspace basis = h1_basis(action.graph);
  FiniteRep rep{action.group, basis.dim(), {}};
  for (const auto& m : action.maps) rep.matrices.push_back(induced_h1(basis, m));
  return rep;
}

Collapse collapse(const Graph& g, const std::vector<int>& edges) {
  std::vector<char> chosen(static_cast<std::size_t>(g.num_edges()), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("collapse: no such edge");
    chosen[static_cast<std::size_t>(e)] = 1;
  }
  Graph sub;
  for (int v = 0; v < g.num_vertices(); ++v) sub.add_vertex();
  for (int e = 0; e < g.num_edges(); ++e)
    if (chosen[static_cast<std::size_t>(e)]) sub.add_edge(g.iota(e), g.tau(e));
  const auto label = sub.component_labels();

  Collapse c;
  c.vertex_map = label;
  const int classes = sub.components();
  for (int k = 0; k < classes; ++k) {
    std::string name;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (label[static_cast<std::size_t>(v)] == k) name += (name.empty() ? "" : "+") + g.vertex_name(v);
    c.quotient.add_vertex(name);
  }
  c.edge_map.assign(static_cast<std::size_t>(g.num_edges()), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (chosen[static_cast<std::size_t>(e)]) continue;
    c.edge_map[static_cast<std::size_t>(e)] =
        c.quotient.add_edge(label[static_cast<std::size_t>(g.iota(e))], label[static_cast<std::size_t>(g.tau(e))], g.edge_name(e));
  }
  c.projection = RationalMatrix(c.quotient.num_edges(), g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e)
    if (c.edge_map[static_cast<std::size_t>(e)] >= 0) c.projection(c.edge_map[static_cast<std::size_t>(e)], e) = 1;

  const Subspace source = h1_basis(g);
  const Subspace target = h1_basis(c.quotient);
  c.homology_map = target.coordinates(c.projection * source.basis());
  c.surjective = rank(c.homology_map) == target.dim();
  return c;
}

}  // namespace outfn
