#include "outfn/double_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "outfn/loops.hpp"

namespace outfn {

Subdivision subdivide_reversed_edges(const Graph& g, const GraphAut& xi) {
  Subdivision s;
  const int nv = g.num_vertices();
  for (int v = 0; v < nv; ++v) s.graph.add_vertex(g.vertex_name(v));
  // Each old edge becomes one or two new edges; remember which.
  std::vector<int> first(static_cast<std::size_t>(g.num_edges()));
  std::vector<int> second(static_cast<std::size_t>(g.num_edges()), -1);
  std::vector<int> mid(static_cast<std::size_t>(g.num_edges()), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    const bool reversed = xi.edge_map[static_cast<std::size_t>(e)] == e && xi.flip[static_cast<std::size_t>(e)];
    if (!reversed) {
      first[static_cast<std::size_t>(e)] = s.graph.add_edge(g.iota(e), g.tau(e), g.edge_name(e));
      continue;
    }
    const int m = s.graph.add_vertex("mid(" + g.edge_name(e) + ")");
    mid[static_cast<std::size_t>(e)] = m;
    s.midpoints.push_back(m);
    first[static_cast<std::size_t>(e)] = s.graph.add_edge(g.iota(e), m, g.edge_name(e) + "'");
    second[static_cast<std::size_t>(e)] = s.graph.add_edge(m, g.tau(e), g.edge_name(e) + "''");
  }

  s.xi = GraphAut::identity(s.graph);
  for (int v = 0; v < nv; ++v) s.xi.vertex_map[static_cast<std::size_t>(v)] = xi.vertex_map[static_cast<std::size_t>(v)];
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto ue = static_cast<std::size_t>(e);
    const int ge = xi.edge_map[ue];
    const bool flip = xi.flip[ue];
    if (mid[ue] >= 0) {
      // The halves trade places: iota->m goes to m->tau reversed.
      s.xi.edge_map[static_cast<std::size_t>(first[ue])] = second[ue];
      s.xi.edge_map[static_cast<std::size_t>(second[ue])] = first[ue];
      s.xi.flip[static_cast<std::size_t>(first[ue])] = 1;
      s.xi.flip[static_cast<std::size_t>(second[ue])] = 1;
      continue;
    }
    s.xi.edge_map[static_cast<std::size_t>(first[ue])] = first[static_cast<std::size_t>(ge)];
    s.xi.flip[static_cast<std::size_t>(first[ue])] = flip;
  }
  return s;
}

bool is_tree(const Graph& g, const Subgraph& s) {
  if (s.vertices.empty()) return false;
  if (s.edges.size() + 1 != s.vertices.size()) return false;
  Graph t;
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int v : s.vertices) local[static_cast<std::size_t>(v)] = t.add_vertex();
  for (int e : s.edges) {
    const int a = local[static_cast<std::size_t>(g.iota(e))];
    const int b = local[static_cast<std::size_t>(g.tau(e))];
    if (a < 0 || b < 0) return false;
    t.add_edge(a, b);
  }
  return t.connected();
}

namespace {

Subgraph image(const GraphAut& a, const Subgraph& s) {
  Subgraph out;
  for (int v : s.vertices) out.vertices.push_back(a.vertex_map[static_cast<std::size_t>(v)]);
  for (int e : s.edges) out.edges.push_back(a.edge_map[static_cast<std::size_t>(e)]);
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

DoubleTree double_tree_decomposition(const Graph& g, const GraphAut& xi) {
  DoubleTree r;
  if (const auto p = automorphism_problem(g, xi); !p.empty()) {
    r.failure = "xi is not an automorphism: " + p;
    return r;
  }
  if (!(xi * xi).is_identity()) {
    r.failure = "xi is not an involution";
    return r;
  }
  if (!g.connected()) {
    r.failure = "graph is not connected";
    return r;
  }
  if (!flips_all_simple_loops(g, xi)) {
    r.failure = "xi does not reverse every simple loop";
    return r;
  }

  r.sub = subdivide_reversed_edges(g, xi);
  const Graph& x = r.sub.graph;
  const GraphAut& a = r.sub.xi;
  const auto nv = static_cast<std::size_t>(x.num_vertices());
  const auto ne = static_cast<std::size_t>(x.num_edges());

  std::vector<char> fixed_v(nv, 0), fixed_e(ne, 0);
  for (std::size_t v = 0; v < nv; ++v) fixed_v[v] = a.vertex_map[v] == static_cast<int>(v);
  for (std::size_t e = 0; e < ne; ++e) fixed_e[e] = a.edge_map[e] == static_cast<int>(e) && !a.flip[e];
  for (std::size_t v = 0; v < nv; ++v)
    if (fixed_v[v]) r.fixed.vertices.push_back(static_cast<int>(v));
  for (std::size_t e = 0; e < ne; ++e)
    if (fixed_e[e]) r.fixed.edges.push_back(static_cast<int>(e));

  // Components of X minus F: union-find over open cells, i.e. non-fixed
  // vertices (ids 0..nv-1) and non-fixed edges (ids nv..nv+ne-1).
  std::vector<int> parent(nv + ne);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int c) {
    while (parent[static_cast<std::size_t>(c)] != c) c = parent[static_cast<std::size_t>(c)];
    return c;
  };
  const auto unite = [&](int p, int q) {
    p = find(p);
    q = find(q);
    if (p != q) parent[static_cast<std::size_t>(std::max(p, q))] = std::min(p, q);
  };
  for (std::size_t e = 0; e < ne; ++e) {
    if (fixed_e[e]) continue;
    for (const int v : {x.iota(static_cast<int>(e)), x.tau(static_cast<int>(e))})
      if (!fixed_v[static_cast<std::size_t>(v)]) unite(static_cast<int>(nv + e), v);
  }
  const auto cell_image = [&](int c) {
    return c < static_cast<int>(nv) ? a.vertex_map[static_cast<std::size_t>(c)]
                                    : static_cast<int>(nv) + a.edge_map[static_cast<std::size_t>(c) - nv];
  };
  std::vector<char> open(nv + ne, 0);
  for (std::size_t v = 0; v < nv; ++v) open[v] = !fixed_v[v];
  for (std::size_t e = 0; e < ne; ++e) open[nv + e] = !fixed_e[e];

  // Components are labelled by their smallest cell (roots are minimal);
  // keep a component iff its label is smaller than its partner's.
  std::set<int> keep;
  for (std::size_t c = 0; c < nv + ne; ++c) {
    if (!open[c]) continue;
    const int root = find(static_cast<int>(c));
    const int partner = find(cell_image(root));
    if (root == partner) {
      r.failure = "a component of the complement of the fixed set is mapped to itself";
      return r;
    }
    if (root < partner) keep.insert(root);
  }

  r.d = r.fixed;
  for (std::size_t c = 0; c < nv + ne; ++c) {
    if (!open[c] || !keep.count(find(static_cast<int>(c)))) continue;
    if (c < nv) r.d.vertices.push_back(static_cast<int>(c));
    else r.d.edges.push_back(static_cast<int>(c - nv));
  }
  std::sort(r.d.vertices.begin(), r.d.vertices.end());
  std::sort(r.d.edges.begin(), r.d.edges.end());
  r.d_prime = image(a, r.d);

  r.d_is_tree = is_tree(x, r.d);
  const Subgraph both{set_union(r.d.vertices, r.d_prime.vertices), set_union(r.d.edges, r.d_prime.edges)};
  r.covers = both.vertices.size() == nv && both.edges.size() == ne;
  const Subgraph meet{set_intersection(r.d.vertices, r.d_prime.vertices), set_intersection(r.d.edges, r.d_prime.edges)};
  r.meets_in_fixed_set = meet == r.fixed;
  return r;
}

}  // namespace outfn
