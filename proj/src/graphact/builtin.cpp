#include "outfn/graph_builtin.hpp"

#include <stdexcept>

namespace outfn::builtin {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int parse_size(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad size in \"" + spec + "\"");
}

}  // namespace

Graph rose(int n) {
  require(n >= 1, "rose needs at least one petal");
  Graph g;
  const int v = g.add_vertex("v");
  for (int i = 1; i <= n; ++i) g.add_edge(v, v, "p" + std::to_string(i));
  return g;
}

Graph cage(int n) {
  require(n >= 1, "cage needs at least one edge");
  Graph g;
  const int a = g.add_vertex("v0");
  const int b = g.add_vertex("v1");
  for (int i = 1; i <= n; ++i) g.add_edge(a, b, "c" + std::to_string(i));
  return g;
}

Graph daisy_chain(int k) {
  require(k >= 2, "daisy chain needs at least two vertices");
  Graph g;
  for (int i = 0; i < k; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    g.add_edge(i, j, "a" + std::to_string(i));
    g.add_edge(i, j, "b" + std::to_string(i));
  }
  return g;
}

Graph barbell() {
  Graph g;
  const int a = g.add_vertex("v0");
  const int b = g.add_vertex("v1");
  g.add_edge(a, a, "l0");
  g.add_edge(a, b, "bridge");
  g.add_edge(b, b, "l1");
  return g;
}

Graph cover_of_rose(int n) {
  require(n >= 1, "cover_of_rose needs n >= 1");
  Graph g;
  const int a = g.add_vertex("v0");
  const int b = g.add_vertex("v1");
  for (int i = 1; i < n; ++i) g.add_edge(a, a, "x" + std::to_string(i));
  for (int i = 1; i < n; ++i) g.add_edge(b, b, "y" + std::to_string(i));
  g.add_edge(a, b, "z0");
  g.add_edge(b, a, "z1");
  return g;
}

Graph doubled_triangle() {
  Graph g;
  const int a = g.add_vertex("A");
  const int b = g.add_vertex("B");
  const int c = g.add_vertex("C");
  g.add_edge(a, b, "ab1");
  g.add_edge(a, b, "ab2");
  g.add_edge(b, c, "bc");
  g.add_edge(c, a, "ca");
  return g;
}

GraphAut edge_permutation(const Graph& g, const Permutation& p) {
  require(p.size() == g.num_edges(), "permutation size differs from the edge count");
  GraphAut a = GraphAut::identity(g);
  a.edge_map = p.image;
  return a;
}

GraphAut vertex_swap(const Graph& cage) {
  require(cage.num_vertices() == 2, "vertex swap needs two vertices");
  GraphAut a = GraphAut::identity(cage);
  a.vertex_map = {1, 0};
  a.flip.assign(a.flip.size(), 1);
  return a;
}

GraphAut flip_all(const Graph& rose) {
  GraphAut a = GraphAut::identity(rose);
  a.flip.assign(a.flip.size(), 1);
  return a;
}

GraphAut strand_swap(const Graph& daisy) {
  require(daisy.num_edges() % 2 == 0, "strand swap needs doubled edges");
  GraphAut a = GraphAut::identity(daisy);
  for (int e = 0; e < daisy.num_edges(); ++e) a.edge_map[static_cast<std::size_t>(e)] = e ^ 1;
  return a;
}

GraphAut deck_transformation(const Graph& cover) {
  const int m = (cover.num_edges() - 2) / 2;
  GraphAut a = GraphAut::identity(cover);
  a.vertex_map = {1, 0};
  for (int i = 0; i < m; ++i) {
    a.edge_map[static_cast<std::size_t>(i)] = m + i;
    a.edge_map[static_cast<std::size_t>(m + i)] = i;
  }
  a.edge_map[static_cast<std::size_t>(2 * m)] = 2 * m + 1;
  a.edge_map[static_cast<std::size_t>(2 * m + 1)] = 2 * m;
  return a;
}

GraphAction hyperoctahedral_on_rose(int n) {
  GraphAction act{rose(n), groups::hyperoctahedral(n), {}};
  for (int i = 0; i < n; ++i) {
    GraphAut a = GraphAut::identity(act.graph);
    a.flip[static_cast<std::size_t>(i)] = 1;
    act.maps.push_back(a);
  }
  for (int i = 0; i + 1 < n; ++i) act.maps.push_back(edge_permutation(act.graph, Permutation::transposition(n, i, i + 1)));
  return act;
}

GraphAction cage_group_on_cage(int n) {
  GraphAction act{cage(n + 1), groups::cage_group(n), {}};
  act.maps.push_back(vertex_swap(act.graph));
  for (int i = 0; i < n; ++i) act.maps.push_back(edge_permutation(act.graph, Permutation::transposition(n + 1, i, i + 1)));
  return act;
}

GraphAction b_group_on_cage(int n) {
  GraphAction act{cage(n + 1), groups::b_group(n), {}};
  for (const auto& p : groups::alternating_generators(n + 1)) act.maps.push_back(edge_permutation(act.graph, p));
  GraphAut xi = vertex_swap(act.graph);
  if (n % 2 == 1) xi = xi * edge_permutation(act.graph, Permutation::transposition(n + 1, 0, 1));
  act.maps.push_back(xi);
  return act;
}

namespace {

// Block action: point p of block b moves edge b*k + p.
GraphAction blockwise(const Graph& g, GroupDescriptor group, const std::vector<Permutation>& gens, int k) {
  require(is_rose_or_cage(g), "permutation actions are defined on roses and cages");
  require(k >= 1 && g.num_edges() % k == 0, "edge count must be a multiple of the degree");
  GraphAction act{g, std::move(group), {}};
  for (const auto& p : gens) {
    Permutation big = Permutation::identity(g.num_edges());
    for (int b = 0; b < g.num_edges() / k; ++b)
      for (int i = 0; i < k; ++i) big.image[static_cast<std::size_t>(b * k + i)] = b * k + p(i);
    act.maps.push_back(edge_permutation(g, big));
  }
  return act;
}

}  // namespace

bool is_rose_or_cage(const Graph& g) {
  if (g.num_vertices() == 1) return true;
  if (g.num_vertices() != 2) return false;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) return false;
  return true;
}

GraphAction symmetric_on(const Graph& g, int k) {
  return blockwise(g, groups::symmetric(k), groups::symmetric_generators(k), k);
}

GraphAction alternating_on(const Graph& g, int k) {
  return blockwise(g, groups::alternating(k), groups::alternating_generators(k), k);
}

GraphAction trivial_action(const Graph& g, const GroupDescriptor& group) {
  GraphAction act{g, group, {}};
  act.maps.assign(group.generators.size(), GraphAut::identity(g));
  return act;
}

Graph graph_by_name(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (colon == std::string::npos) {
    if (kind == "barbell") return barbell();
    if (kind == "triangle") return doubled_triangle();
    throw std::invalid_argument("unknown graph \"" + spec + "\"");
  }
  const int n = parse_size(spec.substr(colon + 1), spec);
  if (kind == "rose") return rose(n);
  if (kind == "cage") return cage(n);
  if (kind == "cover") return cover_of_rose(n);
  if (kind == "daisy") return daisy_chain(n);
  throw std::invalid_argument("unknown graph \"" + spec + "\"");
}

GraphAction action_by_name(const std::string& graph_spec, const std::string& group_spec) {
  const Graph g = graph_by_name(graph_spec);
  if (const auto colon = group_spec.find(':'); colon != std::string::npos) {
    require(group_spec.substr(colon + 1) == "trivial", "unknown action modifier in \"" + group_spec + "\"");
    return trivial_action(g, groups::by_name(group_spec.substr(0, colon)));
  }
  if (group_spec == "trivial") return trivial_action(g, groups::trivial());
  const bool rose_like = g.num_vertices() == 1 && is_rose_or_cage(g);
  const bool cage_like = g.num_vertices() == 2 && is_rose_or_cage(g);
  if (group_spec == "Z2") {
    GraphAction act{g, groups::cyclic(2), {}};
    const std::string kind = graph_spec.substr(0, graph_spec.find(':'));
    if (kind == "daisy") act.maps.push_back(strand_swap(g));
    else if (kind == "cover") act.maps.push_back(deck_transformation(g));
    else if (kind == "barbell") {
      GraphAut a = GraphAut::identity(g);
      a.vertex_map = {1, 0};
      a.edge_map = {2, 1, 0};
      a.flip = {0, 1, 0};
      act.maps.push_back(a);
    } else if (rose_like) act.maps.push_back(flip_all(g));
    else if (cage_like) act.maps.push_back(vertex_swap(g));
    else throw std::invalid_argument("no Z2 action on \"" + graph_spec + "\"");
    return act;
  }
  const GroupDescriptor group = groups::by_name(group_spec);
  const int n = parse_size(group_spec.substr(1), group_spec);
  switch (group_spec[0]) {
    case 'W':
      require(rose_like && g.num_edges() == n, group_spec + " acts on rose:" + std::to_string(n));
      return hyperoctahedral_on_rose(n);
    case 'G':
      require(cage_like && g.num_edges() == n + 1, group_spec + " acts on cage:" + std::to_string(n + 1));
      return cage_group_on_cage(n);
    case 'B':
      require(cage_like && g.num_edges() == n + 1, group_spec + " acts on cage:" + std::to_string(n + 1));
      return b_group_on_cage(n);
    case 'S': return symmetric_on(g, n);
    case 'A': return alternating_on(g, n);
    default: break;
  }
  throw std::invalid_argument("no builtin action of " + group.name + " on \"" + graph_spec + "\"");
}

GraphAut involution_by_name(const std::string& graph_spec, const std::string& name) {
  const Graph g = graph_by_name(graph_spec);
  if (name == "vertex-swap") return vertex_swap(g);
  if (name == "flip-all") return flip_all(g);
  if (name == "strand-swap") return strand_swap(g);
  if (name == "deck") return deck_transformation(g);
  if (name == "identity") return GraphAut::identity(g);
  throw std::invalid_argument("unknown involution \"" + name + "\"");
}

}  // namespace outfn::builtin
