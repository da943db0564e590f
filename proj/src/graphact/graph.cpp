#include "outfn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace outfn {

int Graph::add_vertex(std::string name) {
  if (name.empty()) name = "v" + std::to_string(num_vertices());
  vertex_names_.push_back(std::move(name));
  return num_vertices() - 1;
}

int Graph::add_edge(int iota, int tau, std::string name) {
  if (iota < 0 || tau < 0 || iota >= num_vertices() || tau >= num_vertices()) {
    throw std::invalid_argument("edge endpoint is not a vertex");
  }
  if (name.empty()) name = "e" + std::to_string(num_edges());
  edge_names_.push_back(std::move(name));
  iota_.push_back(iota);
  tau_.push_back(tau);
  return num_edges() - 1;
}

int Graph::vertex_index(const std::string& name) const {
  const auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) throw std::invalid_argument("unknown vertex \"" + name + "\"");
  return static_cast<int>(it - vertex_names_.begin());
}

int Graph::edge_index(const std::string& name) const {
  const auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end()) throw std::invalid_argument("unknown edge \"" + name + "\"");
  return static_cast<int>(it - edge_names_.begin());
}

int Graph::valence(int v) const {
  int d = 0;
  for (int e = 0; e < num_edges(); ++e) d += (iota(e) == v) + (tau(e) == v);
  return d;
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> parent(static_cast<std::size_t>(num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (int e = 0; e < num_edges(); ++e) {
    const int a = find(iota(e));
    const int b = find(tau(e));
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> label(static_cast<std::size_t>(num_vertices()), -1);
  std::vector<int> root_label(static_cast<std::size_t>(num_vertices()), -1);
  int next = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    auto& r = root_label[static_cast<std::size_t>(find(v))];
    if (r < 0) r = next++;
    label[static_cast<std::size_t>(v)] = r;
  }
  return label;
}

int Graph::components() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

GraphAut GraphAut::identity(const Graph& g) {
  GraphAut a;
  a.vertex_map.resize(static_cast<std::size_t>(g.num_vertices()));
  a.edge_map.resize(static_cast<std::size_t>(g.num_edges()));
  std::iota(a.vertex_map.begin(), a.vertex_map.end(), 0);
  std::iota(a.edge_map.begin(), a.edge_map.end(), 0);
  a.flip.assign(static_cast<std::size_t>(g.num_edges()), 0);
  return a;
}

GraphAut GraphAut::inverse() const {
  GraphAut b = *this;
  for (std::size_t v = 0; v < vertex_map.size(); ++v) b.vertex_map[static_cast<std::size_t>(vertex_map[v])] = static_cast<int>(v);
  for (std::size_t e = 0; e < edge_map.size(); ++e) {
    b.edge_map[static_cast<std::size_t>(edge_map[e])] = static_cast<int>(e);
    b.flip[static_cast<std::size_t>(edge_map[e])] = flip[e];
  }
  return b;
}

bool GraphAut::is_identity() const {
  for (std::size_t v = 0; v < vertex_map.size(); ++v)
    if (vertex_map[v] != static_cast<int>(v)) return false;
  for (std::size_t e = 0; e < edge_map.size(); ++e)
    if (edge_map[e] != static_cast<int>(e) || flip[e]) return false;
  return true;
}

GraphAut operator*(const GraphAut& a, const GraphAut& b) {
  if (a.vertex_map.size() != b.vertex_map.size() || a.edge_map.size() != b.edge_map.size()) {
    throw std::invalid_argument("graph automorphisms of different graphs");
  }
  GraphAut c = b;
  for (auto& v : c.vertex_map) v = a.vertex_map[static_cast<std::size_t>(v)];
  for (std::size_t e = 0; e < b.edge_map.size(); ++e) {
    const auto be = static_cast<std::size_t>(b.edge_map[e]);
    c.edge_map[e] = a.edge_map[be];
    c.flip[e] = static_cast<char>(b.flip[e] != a.flip[be]);
  }
  return c;
}

namespace {

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace

std::string automorphism_problem(const Graph& g, const GraphAut& a) {
  if (static_cast<int>(a.vertex_map.size()) != g.num_vertices() || static_cast<int>(a.edge_map.size()) != g.num_edges() ||
      a.flip.size() != a.edge_map.size()) {
    return "map sizes do not match the graph";
  }
  if (!is_permutation(a.vertex_map)) return "vertex map is not a bijection";
  if (!is_permutation(a.edge_map)) return "edge map is not a bijection";
  for (int e = 0; e < g.num_edges(); ++e) {
    const int ge = a.edge_map[static_cast<std::size_t>(e)];
    int i = a.vertex_map[static_cast<std::size_t>(g.iota(e))];
    int t = a.vertex_map[static_cast<std::size_t>(g.tau(e))];
    if (a.flip[static_cast<std::size_t>(e)]) std::swap(i, t);
    if (g.iota(ge) != i || g.tau(ge) != t) return "edge " + g.edge_name(e) + " is not mapped compatibly";
  }
  return {};
}

GraphAut GraphAction::evaluate(const RelWord& w) const {
  std::vector<GraphAut> inverses;
  inverses.reserve(maps.size());
  for (const auto& m : maps) inverses.push_back(m.inverse());
  return evaluate_word(
      w, GraphAut::identity(graph), [&](int g) -> const GraphAut& { return maps.at(static_cast<std::size_t>(g)); },
      [&](int g) -> const GraphAut& { return inverses.at(static_cast<std::size_t>(g)); },
      [](const GraphAut& a, const GraphAut& b) { return a * b; });
}

std::vector<std::string> action_problems(const GraphAction& action) {
  std::vector<std::string> out;
  if (action.maps.size() != action.group.generators.size()) {
    out.push_back("expected one map per generator of " + action.group.name);
    return out;
  }
  for (std::size_t k = 0; k < action.maps.size(); ++k) {
    const auto p = automorphism_problem(action.graph, action.maps[k]);
    if (!p.empty()) out.push_back(action.group.generators[k] + ": " + p);
  }
  if (!out.empty()) return out;
  for (const auto& r : action.group.relations) {
    if (!action.evaluate(r).is_identity()) out.push_back("relation " + action.group.word_string(r) + " acts nontrivially");
  }
  return out;
}

void require_valid(const GraphAction& action) {
  const auto problems = action_problems(action);
  if (problems.empty()) return;
  std::string msg = "invalid action of " + action.group.name + ":";
  for (const auto& p : problems) msg += "\n  " + p;
  throw std::invalid_argument(msg);
}

std::vector<std::vector<int>> edge_orbits(const GraphAction& action) {
  const int n = action.graph.num_edges();
  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> orbits;
  for (int e = 0; e < n; ++e) {
    if (orbit_of[static_cast<std::size_t>(e)] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::vector<int> stack{e};
    orbit_of[static_cast<std::size_t>(e)] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      orbits.back().push_back(x);
      for (const auto& m : action.maps) {
        const int y = m.edge_map[static_cast<std::size_t>(x)];
        if (orbit_of[static_cast<std::size_t>(y)] < 0) {
          orbit_of[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(orbits.back().begin(), orbits.back().end());
  }
  return orbits;
}

}  // namespace outfn
