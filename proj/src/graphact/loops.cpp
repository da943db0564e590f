#include "outfn/loops.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

#include "outfn/homology.hpp"

namespace outfn {

int max_edges() {
  if (const char* env = std::getenv("OUTFN_MAX_EDGES")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 32;
}

void check_size(const Graph& g) {
  if (g.num_edges() > max_edges()) {
    throw std::length_error("graph has " + std::to_string(g.num_edges()) + " edges; the limit is " +
                            std::to_string(max_edges()) + " (set OUTFN_MAX_EDGES to raise it)");
  }
}

bool Loop::contains(int edge) const {
  return std::any_of(steps.begin(), steps.end(), [edge](const Step& s) { return s.edge == edge; });
}

RationalMatrix Loop::vector(int num_edges) const {
  RationalMatrix v(num_edges, 1);
  for (const auto& s : steps) v(s.edge, 0) += s.forward ? 1 : -1;
  return v;
}

namespace {

// Loops whose smallest edge is e0, traversed forward first.
void loops_from_root(const Graph& g, int e0, std::vector<Loop>& out) {
  if (g.is_loop(e0)) {
    out.push_back(Loop{{{e0, true}}});
    return;
  }
  const int start = g.iota(e0);
  std::vector<char> visited(static_cast<std::size_t>(g.num_vertices()), 0);
  visited[static_cast<std::size_t>(start)] = 1;
  visited[static_cast<std::size_t>(g.tau(e0))] = 1;
  std::vector<Step> path{{e0, true}};
  const auto dfs = [&](auto&& self, int at) -> void {
    for (int e = e0 + 1; e < g.num_edges(); ++e) {
      if (g.is_loop(e)) continue;
      for (const bool fwd : {true, false}) {
        if ((fwd ? g.iota(e) : g.tau(e)) != at) continue;
        const int next = fwd ? g.tau(e) : g.iota(e);
        path.push_back({e, fwd});
        if (next == start) {
          out.push_back(Loop{path});
        } else if (!visited[static_cast<std::size_t>(next)]) {
          visited[static_cast<std::size_t>(next)] = 1;
          self(self, next);
          visited[static_cast<std::size_t>(next)] = 0;
        }
        path.pop_back();
      }
    }
  };
  dfs(dfs, g.tau(e0));
}

}  // namespace

std::vector<Loop> simple_loops(const Graph& g) {
  check_size(g);
  const int n = g.num_edges();
  std::vector<std::vector<Loop>> per_root(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int e0 = 0; e0 < n; ++e0) loops_from_root(g, e0, per_root[static_cast<std::size_t>(e0)]);
  std::vector<Loop> out;
  for (auto& v : per_root) {
    std::sort(v.begin(), v.end(), [](const Loop& a, const Loop& b) {
      return std::lexicographical_compare(a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
                                          [](const Step& x, const Step& y) {
                                            return x.edge != y.edge ? x.edge < y.edge : x.forward > y.forward;
                                          });
    });
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::optional<int> min_loop_through_edge(const Graph& g, int e) {
  check_size(g);
  if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("no such edge");
  if (g.is_loop(e)) return 1;
  // Shortest path from tau(e) back to iota(e) avoiding e.
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::deque<int> queue{g.tau(e)};
  dist[static_cast<std::size_t>(g.tau(e))] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int f = 0; f < g.num_edges(); ++f) {
      if (f == e) continue;
      int w = -1;
      if (g.iota(f) == v) w = g.tau(f);
      else if (g.tau(f) == v) w = g.iota(f);
      if (w < 0 || dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  const int d = dist[static_cast<std::size_t>(g.iota(e))];
  if (d < 0) return std::nullopt;
  return d + 1;
}

bool flips_all_simple_loops(const Graph& g, const GraphAut& xi) {
  const auto problem = automorphism_problem(g, xi);
  if (!problem.empty()) throw std::invalid_argument("xi: " + problem);
  const RationalMatrix p = edge_action(xi);
  for (const auto& l : simple_loops(g)) {
    const RationalMatrix v = l.vector(g.num_edges());
    if (!(p * v == -v)) return false;
  }
  return true;
}

}  // namespace outfn
