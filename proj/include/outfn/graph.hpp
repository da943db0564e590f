#pragma once

// Finite multigraphs with oriented edges, graph automorphisms carrying
// orientation flips, and finite group actions by such automorphisms.

#include <string>
#include <vector>

#include "outfn/group.hpp"

namespace outfn {

class Graph {
 public:
  int add_vertex(std::string name = {});
  // Edge from `iota` to `tau`; loops and parallel edges are allowed.
  int add_edge(int iota, int tau, std::string name = {});

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_edges() const { return static_cast<int>(iota_.size()); }
  int iota(int e) const { return iota_.at(static_cast<std::size_t>(e)); }
  int tau(int e) const { return tau_.at(static_cast<std::size_t>(e)); }
  bool is_loop(int e) const { return iota(e) == tau(e); }
  const std::string& vertex_name(int v) const { return vertex_names_.at(static_cast<std::size_t>(v)); }
  const std::string& edge_name(int e) const { return edge_names_.at(static_cast<std::size_t>(e)); }
  // Throw std::invalid_argument for unknown names.
  int vertex_index(const std::string& name) const;
  int edge_index(const std::string& name) const;

  // A loop contributes 2.
  int valence(int v) const;
  // Component label per vertex, labels 0..count-1 in order of first vertex.
  std::vector<int> component_labels() const;
  int components() const;
  bool connected() const { return components() <= 1; }
  // Euler characteristic defect |E| - |V| + components.
  int rank() const { return num_edges() - num_vertices() + components(); }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<int> iota_;
  std::vector<int> tau_;
};

// flip[e] is set iff g reverses e: then iota(g.e) = g.tau(e) and
// tau(g.e) = g.iota(e).
struct GraphAut {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<char> flip;

  static GraphAut identity(const Graph& g);
  GraphAut inverse() const;
  bool is_identity() const;
  friend bool operator==(const GraphAut&, const GraphAut&) = default;
};

// a∘b: b first.
GraphAut operator*(const GraphAut& a, const GraphAut& b);

// Empty when `a` is an automorphism of `g`, else a description of the
// first incidence violation.
std::string automorphism_problem(const Graph& g, const GraphAut& a);

struct GraphAction {
  Graph graph;
  GroupDescriptor group;
  std::vector<GraphAut> maps;  // one per generator

  const GraphAut& operator[](const std::string& generator) const {
    return maps.at(static_cast<std::size_t>(group.index_of(generator)));
  }
  GraphAut evaluate(const RelWord& w) const;
};

// Non-automorphisms and relations that do not evaluate to the identity.
std::vector<std::string> action_problems(const GraphAction& action);
void require_valid(const GraphAction& action);

// Edge orbits, each sorted, ordered by smallest member.
std::vector<std::vector<int>> edge_orbits(const GraphAction& action);

}  // namespace outfn
