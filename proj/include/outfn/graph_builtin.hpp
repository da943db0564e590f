#pragma once

// Standard graphs and the group actions on them used throughout the checks.

#include <string>
#include <vector>

#include "outfn/graph.hpp"

namespace outfn::builtin {

Graph rose(int n);          // one vertex, n loops
Graph cage(int n);          // two vertices, n parallel edges
Graph daisy_chain(int k);   // k-cycle with every edge doubled
Graph barbell();            // two loops joined by a bridge
Graph cover_of_rose(int n); // connected double cover of rose(n)
Graph doubled_triangle();   // triangle A,B,C with the side AB doubled

bool is_rose_or_cage(const Graph& g);

// Edges permuted like points, no vertex moves, no flips (roses and cages).
GraphAut edge_permutation(const Graph& g, const Permutation& p);

// Swaps the two vertices of a cage, reversing every edge.
GraphAut vertex_swap(const Graph& cage);
// Reverses every loop of a rose.
GraphAut flip_all(const Graph& rose);
// Swaps the two strands of every doubled edge of a daisy chain.
GraphAut strand_swap(const Graph& daisy);
// Nontrivial deck transformation of cover_of_rose.
GraphAut deck_transformation(const Graph& cover);

GraphAction hyperoctahedral_on_rose(int n);  // W_n on rose(n)
GraphAction cage_group_on_cage(int n);       // G_n on cage(n+1)
GraphAction b_group_on_cage(int n);          // B_n on cage(n+1)
// S_k or A_k permuting the edges of rose(m) or cage(m) in m/k blocks of k.
GraphAction symmetric_on(const Graph& g, int k);
GraphAction alternating_on(const Graph& g, int k);
// Every generator of `group` acts trivially.
GraphAction trivial_action(const Graph& g, const GroupDescriptor& group);

// "rose:N", "cage:N", "cover:N", "daisy:K", "barbell", "triangle".
Graph graph_by_name(const std::string& spec);

// "W<n>", "G<n>", "B<n>", "S<k>", "A<k>", "Z2", "trivial", or any of these
// suffixed ":trivial" for the trivial action of that group.
GraphAction action_by_name(const std::string& graph_spec, const std::string& group_spec);

// "vertex-swap", "flip-all", "strand-swap", "deck" or "identity".
GraphAut involution_by_name(const std::string& graph_spec, const std::string& name);

}  // namespace outfn::builtin
