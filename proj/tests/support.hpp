#pragma once

// Random generators and small independent oracles shared by the unit tests.

#include <random>
#include <vector>

#include "outfn/graph.hpp"
#include "outfn/matrix.hpp"
#include "outfn/word.hpp"

namespace outfn::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Unreduced letter sequence of the given length.
inline std::vector<int> random_letters(Rng& rng, int rank, int length) {
  std::vector<int> out;
  for (int k = 0; k < length; ++k) {
    const int i = uniform(rng, 1, rank);
    out.push_back(uniform(rng, 0, 1) ? i : -i);
  }
  return out;
}

inline Word random_word(Rng& rng, int rank, int max_length) {
  return Word::reduce(rank, random_letters(rng, rank, uniform(rng, 0, max_length)));
}

// Product of `length` random Nielsen generators rho, lambda, eps, sigma and
// their inverses.
inline Automorphism random_automorphism(Rng& rng, int n, int length) {
  Automorphism a = Automorphism::identity(n);
  for (int k = 0; k < length; ++k) {
    int i = uniform(rng, 1, n), j = uniform(rng, 1, n - 1);
    if (j >= i) ++j;
    Automorphism g = Automorphism::identity(n);
    switch (uniform(rng, 0, 3)) {
      case 0: g = rho(i, j, n); break;
      case 1: g = lambda(i, j, n); break;
      case 2: g = eps(i, n); break;
      default: g = sigma(std::min(i, j), std::max(i, j), n); break;
    }
    a = a * (uniform(rng, 0, 1) ? g : g.inverse());
  }
  return a;
}

inline RationalMatrix random_matrix(Rng& rng, int rows, int cols, int bound) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

// Random multigraph with loops and parallel edges allowed.
inline Graph random_graph(Rng& rng, int max_vertices, int max_edges) {
  Graph g;
  const int nv = uniform(rng, 1, max_vertices);
  for (int v = 0; v < nv; ++v) g.add_vertex();
  const int ne = uniform(rng, 0, max_edges);
  for (int e = 0; e < ne; ++e) g.add_edge(uniform(rng, 0, nv - 1), uniform(rng, 0, nv - 1));
  return g;
}

// Rank by textbook Gauss-Jordan elimination over Q.
inline int naive_rank(RationalMatrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      for (int k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

inline RationalMatrix naive_multiply(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      for (int k = 0; k < a.cols(); ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

// Number of connected components by union-find.
inline int count_components(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = static_cast<int>(v);
  const auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  int count = g.num_vertices();
  for (int e = 0; e < g.num_edges(); ++e) {
    const int a = find(g.iota(e)), b = find(g.tau(e));
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --count;
    }
  }
  return count;
}

}  // namespace outfn::testing
