#pragma once

// Characters of the named S_n representations and multiplicities of them in
// a given rational representation of S_n.

#include <string>
#include <vector>

#include "outfn/group.hpp"
#include "outfn/rational.hpp"
#include "outfn/rep.hpp"

namespace outfn {

// Nonincreasing positive parts.
using Partition = std::vector<int>;

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

// Throws std::invalid_argument unless `p` is a partition of n.
void check_partition(const Partition& p, int n);

// n! / prod_k (k^{m_k} m_k!).
Integer class_size(const Partition& p, int n);

// Word in s_1..s_{n-1} for a permutation of the given cycle type, built from
// contiguous blocks: the cycle (a a+1 ... a+k-1) is s_a s_{a+1} ... s_{a+k-2}.
RelWord class_representative(const Partition& p, int n);

enum class NamedRep { trivial, determinant, standard, permutation, signed_standard };

inline constexpr NamedRep all_named_reps[] = {NamedRep::trivial, NamedRep::determinant, NamedRep::standard,
                                              NamedRep::permutation, NamedRep::signed_standard};

std::string to_string(NamedRep r);
NamedRep parse_named_rep(const std::string& name);
int named_dimension(NamedRep r, int n);

Rational named_character(NamedRep r, int n, const Partition& cycle_type);

// <χ_rep, χ_named> for a representation of S_n on s_1..s_{n-1}. Throws
// std::domain_error if the inner product is not a nonnegative integer.
long long multiplicity(const FiniteRep& rep, NamedRep r, int n);

// Permutation representation of S_n on Q^n, s_i swapping coordinates i, i+1.
FiniteRep permutation_rep(int n);

// S_n acting on the cycle space of the n-cage: the sum-zero vectors of Q^n.
FiniteRep cage_standard_rep(int n);

struct BranchingResult {
  int n = 0;
  // Multiplicities in the restriction of the standard S_{n+1} representation.
  std::vector<std::pair<NamedRep, long long>> multiplicities;
  bool pass = false;
};

// Restricts the standard representation of S_{n+1} (on the (n+1)-cage) to
// the stabilizer S_n of the last point and expects standard ⊕ trivial. At
// n = 3 the signed standard representation is isomorphic to the standard one,
// so it is expected once there as well.
BranchingResult branching_check(int n);

}  // namespace outfn
