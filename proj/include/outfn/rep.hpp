#pragma once

// Finite-dimensional rational representations of finitely presented finite
// groups, and the eigenspace decomposition under commuting involutions.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "outfn/group.hpp"
#include "outfn/matrix.hpp"
#include "outfn/subspace.hpp"

namespace outfn {

struct FiniteRep {
  GroupDescriptor group;
  int dim = 0;
  // One matrix per descriptor generator, same order as group.generators.
  std::vector<RationalMatrix> matrices;

  const RationalMatrix& operator[](const std::string& generator) const {
    return matrices.at(static_cast<std::size_t>(group.index_of(generator)));
  }
  bool has(const std::string& generator) const;

  // Image of a word in the generators.
  RationalMatrix evaluate(const RelWord& w) const;
};

// Every problem that keeps `rep` from being a representation of its group:
// missing or misshapen matrices, singular matrices, relations whose image is
// not the identity. Empty means the representation is valid.
std::vector<std::string> rep_problems(const FiniteRep& rep);

// Throws std::invalid_argument listing rep_problems() when there are any.
void require_valid(const FiniteRep& rep);

// Representation of `group` whose k-th generator acts as rep[names[k]].
FiniteRep pull_back(const FiniteRep& rep, const GroupDescriptor& group, const std::vector<std::string>& names);

RationalMatrix inverse(const RationalMatrix& m);

// Dimension of the subspace fixed by every generator, i.e. the multiplicity
// of the trivial representation.
int trivial_multiplicity(const FiniteRep& rep);

// Subsets I of {1..n} are bitmasks, bit j-1 set iff j ∈ I.
using Subset = std::uint32_t;

std::string subset_string(Subset s);

struct EpsDecomposition {
  int n = 0;
  int ambient = 0;
  // E_I for every I with E_I != 0.
  std::map<Subset, Subspace> spaces;

  int dim(Subset s) const;
  // dim V_i for i = 0..n.
  std::vector<int> layer_dims() const;
  int total_dim() const;
  // ⊕ E_J over the listed J.
  Subspace sum(const std::vector<Subset>& which) const;
};

// E_I = {v : M_j v = (-1)^{[j ∈ I]} v for all j}. Throws
// std::invalid_argument if some M_j is not an involution or two of them do
// not commute.
EpsDecomposition simultaneous_eigenspaces(const std::vector<RationalMatrix>& involutions);

// Decomposition under eps_1..eps_n of a representation whose group has those
// generators.
EpsDecomposition eps_decomposition(const FiniteRep& rep, int n);

// True iff rho·E_I ⊆ ⊕_{I△J ⊆ {i,j}} E_J for every I.
bool check_diamond(const RationalMatrix& rho, const EpsDecomposition& decomp, int i, int j);

struct DivisibilityReport {
  int n = 0;
  std::vector<int> layer_dims;
  // Layers i where binom(n,i) does not divide dim V_i.
  std::vector<int> violations;
  // Layers i where the E_I with |I| = i do not all have the same dimension.
  std::vector<int> uneven_layers;
  bool pass() const { return violations.empty() && uneven_layers.empty(); }
};

DivisibilityReport divisibility_check(const EpsDecomposition& decomp);

long long binomial(int n, int k);

}  // namespace outfn
