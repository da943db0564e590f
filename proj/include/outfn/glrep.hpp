#pragma once

// Representations of the stabilizer G < Aut(F_n) of the functional
// f = e_n^* on the homology of the double cover of the rose, and the
// representation of Out(F_n) induced from them.
//
// Basis of K = ker f (transversal {1, a_n}): x_i = a_i, y_i = a_n a_i a_n^{-1}
// for i < n, and z = a_n^2; as letters of F_{2n-1}, x_i is i, y_i is n-1+i
// and z is 2n-1.

#include <map>
#include <string>
#include <vector>

#include "outfn/abelian.hpp"
#include "outfn/gersten.hpp"
#include "outfn/matrix.hpp"
#include "outfn/schur.hpp"
#include "outfn/word.hpp"

namespace outfn {

Functional base_functional(int n);

// Parity of a_n in a(a_i) is 1 exactly for i = n.
bool stabilizes_f(const Automorphism& a);

// Definitions of the 2n-1 basis symbols as words in F_n.
std::vector<Word> schreier_definitions(int n);

// Word in the basis symbols equal to w. Throws std::domain_error if w ∉ K.
Word rewrite_in_K(const Word& w);

// Substitutes the definitions back; inverse of rewrite_in_K.
Word expand_from_K(const Word& k, int n);

// (2n-1)x(2n-1); column s is the exponent-sum vector of rewrite(a(def s)).
// Throws std::domain_error if a ∉ G.
RationalMatrix psi(const Automorphism& a);

// Swaps x_i and y_i, fixes z.
RationalMatrix tau_matrix(int n);

// psi(a) on the span of alpha_i = x_i - y_i, in the alpha basis.
RationalMatrix psi_prime(const Automorphism& a);

struct FormulaCase {
  std::string element;  // e.g. "rho_1_3 lambda_1_3^-1"
  bool match = false;
  std::string detail;   // expected and actual images on mismatch
};

struct FormulaFamily {
  std::string name;
  std::vector<FormulaCase> cases;
  int failures() const;
};

struct Section4Report {
  int n = 0;
  std::vector<FormulaFamily> families;
  int tau_plus_dim = 0;   // +1 eigenspace of tau
  int tau_minus_dim = 0;  // -1 eigenspace of tau
  bool psi_of_c_an_is_tau = false;
  bool all_pass() const;
};

// Partial conjugations, commutators [rho_ij, rho_ik], inner automorphisms,
// tau-commutation and tau's eigenspaces. Throws std::invalid_argument if n < 3.
Section4Report verify_section4_formulas(int n);

// t_s for every nonzero functional s, in increasing bitmask order. With p the
// smallest index where s is 1: t_s = sigma_{pn} (if s_n = 0) composed with the
// product of rho_in over i < n where the (swapped) functional is 1.
struct CosetTransversal {
  std::vector<Functional> cosets;
  std::vector<Automorphism> reps;
  int index_of(const Functional& s) const;
};
CosetTransversal coset_transversal(int n);

class InducedRep {
 public:
  // Throws std::invalid_argument for n < 3 and for mu = (1,1) at n = 3,
  // where the exterior square of V is one-dimensional and carries only the
  // determinant.
  InducedRep(int n, Mu mu);

  int n() const { return n_; }
  Mu mu() const { return mu_; }
  int block_dim() const { return block_; }
  int m() const { return static_cast<int>(transversal_.cosets.size()) * block_; }
  const CosetTransversal& transversal() const { return transversal_; }

  // theta(g): block (s, s') = S_mu(psi'(t_s^{-1} g t_{s'})) where s = g.s'.
  RationalMatrix theta(const Automorphism& g) const;
  RationalMatrix theta(const GenWord& w) const { return theta(evaluate(w, n_)); }

  // eps_i, rho_i_j, lambda_i_j for all indices, computed directly.
  std::map<std::string, RationalMatrix> generator_matrices() const;

 private:
  int n_;
  Mu mu_;
  int block_;
  CosetTransversal transversal_;
};

struct RelatorFailure {
  std::string family;
  std::string label;
};

struct RelatorReport {
  int checked = 0;
  std::vector<RelatorFailure> failures;
};

// Multiplies generator images along every Gersten relator.
RelatorReport check_relators(const InducedRep& rep);

struct Certificate {
  bool found = false;
  std::string element;  // word in Nielsen generators
  int power = 1;        // theta(g)^power is the unipotent witness
  bool in_ia = false;   // abelianizes to the identity
  bool nontrivial = false;
  bool unipotent = false;
  int nilpotency_index = 0;  // smallest k with (theta^power - I)^k = 0
  std::vector<std::string> tried;
};

// Searches partial conjugations, then commutators [rho_ij, rho_ik], for g
// with theta(g) != I unipotent; if none qualifies, repeats with theta(g)^2.
Certificate check_not_factoring(const InducedRep& rep);

}  // namespace outfn
