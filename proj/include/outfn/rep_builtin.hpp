#pragma once

// Named W_n representations used by `decompose` and the tests.

#include <string>

#include "outfn/rep.hpp"

namespace outfn::builtin {

// Signed permutation matrices of W_n on Q^n.
FiniteRep signed_permutation_rep(int n);
// Two copies of signed_permutation_rep.
FiniteRep doubled_permutation_rep(int n);
// eps_i, sigma_i_{i+1} and every rho_i_j acting through the abelianization.
FiniteRep abelianization_rep(int n);
// Second exterior / symmetric power of abelianization_rep.
FiniteRep abelianization_square_rep(int n, bool exterior);
// signed_permutation_rep plus a generator rho_1_2 = I + E_13 that carries
// E_{3} into E_{1}. Needs n >= 3.
FiniteRep planted_rep(int n);

// "perm:N", "perm2:N", "abel:N", "abel-ext2:N", "abel-sym2:N", "planted:N".
FiniteRep rep_by_name(const std::string& spec);

}  // namespace outfn::builtin
