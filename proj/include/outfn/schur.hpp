#pragma once

// Second exterior and symmetric powers of a linear map.

#include <string>

#include "outfn/matrix.hpp"

namespace outfn {

enum class Mu { exterior, symmetric };  // (1,1) and (2)

// Accepts "1,1", "(1,1)", "2", "(2)".
Mu parse_mu(const std::string& text);
std::string to_string(Mu mu);

int schur_dimension(int d, Mu mu);

// Basis e_a∧e_b (a<b), resp. e_a·e_b (a<=b), in lexicographic order.
RationalMatrix schur_square(const RationalMatrix& m, Mu mu);

}  // namespace outfn
