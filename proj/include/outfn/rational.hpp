#pragma once

#include <string>

#include <gmpxx.h>

namespace outfn {

// Exact rationals; GMP keeps them canonical (lowest terms, positive
// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument on a zero
// denominator or malformed text.
Rational parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace outfn
