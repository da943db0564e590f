#pragma once

// Action of automorphisms on the abelianization Z^n and on mod-2
// functionals F_n -> Z_2.

#include <cstdint>
#include <vector>

#include "outfn/word.hpp"

namespace outfn {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  long long operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Bareiss elimination; exact for the small matrices produced here.
  long long determinant() const;

 private:
  int rows_;
  int cols_;
  std::vector<long long> data_;
};

// Exponent-sum vector of a word.
std::vector<long long> exponent_sums(const Word& w);

// Column i is the exponent-sum vector of a(a_i), so that
// abelianize(f∘g) = abelianize(f) * abelianize(g).
IntMatrix abelianize(const Automorphism& a);

// Same convention over Z_2; column i is a bitmask (bit k-1 <-> a_k).
std::vector<std::uint32_t> abelianize_mod2(const Automorphism& a);

// Nonzero homomorphism F_n -> Z_2, stored as the bitmask of generators
// mapped to 1 (bit i-1 <-> a_i).
struct Functional {
  int rank = 1;
  std::uint32_t bits = 0;

  static Functional coordinate(int rank, int i) { return {rank, 1u << (i - 1)}; }
  bool value(int i) const { return (bits >> (i - 1)) & 1u; }
  friend bool operator==(const Functional&, const Functional&) = default;
};

// The left action s -> s∘ab(a^{-1}). Throws std::invalid_argument on a zero
// functional.
Functional act_on_functional(const Automorphism& a, const Functional& s);

// Parity of s on a word.
bool evaluate(const Functional& s, const Word& w);

}  // namespace outfn
