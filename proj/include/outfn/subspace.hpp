#pragma once

#include <optional>

#include "outfn/matrix.hpp"

namespace outfn {

int rank(const RationalMatrix& m);

// Some X with a X = b, or nothing when the system is inconsistent. Free
// variables are set to zero.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

// Linear subspace of Q^d, held as a matrix whose columns form a basis.
class Subspace {
 public:
  explicit Subspace(int ambient = 0);
  // Keeps an independent subset of the spanning columns.
  static Subspace span(const RationalMatrix& columns);
  static Subspace whole(int ambient) { return span(RationalMatrix::identity(ambient)); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const RationalMatrix& vectors) const;
  bool contains(const Subspace& other) const { return contains(other.basis_); }
  // Equality by mutual containment; bases are not canonical.
  friend bool operator==(const Subspace& a, const Subspace& b);

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  Subspace intersect(const Subspace& other) const;

  // Coordinates of the given vectors in this basis; throws std::domain_error
  // if a vector is outside the subspace.
  RationalMatrix coordinates(const RationalMatrix& vectors) const;

 private:
  int ambient_;
  RationalMatrix basis_;
};

// Exact nullspace {v : m v = 0}; basis vectors are primitive integer vectors.
Subspace kernel(const RationalMatrix& m);

}  // namespace outfn
