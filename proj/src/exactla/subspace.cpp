#include "outfn/subspace.hpp"

#include <stdexcept>

#include "outfn/kernels.hpp"

namespace outfn {

namespace {

// Scale a rational vector to a primitive integer vector with the same span.
void make_primitive(std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  for (auto& q : v) {
    q *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& q : v) q /= g;
}

// Back substitution on an echelon form: x with U x = 0 restricted to the
// first `ncols` columns, given fixed values for the free columns.
std::vector<Rational> back_substitute(const kernels::Echelon& e, int ncols, std::vector<Rational> x) {
  for (int r = e.rank() - 1; r >= 0; --r) {
    const int p = e.pivot_cols[static_cast<std::size_t>(r)];
    Rational s = 0;
    for (int j = p + 1; j < e.cols; ++j) {
      if (sgn(e.at(r, j)) == 0) continue;
      s += Rational(e.at(r, j)) * x[static_cast<std::size_t>(j)];
    }
    x[static_cast<std::size_t>(p)] = -s / Rational(e.at(r, p));
  }
  x.resize(static_cast<std::size_t>(ncols));
  return x;
}

}  // namespace

int rank(const RationalMatrix& m) { return kernels::echelon(m).rank(); }

Subspace kernel(const RationalMatrix& m) {
  const auto e = kernels::echelon(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int p : e.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = 1;
  RationalMatrix basis(m.cols(), m.cols() - e.rank());
  int k = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> x(static_cast<std::size_t>(m.cols()));
    x[static_cast<std::size_t>(f)] = 1;
    x = back_substitute(e, m.cols(), std::move(x));
    make_primitive(x);
    for (int r = 0; r < m.cols(); ++r) basis(r, k) = x[static_cast<std::size_t>(r)];
    ++k;
  }
  return Subspace::span(basis);
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const auto e = kernels::echelon(hstack(a, b));
  for (int p : e.pivot_cols)
    if (p >= a.cols()) return std::nullopt;
  RationalMatrix x(a.cols(), b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    // Column a.cols()+c of the augmented system plays the role of -1 * rhs.
    std::vector<Rational> v(static_cast<std::size_t>(e.cols));
    v[static_cast<std::size_t>(a.cols() + c)] = -1;
    v = back_substitute(e, a.cols(), std::move(v));
    for (int r = 0; r < a.cols(); ++r) x(r, c) = v[static_cast<std::size_t>(r)];
  }
  return x;
}

Subspace::Subspace(int ambient) : ambient_(ambient), basis_(ambient, 0) {}

Subspace Subspace::span(const RationalMatrix& columns) {
  Subspace s(columns.rows());
  if (columns.cols() == 0) return s;
  // Pivot columns of an echelon form index an independent spanning subset.
  const auto e = kernels::echelon(columns);
  s.basis_ = columns.columns(e.pivot_cols);
  return s;
}

bool Subspace::contains(const RationalMatrix& vectors) const {
  if (vectors.rows() != ambient_) throw std::invalid_argument("subspace containment: dimension mismatch");
  if (vectors.cols() == 0) return true;
  if (dim() == 0) return vectors.is_zero();
  return rank(hstack(basis_, vectors)) == dim();
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace sum: dimension mismatch");
  return Subspace::span(hstack(a.basis_, b.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace intersection: dimension mismatch");
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
  // A c1 = B c2  <=>  [A | -B] (c1; c2) = 0.
  const Subspace k = kernel(hstack(basis_, -other.basis_));
  if (k.dim() == 0) return Subspace(ambient_);
  return span(basis_ * k.basis().block(0, 0, dim(), k.dim()));
}

RationalMatrix Subspace::coordinates(const RationalMatrix& vectors) const {
  auto x = solve(basis_, vectors);
  if (!x) throw std::domain_error("vector outside the subspace");
  return *x;
}

}  // namespace outfn
