#include "outfn/abelian.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace outfn {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const long long aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

long long IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<long long> exponent_sums(const Word& w) {
  std::vector<long long> v(static_cast<std::size_t>(w.rank()), 0);
  for (int l : w.letters()) v[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  return v;
}

IntMatrix abelianize(const Automorphism& a) {
  const int n = a.rank();
  IntMatrix m(n, n);
  for (int i = 1; i <= n; ++i) {
    const auto col = exponent_sums(a.forward().image(i));
    for (int r = 0; r < n; ++r) m(r, i - 1) = col[static_cast<std::size_t>(r)];
  }
  return m;
}

std::vector<std::uint32_t> abelianize_mod2(const Automorphism& a) {
  const int n = a.rank();
  std::vector<std::uint32_t> cols;
  for (int i = 1; i <= n; ++i) {
    std::uint32_t bits = 0;
    for (int l : a.forward().image(i).letters()) bits ^= 1u << (std::abs(l) - 1);
    cols.push_back(bits);
  }
  return cols;
}

bool evaluate(const Functional& s, const Word& w) {
  check_rank(s.rank, w.rank(), "functional");
  bool parity = false;
  for (int l : w.letters()) parity ^= s.value(std::abs(l));
  return parity;
}

Functional act_on_functional(const Automorphism& a, const Functional& s) {
  check_rank(a.rank(), s.rank, "act_on_functional");
  if (s.bits == 0) throw std::invalid_argument("act_on_functional: zero functional");
  Functional out{s.rank, 0};
  for (int k = 1; k <= s.rank; ++k) {
    if (evaluate(s, a.backward().image(k))) out.bits |= 1u << (k - 1);
  }
  return out;
}

}  // namespace outfn
