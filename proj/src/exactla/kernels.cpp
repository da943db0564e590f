#include "outfn/kernels.hpp"

#include <omp.h>

#include <stdexcept>
#include <utility>

namespace outfn::kernels {

namespace {

void check_product_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
}

// c_row += a_row * b, skipping zero entries of a_row and b.
void multiply_row(const RationalMatrix& a, const RationalMatrix& b, int i, RationalMatrix& c) {
  mpq_class tmp;
  for (int k = 0; k < a.cols(); ++k) {
    const mpq_class& aik = a(i, k);
    if (sgn(aik) == 0) continue;
    for (int j = 0; j < b.cols(); ++j) {
      const mpq_class& bkj = b(k, j);
      if (sgn(bkj) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
      mpq_add(c(i, j).get_mpq_t(), c(i, j).get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

struct Work {
  int rows;
  int cols;
  std::vector<Integer> a;
  Integer& at(int r, int c) { return a[static_cast<std::size_t>(r * cols + c)]; }
  void swap_rows(int r, int s) {
    if (r == s) return;
    for (int c = 0; c < cols; ++c) std::swap(at(r, c), at(s, c));
  }
};

// Row with the smallest nonzero |entry| in column c among rows >= r, or -1.
int choose_pivot(Work& w, int r, int c) {
  int best = -1;
  for (int i = r; i < w.rows; ++i) {
    const Integer& v = w.at(i, c);
    if (sgn(v) == 0) continue;
    if (best < 0 || mpz_cmpabs(v.get_mpz_t(), w.at(best, c).get_mpz_t()) < 0) best = i;
  }
  return best;
}

// One Bareiss update of row i against pivot row r at column c.
void eliminate_row(Work& w, int r, int c, int i, const Integer& prev) {
  Integer t;
  const Integer& p = w.at(r, c);
  const Integer f = w.at(i, c);
  for (int j = c + 1; j < w.cols; ++j) {
    Integer& x = w.at(i, j);
    mpz_mul(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    mpz_mul(t.get_mpz_t(), f.get_mpz_t(), w.at(r, j).get_mpz_t());
    mpz_sub(x.get_mpz_t(), x.get_mpz_t(), t.get_mpz_t());
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
  }
  w.at(i, c) = 0;
}

template <bool Parallel>
Echelon run_echelon(const RationalMatrix& m) {
  Work w{m.rows(), m.cols(), integer_rows(m)};
  Echelon out;
  out.rows = w.rows;
  out.cols = w.cols;
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < w.cols && r < w.rows; ++c) {
    const int p = choose_pivot(w, r, c);
    if (p < 0) continue;
    w.swap_rows(r, p);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (int i = r + 1; i < w.rows; ++i) eliminate_row(w, r, c, i, prev);
    } else {
      for (int i = r + 1; i < w.rows; ++i) eliminate_row(w, r, c, i, prev);
    }
    prev = w.at(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.data = std::move(w.a);
  return out;
}

bool worth_parallel(long long work) {
  return work >= parallel_threshold && omp_get_max_threads() > 1;
}

}  // namespace

std::vector<Integer> integer_rows(const RationalMatrix& a) {
  std::vector<Integer> out(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
  for (int r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (const Rational& q : a.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (int c = 0; c < a.cols(); ++c) {
      const Rational& q = a(r, c);
      Integer& dst = out[static_cast<std::size_t>(r * a.cols() + c)];
      mpz_divexact(dst.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      dst *= q.get_num();
    }
  }
  return out;
}

namespace serial {

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  check_product_shape(a, b);
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) multiply_row(a, b, i, c);
  return c;
}

Echelon echelon(const RationalMatrix& a) { return run_echelon<false>(a); }

}  // namespace serial

namespace parallel {

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  check_product_shape(a, b);
  RationalMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < a.rows(); ++i) multiply_row(a, b, i, c);
  return c;
}

Echelon echelon(const RationalMatrix& a) { return run_echelon<true>(a); }

}  // namespace parallel

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const long long work = static_cast<long long>(a.rows()) * a.cols() * b.cols();
  return worth_parallel(work) && !omp_in_parallel() ? parallel::multiply(a, b) : serial::multiply(a, b);
}

Echelon echelon(const RationalMatrix& a) {
  const long long work = static_cast<long long>(a.rows()) * a.rows() * a.cols();
  return worth_parallel(work) && !omp_in_parallel() ? parallel::echelon(a) : serial::echelon(a);
}

}  // namespace outfn::kernels
