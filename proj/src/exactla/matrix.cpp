#include "outfn/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "outfn/kernels.hpp"

namespace outfn {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

RationalMatrix::RationalMatrix(int rows, int cols, std::initializer_list<long> row_major)
    : RationalMatrix(rows, cols) {
  if (row_major.size() != data_.size()) throw std::invalid_argument("initializer size mismatch");
  std::size_t k = 0;
  for (long v : row_major) data_[k++] = v;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::column(std::span<const Rational> v) {
  RationalMatrix m(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

std::vector<Rational> RationalMatrix::col(int c) const {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::columns(std::span<const int> which) const {
  RationalMatrix m(rows_, static_cast<int>(which.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < which.size(); ++k) m(r, static_cast<int>(k)) = (*this)(r, which[k]);
  return m;
}

RationalMatrix RationalMatrix::block(int r0, int c0, int rows, int cols) const {
  if (r0 < 0 || c0 < 0 || r0 + rows > rows_ || c0 + cols > cols_) {
    throw std::out_of_range("matrix block out of range");
  }
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void RationalMatrix::set_block(int r0, int c0, const RationalMatrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw std::out_of_range("matrix block out of range");
  }
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Rational RationalMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : data_)
    if (sgn(q) != 0) return false;
  return true;
}

bool RationalMatrix::is_identity() const {
  if (!square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t k = 0;
  for (const auto& q : data_) k += sgn(q) != 0;
  return k;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  return kernels::multiply(a, b);
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RationalMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  RationalMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix c = a;
  for (auto& q : c.data_) q = -q;
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c = a;
  for (auto& q : c.data_) q *= s;
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix RationalMatrix::pow(unsigned k) const {
  if (!square()) throw std::invalid_argument("power of a non-square matrix");
  RationalMatrix result = identity(rows_);
  RationalMatrix base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << '[';
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  RationalMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
  RationalMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

}  // namespace outfn
