#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "outfn/rational.hpp"

namespace outfn {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  RationalMatrix(int rows, int cols, std::initializer_list<long> row_major);

  static RationalMatrix identity(int n);
  static RationalMatrix zero(int rows, int cols) { return RationalMatrix(rows, cols); }
  // Column vector.
  static RationalMatrix column(std::span<const Rational> v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }
  std::span<Rational> row(int r) { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const Rational> row(int r) const {
    return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
  }
  std::vector<Rational> col(int c) const;

  RationalMatrix transpose() const;
  RationalMatrix columns(std::span<const int> which) const;
  RationalMatrix block(int r0, int c0, int rows, int cols) const;
  void set_block(int r0, int c0, const RationalMatrix& b);

  Rational trace() const;
  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  RationalMatrix pow(unsigned k) const;

  std::string str() const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// [a | b]
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
// [a ; b]
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace outfn
