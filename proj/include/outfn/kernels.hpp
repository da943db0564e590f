#pragma once

// Exact linear-algebra kernels.
//
// Each kernel exists twice: a serial reference and an OpenMP version that
// splits the independent inner loop (rows of a product, rows below a pivot)
// across threads. Both must produce identical results; the tests compare
// them entry by entry and the benchmark target times them against each other.

#include <vector>

#include "outfn/matrix.hpp"

namespace outfn::kernels {

// Integer matrix produced by fraction-free elimination.
struct Echelon {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> data;     // row-major, rows x cols
  std::vector<int> pivot_cols;   // pivot column of row r, for r < rank
  int rank() const { return static_cast<int>(pivot_cols.size()); }
  const Integer& at(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
};

namespace serial {
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
Echelon echelon(const RationalMatrix& a);
}  // namespace serial

namespace parallel {
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
Echelon echelon(const RationalMatrix& a);
}  // namespace parallel

// Rows are scaled by the lcm of their denominators, so the integer matrix
// has the same row space as the input.
std::vector<Integer> integer_rows(const RationalMatrix& a);

// Below this many scalar multiply-adds the dispatching entry points stay
// serial; thread start-up costs more than it saves on tiny matrices.
inline constexpr long long parallel_threshold = 4096;

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
Echelon echelon(const RationalMatrix& a);

}  // namespace outfn::kernels
