#include "outfn/schur.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace outfn {

Mu parse_mu(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') t += c;
  if (t == "1,1") return Mu::exterior;
  if (t == "2") return Mu::symmetric;
  throw std::invalid_argument("unsupported partition \"" + text + "\" (use 1,1 or 2)");
}

std::string to_string(Mu mu) { return mu == Mu::exterior ? "1,1" : "2"; }

int schur_dimension(int d, Mu mu) { return mu == Mu::exterior ? d * (d - 1) / 2 : d * (d + 1) / 2; }

namespace {

std::vector<std::pair<int, int>> pairs(int d, Mu mu) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < d; ++a)
    for (int b = mu == Mu::exterior ? a + 1 : a; b < d; ++b) out.emplace_back(a, b);
  return out;
}

}  // namespace

RationalMatrix schur_square(const RationalMatrix& m, Mu mu) {
  if (!m.square()) throw std::invalid_argument("schur_square: matrix must be square");
  const auto basis = pairs(m.rows(), mu);
  const int k = static_cast<int>(basis.size());
  RationalMatrix out(k, k);
  for (int col = 0; col < k; ++col) {
    const auto [a, b] = basis[static_cast<std::size_t>(col)];
    for (int row = 0; row < k; ++row) {
      const auto [c, d] = basis[static_cast<std::size_t>(row)];
      if (mu == Mu::exterior) {
        out(row, col) = m(c, a) * m(d, b) - m(d, a) * m(c, b);
      } else if (c == d) {
        out(row, col) = m(c, a) * m(c, b);
      } else {
        out(row, col) = m(c, a) * m(d, b) + m(d, a) * m(c, b);
      }
    }
  }
  return out;
}

}  // namespace outfn
