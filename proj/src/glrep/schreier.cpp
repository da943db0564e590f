#include <stdexcept>

#include "outfn/glrep.hpp"

namespace outfn {

Functional base_functional(int n) { return Functional::coordinate(n, n); }

bool stabilizes_f(const Automorphism& a) {
  const int n = a.rank();
  for (int i = 1; i <= n; ++i) {
    int parity = 0;
    for (int l : a.forward().image(i).letters()) parity ^= (l == n || l == -n);
    if (parity != (i == n)) return false;
  }
  return true;
}

std::vector<Word> schreier_definitions(int n) {
  std::vector<Word> defs;
  for (int i = 1; i < n; ++i) defs.push_back(Word::generator(n, i));
  for (int i = 1; i < n; ++i) defs.push_back(Word::reduce(n, {n, i, -n}));
  defs.push_back(Word::reduce(n, {n, n}));
  return defs;
}

Word rewrite_in_K(const Word& w) {
  const int n = w.rank();
  const int z = 2 * n - 1;
  std::vector<int> out;
  bool shifted = false;  // current coset is a_n K
  for (int l : w.letters()) {
    const int i = l > 0 ? l : -l;
    const int sign = l > 0 ? 1 : -1;
    if (i != n) {
      out.push_back(sign * (shifted ? n - 1 + i : i));
      continue;
    }
    if (sign > 0 && shifted) out.push_back(z);
    if (sign < 0 && !shifted) out.push_back(-z);
    shifted = !shifted;
  }
  if (shifted) throw std::domain_error("word is not in the kernel of f");
  return Word::reduce(z, out);
}

Word expand_from_K(const Word& k, int n) {
  if (k.rank() != 2 * n - 1) throw RankError("expand_from_K: symbol word has the wrong rank");
  const auto defs = schreier_definitions(n);
  return substitute(defs, k);
}

}  // namespace outfn
