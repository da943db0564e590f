#include "outfn/rep_builtin.hpp"

#include <cstdio>
#include <stdexcept>

#include "outfn/abelian.hpp"
#include "outfn/schur.hpp"

namespace outfn::builtin {

namespace {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = static_cast<long>(m(r, c));
  return out;
}

// The automorphism a W_n or Out-fragment generator name refers to.
Automorphism automorphism_for(const std::string& name, int n) {
  int i = 0, j = 0;
  if (std::sscanf(name.c_str(), "eps_%d", &i) == 1) return eps(i, n);
  if (std::sscanf(name.c_str(), "sigma_%d_%d", &i, &j) == 2) return sigma(i, j, n);
  if (std::sscanf(name.c_str(), "rho_%d_%d", &i, &j) == 2) return rho(i, j, n);
  throw std::invalid_argument("no automorphism named " + name);
}

}  // namespace

FiniteRep signed_permutation_rep(int n) {
  FiniteRep r{groups::hyperoctahedral(n), n, {}};
  for (const auto& g : r.group.generators) r.matrices.push_back(to_rational(abelianize(automorphism_for(g, n))));
  return r;
}

FiniteRep doubled_permutation_rep(int n) {
  FiniteRep one = signed_permutation_rep(n);
  FiniteRep r{one.group, 2 * n, {}};
  for (const auto& m : one.matrices) r.matrices.push_back(direct_sum(m, m));
  return r;
}

FiniteRep abelianization_rep(int n) {
  FiniteRep r{groups::out_fragment(n), n, {}};
  for (const auto& g : r.group.generators) r.matrices.push_back(to_rational(abelianize(automorphism_for(g, n))));
  return r;
}

FiniteRep abelianization_square_rep(int n, bool exterior) {
  const Mu mu = exterior ? Mu::exterior : Mu::symmetric;
  FiniteRep base = abelianization_rep(n);
  FiniteRep r{base.group, schur_dimension(n, mu), {}};
  for (const auto& m : base.matrices) r.matrices.push_back(schur_square(m, mu));
  return r;
}

FiniteRep planted_rep(int n) {
  if (n < 3) throw std::invalid_argument("planted representation needs n >= 3");
  FiniteRep r = signed_permutation_rep(n);
  r.group.name += "+rho_1_2";
  r.group.generators.push_back("rho_1_2");
  RationalMatrix rho12 = RationalMatrix::identity(n);
  rho12(0, 2) = 1;
  r.matrices.push_back(rho12);
  return r;
}

FiniteRep rep_by_name(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("representation names look like perm:4");
  const std::string kind = spec.substr(0, colon);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) n = 0;
  } catch (const std::exception&) {
  }
  if (n < 1) throw std::invalid_argument("bad rank in \"" + spec + "\"");
  if (kind == "perm") return signed_permutation_rep(n);
  if (kind == "perm2") return doubled_permutation_rep(n);
  if (kind == "abel") return abelianization_rep(n);
  if (kind == "abel-ext2") return abelianization_square_rep(n, true);
  if (kind == "abel-sym2") return abelianization_square_rep(n, false);
  if (kind == "planted") return planted_rep(n);
  throw std::invalid_argument("unknown representation \"" + spec + "\"");
}

}  // namespace outfn::builtin
