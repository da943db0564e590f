#include <stdexcept>

#include "outfn/glrep.hpp"
#include "outfn/subspace.hpp"

namespace outfn {

RationalMatrix psi(const Automorphism& a) {
  if (!stabilizes_f(a)) throw std::domain_error("automorphism does not fix the base functional");
  const int n = a.rank();
  const auto defs = schreier_definitions(n);
  const int d = 2 * n - 1;
  RationalMatrix m(d, d);
  for (int s = 0; s < d; ++s) {
    const auto sums = exponent_sums(rewrite_in_K(a.apply(defs[static_cast<std::size_t>(s)])));
    for (int r = 0; r < d; ++r) m(r, s) = static_cast<long>(sums[static_cast<std::size_t>(r)]);
  }
  return m;
}

RationalMatrix tau_matrix(int n) {
  const int d = 2 * n - 1;
  RationalMatrix t(d, d);
  for (int i = 0; i + 1 < n; ++i) {
    t(n - 1 + i, i) = 1;
    t(i, n - 1 + i) = 1;
  }
  t(d - 1, d - 1) = 1;
  return t;
}

RationalMatrix psi_prime(const Automorphism& a) {
  const RationalMatrix p = psi(a);
  const int k = a.rank() - 1;
  RationalMatrix out(k, k);
  for (int i = 0; i < k; ++i) {
    // psi(alpha_i) = sum_l c_l alpha_l = sum_l c_l x_l - c_l y_l.
    for (int l = 0; l < k; ++l) {
      const Rational c = p(l, i) - p(l, k + i);
      if (p(k + l, i) - p(k + l, k + i) != -c) throw std::logic_error("psi does not preserve the alpha span");
      out(l, i) = c;
    }
    if (p(2 * k, i) != p(2 * k, k + i)) throw std::logic_error("psi does not preserve the alpha span");
  }
  return out;
}

int FormulaFamily::failures() const {
  int f = 0;
  for (const auto& c : cases) f += !c.match;
  return f;
}

bool Section4Report::all_pass() const {
  for (const auto& f : families)
    if (f.failures()) return false;
  return tau_plus_dim == n && tau_minus_dim == n - 1 && psi_of_c_an_is_tau;
}

namespace {

FormulaCase compare(std::string element, const RationalMatrix& expected, const RationalMatrix& actual) {
  FormulaCase c{std::move(element), expected == actual, {}};
  if (!c.match) c.detail = "expected " + expected.str() + ", got " + actual.str();
  return c;
}

std::string name(const char* kind, int i, int j) {
  return std::string(kind) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

Section4Report verify_section4_formulas(int n) {
  if (n < 3) throw std::invalid_argument("section 4 formulas need n >= 3");
  Section4Report r;
  r.n = n;
  const int k = n - 1;
  const auto id = RationalMatrix::identity(k);

  // psi(rho_ij lambda_ij^{-1})(alpha_l): -alpha_i if j = n and l = i,
  // alpha_l otherwise.
  FormulaFamily partial{"partial conjugations rho_ij lambda_ij^-1", {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      RationalMatrix expected = id;
      if (j == n) expected(i - 1, i - 1) = -1;
      partial.cases.push_back(compare(name("rho", i, j) + " " + name("lambda", i, j) + "^-1", expected,
                                      psi_prime(rho(i, j, n) * lambda(i, j, n).inverse())));
    }
  r.families.push_back(std::move(partial));

  // psi([rho_ij, rho_ik])(alpha_l): alpha_i - 2 alpha_k if j = n and l = i,
  // alpha_i + 2 alpha_j if k = n and l = i, alpha_l otherwise.
  FormulaFamily comm{"commutators [rho_ij, rho_ik]", {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int kk = 1; kk <= n; ++kk) {
        if (i == j || i == kk || j == kk) continue;
        RationalMatrix expected = id;
        if (j == n) expected(kk - 1, i - 1) = -2;
        if (kk == n) expected(j - 1, i - 1) = 2;
        comm.cases.push_back(compare("[" + name("rho", i, j) + ", " + name("rho", i, kk) + "]", expected,
                                     psi_prime(commutator(rho(i, j, n), rho(i, kk, n)))));
      }
  r.families.push_back(std::move(comm));

  // psi'(c_{a_i}) = I for i != n and -I for i = n.
  FormulaFamily inner_family{"inner automorphisms c_{a_i}", {}};
  for (int i = 1; i <= n; ++i) {
    inner_family.cases.push_back(compare("c_a" + std::to_string(i), i == n ? -id : id,
                                         psi_prime(inner(Word::generator(n, i)))));
  }
  r.families.push_back(std::move(inner_family));

  // psi commutes with tau on every element tested above and on the Nielsen
  // generators that lie in G.
  const RationalMatrix t = tau_matrix(n);
  FormulaFamily commute{"psi(g) commutes with tau", {}};
  std::vector<std::pair<std::string, Automorphism>> sample;
  for (int i = 1; i <= n; ++i) {
    sample.emplace_back("eps_" + std::to_string(i), eps(i, n));
    sample.emplace_back("c_a" + std::to_string(i), inner(Word::generator(n, i)));
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (j != n) sample.emplace_back(name("rho", i, j), rho(i, j, n));
      if (j != n) sample.emplace_back(name("lambda", i, j), lambda(i, j, n));
      if (i < j && i != n && j != n) sample.emplace_back(name("sigma", i, j), sigma(i, j, n));
      sample.emplace_back(name("rho", i, j) + " " + name("lambda", i, j) + "^-1", rho(i, j, n) * lambda(i, j, n).inverse());
    }
  }
  for (const auto& [label, a] : sample) {
    const RationalMatrix p = psi(a);
    commute.cases.push_back(compare(label, p * t, t * p));
  }
  r.families.push_back(std::move(commute));

  const auto full = RationalMatrix::identity(2 * n - 1);
  r.tau_plus_dim = kernel(t - full).dim();
  r.tau_minus_dim = kernel(t + full).dim();
  r.psi_of_c_an_is_tau = psi(inner(Word::generator(n, n))) == t;
  return r;
}

}  // namespace outfn
