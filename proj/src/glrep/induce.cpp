#include <algorithm>
#include <set>
#include <stdexcept>

#include "outfn/glrep.hpp"

namespace outfn {

int CosetTransversal::index_of(const Functional& s) const {
  const auto it = std::find(cosets.begin(), cosets.end(), s);
  if (it == cosets.end()) throw std::invalid_argument("functional is not a coset label");
  return static_cast<int>(it - cosets.begin());
}

CosetTransversal coset_transversal(int n) {
  if (n < 2 || n > 31) throw std::invalid_argument("coset_transversal needs 2 <= n <= 31");
  CosetTransversal t;
  const Functional f = base_functional(n);
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    const Functional s{n, bits};
    Functional lifted = s;  // the functional the rho-product has to reach
    int p = 0;
    if (!s.value(n)) {
      for (p = 1; !s.value(p); ++p) {
      }
      lifted.bits = (bits & ~(1u << (p - 1))) | (1u << (n - 1));
    }
    // rho_in adds e_i^* to a functional that is 1 on a_n.
    Automorphism a = Automorphism::identity(n);
    for (int i = 1; i < n; ++i)
      if (lifted.value(i)) a = rho(i, n, n) * a;
    if (p) a = sigma(p, n, n) * a;
    if (!(act_on_functional(a, f) == s)) throw std::logic_error("transversal element misses its coset");
    t.cosets.push_back(s);
    t.reps.push_back(std::move(a));
  }
  return t;
}

InducedRep::InducedRep(int n, Mu mu) : n_(n), mu_(mu), block_(schur_dimension(n - 1, mu)), transversal_() {
  if (n < 3) throw std::invalid_argument("induced representation needs n >= 3");
  if (n == 3 && mu == Mu::exterior) {
    throw std::invalid_argument("mu = (1,1) at n = 3 gives the determinant of V; use mu = (2)");
  }
  transversal_ = coset_transversal(n);
}

RationalMatrix InducedRep::theta(const Automorphism& g) const {
  if (g.rank() != n_) throw RankError("theta: rank mismatch");
  const int cosets = static_cast<int>(transversal_.cosets.size());
  RationalMatrix out(m(), m());
  std::vector<RationalMatrix> blocks(static_cast<std::size_t>(cosets));
  std::vector<int> target(static_cast<std::size_t>(cosets));
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < cosets; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    const int s = transversal_.index_of(act_on_functional(g, transversal_.cosets[uc]));
    const Automorphism back = transversal_.reps[static_cast<std::size_t>(s)].inverse() * g * transversal_.reps[uc];
    target[uc] = s;
    blocks[uc] = schur_square(psi_prime(back), mu_);
  }
  for (int c = 0; c < cosets; ++c) out.set_block(target[static_cast<std::size_t>(c)] * block_, c * block_, blocks[static_cast<std::size_t>(c)]);
  return out;
}

std::map<std::string, RationalMatrix> InducedRep::generator_matrices() const {
  std::map<std::string, RationalMatrix> out;
  for (int i = 1; i <= n_; ++i) {
    out.emplace(generator_name(NielsenKind::eps, i, 0), theta(eps(i, n_)));
    for (int j = 1; j <= n_; ++j) {
      if (i == j) continue;
      out.emplace(generator_name(NielsenKind::rho, i, j), theta(rho(i, j, n_)));
      out.emplace(generator_name(NielsenKind::lambda, i, j), theta(lambda(i, j, n_)));
    }
  }
  return out;
}

RelatorReport check_relators(const InducedRep& rep) {
  const int n = rep.n();
  const auto families = gersten_relations(n);

  // Images of every signed generator letter, computed once.
  std::vector<GenLetter> letters;
  for (const auto& fam : families)
    for (const auto& rel : fam.relations)
      for (const auto& l : rel.relator())
        if (std::find(letters.begin(), letters.end(), l) == letters.end()) letters.push_back(l);
  std::vector<RationalMatrix> images(letters.size());
  for (std::size_t k = 0; k < letters.size(); ++k) images[k] = rep.theta(evaluate(GenWord{letters[k]}, n));

  std::vector<std::pair<const RelationFamily*, const Relation*>> all;
  for (const auto& fam : families)
    for (const auto& rel : fam.relations) all.emplace_back(&fam, &rel);

  std::vector<char> ok(all.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t r = 0; r < all.size(); ++r) {
    RationalMatrix acc = RationalMatrix::identity(rep.m());
    for (const auto& l : all[r].second->relator()) {
      const auto k = static_cast<std::size_t>(std::find(letters.begin(), letters.end(), l) - letters.begin());
      acc = acc * images[k];
    }
    ok[r] = acc.is_identity();
  }

  RelatorReport report;
  report.checked = static_cast<int>(all.size());
  for (std::size_t r = 0; r < all.size(); ++r)
    if (!ok[r]) report.failures.push_back({all[r].first->name, all[r].second->label});
  return report;
}

namespace {

// Smallest k with a^k = 0, or 0 if a is not nilpotent.
int nilpotency_index(const RationalMatrix& a) {
  RationalMatrix p = a;
  for (int k = 1; k <= a.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * a;
  }
  return 0;
}

}  // namespace

Certificate check_not_factoring(const InducedRep& rep) {
  const int n = rep.n();
  std::vector<GenWord> candidates;
  const auto letter = [](NielsenKind kind, int i, int j, int exp) { return GenLetter{kind, i, j, exp}; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) candidates.push_back({letter(NielsenKind::rho, i, j, 1), letter(NielsenKind::lambda, i, j, -1)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (i != j && i != k && j != k)
          candidates.push_back(commutator(GenWord{letter(NielsenKind::rho, i, j, 1)}, GenWord{letter(NielsenKind::rho, i, k, 1)}));

  const auto id = RationalMatrix::identity(rep.m());
  Certificate cert;
  for (int power : {1, 2}) {
    for (const auto& w : candidates) {
      const Automorphism g = evaluate(w, n);
      const std::string label = to_string(w) + (power > 1 ? " (squared)" : "");
      cert.tried.push_back(label);
      if (!(abelianize(g) == IntMatrix::identity(n))) continue;
      const RationalMatrix t = rep.theta(g).pow(static_cast<unsigned>(power));
      if (t.is_identity()) continue;
      const int k = nilpotency_index(t - id);
      if (k == 0) continue;
      cert.found = true;
      cert.element = to_string(w);
      cert.power = power;
      cert.in_ia = true;
      cert.nontrivial = true;
      cert.unipotent = true;
      cert.nilpotency_index = k;
      return cert;
    }
  }
  return cert;
}

}  // namespace outfn
