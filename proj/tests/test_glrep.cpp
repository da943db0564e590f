#include <doctest.h>

#include <sstream>

#include "outfn/glrep.hpp"
#include "outfn/subspace.hpp"
#include "support.hpp"

using namespace outfn;
using namespace outfn::testing;

namespace {

int an_parity(const Word& w) {
  int p = 0;
  for (int l : w.letters()) p ^= (l == w.rank() || l == -w.rank());
  return p;
}

Automorphism random_stabilizer_element(Rng& rng, int n) {
  for (;;) {
    const Automorphism a = random_automorphism(rng, n, uniform(rng, 1, 5));
    if (stabilizes_f(a)) return a;
  }
}

Functional image_of_base(const Automorphism& a, int n) { return act_on_functional(a, base_functional(n)); }

}  // namespace

TEST_CASE("Schreier basis words") {
  const auto defs = schreier_definitions(3);
  REQUIRE(defs.size() == 5);
  CHECK(defs[0] == Word::generator(3, 1));
  CHECK(defs[2] == Word::reduce(3, {3, 1, -3}));
  CHECK(defs[4] == Word::reduce(3, {3, 3}));
  for (const auto& d : defs) CHECK(an_parity(d) == 0);
}

TEST_CASE("rewriting into the index-two subgroup round-trips") {
  Rng rng(41);
  int kept = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = uniform(rng, 2, 5);
    const Word w = random_word(rng, n, 14);
    if (an_parity(w)) {
      CHECK_THROWS_AS(rewrite_in_K(w), std::domain_error);
      continue;
    }
    const Word k = rewrite_in_K(w);
    CHECK(k.rank() == 2 * n - 1);
    CHECK(expand_from_K(k, n) == w);
    ++kept;
  }
  CHECK(kept > 100);
  // Products rewrite to products.
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
    if (an_parity(u)) u = u * Word::generator(3, 3);
    if (an_parity(v)) v = Word::generator(3, 3) * v;
    CHECK(rewrite_in_K(u * v) == rewrite_in_K(u) * rewrite_in_K(v));
  }
}

TEST_CASE("psi is a homomorphism commuting with tau") {
  Rng rng(42);
  for (int n = 3; n <= 5; ++n) {
    const RationalMatrix t = tau_matrix(n);
    CHECK((t * t).is_identity());
    for (int trial = 0; trial < 25; ++trial) {
      const Automorphism a = random_stabilizer_element(rng, n), b = random_stabilizer_element(rng, n);
      CHECK(psi(a * b) == psi(a) * psi(b));
      CHECK(psi(a) * t == t * psi(a));
      CHECK(psi_prime(a * b) == psi_prime(a) * psi_prime(b));
    }
  }
  CHECK_THROWS_AS(psi(sigma(1, 3, 3)), std::domain_error);
}

TEST_CASE("psi on inverting a generator") {
  // eps_1 negates x_1 and y_1 and fixes the rest.
  RationalMatrix expected = RationalMatrix::identity(5);
  expected(0, 0) = -1;
  expected(2, 2) = -1;
  CHECK(psi(eps(1, 3)) == expected);
  RationalMatrix prime = RationalMatrix::identity(2);
  prime(0, 0) = -1;
  CHECK(psi_prime(eps(1, 3)) == prime);
}

TEST_CASE("tau eigenspaces") {
  for (int n = 3; n <= 6; ++n) {
    const RationalMatrix t = tau_matrix(n);
    const auto id = RationalMatrix::identity(2 * n - 1);
    CHECK(naive_rank(t - id) == n - 1);  // -1 eigenspace has dim n-1
    CHECK(naive_rank(t + id) == n);
    CHECK(psi(inner(Word::generator(n, n))) == t);
  }
}

TEST_CASE("formula families") {
  for (int n = 3; n <= 4; ++n) {
    const auto r = verify_section4_formulas(n);
    CHECK(r.all_pass());
    for (const auto& f : r.families) CHECK(f.failures() == 0);
  }
  CHECK_THROWS_AS(verify_section4_formulas(2), std::invalid_argument);
}

TEST_CASE("coset transversal") {
  for (int n = 2; n <= 6; ++n) {
    const auto t = coset_transversal(n);
    REQUIRE(t.cosets.size() == static_cast<std::size_t>((1 << n) - 1));
    for (std::size_t k = 0; k < t.cosets.size(); ++k) {
      CHECK(t.cosets[k].bits == k + 1);
      CHECK(image_of_base(t.reps[k], n) == t.cosets[k]);
      CHECK(t.index_of(t.cosets[k]) == static_cast<int>(k));
    }
  }
}

TEST_CASE("induced representation at rank three") {
  Rng rng(43);
  const InducedRep rep(3, Mu::symmetric);
  CHECK(rep.m() == 21);
  CHECK(rep.block_dim() == 3);
  CHECK(rep.theta(Automorphism::identity(3)).is_identity());
  for (int trial = 0; trial < 20; ++trial) {
    const Automorphism a = random_automorphism(rng, 3, 3), b = random_automorphism(rng, 3, 3);
    CHECK(rep.theta(a * b) == rep.theta(a) * rep.theta(b));
    // Inner automorphisms act trivially, so theta is defined on Out.
    CHECK(rep.theta(inner(random_word(rng, 3, 6))).is_identity());
  }
  const auto gens = rep.generator_matrices();
  CHECK(gens.at("rho_1_2") == rep.theta(rho(1, 2, 3)));
  CHECK(gens.at("eps_2") == rep.theta(eps(2, 3)));
  CHECK(check_relators(rep).failures.empty());

  const Certificate c = check_not_factoring(rep);
  REQUIRE(c.found);
  const Automorphism g = evaluate([&] {
    GenWord w;
    std::string tok;
    std::stringstream in(c.element);
    while (in >> tok) {
      const bool inv = tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1";
      GenLetter l = parse_generator(inv ? tok.substr(0, tok.size() - 3) : tok);
      w.push_back(inv ? l.inverse() : l);
    }
    return w;
  }(), 3);
  CHECK(abelianize(g) == IntMatrix::identity(3));
  const RationalMatrix t = rep.theta(g).pow(static_cast<unsigned>(c.power));
  const RationalMatrix nil = t - RationalMatrix::identity(21);
  CHECK_FALSE(nil.is_zero());
  CHECK(nil.pow(static_cast<unsigned>(c.nilpotency_index)).is_zero());
  CHECK_FALSE(nil.pow(static_cast<unsigned>(c.nilpotency_index - 1)).is_zero());
}

TEST_CASE("induced representation arguments") {
  CHECK_THROWS_AS(InducedRep(3, Mu::exterior), std::invalid_argument);
  CHECK_THROWS_AS(InducedRep(2, Mu::symmetric), std::invalid_argument);
  const InducedRep four(4, Mu::exterior);
  CHECK(four.m() == 45);
}
