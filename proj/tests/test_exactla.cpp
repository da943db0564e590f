#include <doctest.h>

#include "outfn/abelian.hpp"
#include "outfn/characters.hpp"
#include "outfn/kernels.hpp"
#include "outfn/rep.hpp"
#include "outfn/schur.hpp"
#include "support.hpp"

using namespace outfn;
using namespace outfn::testing;

namespace {

// Random matrix of rank at most r: a product of r-wide factors.
RationalMatrix low_rank(Rng& rng, int rows, int cols, int r) {
  return naive_multiply(random_matrix(rng, rows, r, 3), random_matrix(rng, r, cols, 3));
}

bool same(const kernels::Echelon& a, const kernels::Echelon& b) {
  return a.rows == b.rows && a.cols == b.cols && a.data == b.data && a.pivot_cols == b.pivot_cols;
}

// Signed permutation matrices of W_n written out by hand.
FiniteRep signed_permutations(int n) {
  FiniteRep rep{groups::hyperoctahedral(n), n, {}};
  for (int i = 0; i < n; ++i) {
    RationalMatrix m = RationalMatrix::identity(n);
    m(i, i) = -1;
    rep.matrices.push_back(m);
  }
  for (int i = 0; i + 1 < n; ++i) {
    RationalMatrix m = RationalMatrix::identity(n);
    m(i, i) = m(i + 1, i + 1) = 0;
    m(i, i + 1) = m(i + 1, i) = 1;
    rep.matrices.push_back(m);
  }
  return rep;
}

RationalMatrix from_int(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = static_cast<long>(m(r, c));
  return out;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("rational text round-trips") {
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("matrix arithmetic") {
  const RationalMatrix a(2, 2, {1, 2, 3, 4});
  const RationalMatrix b(2, 2, {0, 1, 1, 0});
  CHECK(a * b == RationalMatrix(2, 2, {2, 1, 4, 3}));
  CHECK(a.transpose() == RationalMatrix(2, 2, {1, 3, 2, 4}));
  CHECK(a.trace() == 5);
  CHECK(b.pow(2).is_identity());
  CHECK(a.pow(0).is_identity());
  CHECK(direct_sum(a, b).block(2, 2, 2, 2) == b);
  CHECK(hstack(a, b).cols() == 4);
  CHECK(vstack(a, b).rows() == 4);
  CHECK((a - a).is_zero());
  CHECK(Rational(1, 2) * a == RationalMatrix(2, 2, {1, 2, 3, 4}) - Rational(1, 2) * a);
  CHECK_THROWS_AS(a * RationalMatrix(3, 1), std::invalid_argument);
}

TEST_CASE("products match the triple loop") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = uniform(rng, 0, 7), k = uniform(rng, 0, 7), c = uniform(rng, 0, 7);
    const RationalMatrix a = random_matrix(rng, r, k, 5), b = random_matrix(rng, k, c, 5);
    CHECK(a * b == naive_multiply(a, b));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  Rng rng(22);
  // Sizes straddle the dispatch threshold.
  for (int size : {3, 8, 17, 24, 33}) {
    const RationalMatrix a = random_matrix(rng, size, size, 9), b = random_matrix(rng, size, size + 2, 9);
    CHECK(kernels::serial::multiply(a, b) == kernels::parallel::multiply(a, b));
    CHECK(kernels::multiply(a, b) == kernels::serial::multiply(a, b));
    const RationalMatrix d = low_rank(rng, size, size + 3, size / 2 + 1);
    CHECK(same(kernels::serial::echelon(d), kernels::parallel::echelon(d)));
    CHECK(same(kernels::echelon(d), kernels::serial::echelon(d)));
  }
  RationalMatrix frac(2, 2);
  frac(0, 0) = Rational(1, 3);
  frac(1, 1) = Rational(2, 5);
  CHECK(same(kernels::serial::echelon(frac), kernels::parallel::echelon(frac)));
}

TEST_CASE("rank and kernel agree with Gauss-Jordan") {
  Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int rows = uniform(rng, 1, 8), cols = uniform(rng, 1, 8);
    const RationalMatrix m = uniform(rng, 0, 1) ? random_matrix(rng, rows, cols, 2)
                                                : low_rank(rng, rows, cols, uniform(rng, 1, 3));
    const int r = naive_rank(m);
    CHECK(rank(m) == r);
    const Subspace k = kernel(m);
    CHECK(k.dim() == cols - r);
    CHECK((m * k.basis()).is_zero());
    CHECK(naive_rank(k.basis()) == k.dim());
  }
}

TEST_CASE("solve and inverse") {
  Rng rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform(rng, 1, 6);
    const RationalMatrix a = random_matrix(rng, n, n, 4);
    const RationalMatrix x = random_matrix(rng, n, 2, 4);
    const auto sol = solve(a, a * x);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == a * x);
    if (naive_rank(a) == n) {
      CHECK((a * inverse(a)).is_identity());
      CHECK(*sol == x);
    } else {
      CHECK_THROWS_AS(inverse(a), std::domain_error);
    }
  }
  const RationalMatrix zero(2, 2);
  CHECK_FALSE(solve(zero, RationalMatrix::identity(2)).has_value());
}

TEST_CASE("subspace dimension formula") {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const int ambient = uniform(rng, 1, 7);
    const Subspace u = Subspace::span(random_matrix(rng, ambient, uniform(rng, 0, 4), 2));
    const Subspace w = Subspace::span(random_matrix(rng, ambient, uniform(rng, 0, 4), 2));
    const Subspace sum = u + w, meet = u.intersect(w);
    CHECK(sum.dim() + meet.dim() == u.dim() + w.dim());
    CHECK(sum.contains(u));
    CHECK(u.contains(meet));
    CHECK(w.contains(meet));
    if (u.dim() > 0) CHECK(u.basis() * u.coordinates(u.basis()) == u.basis());
  }
  CHECK(Subspace::whole(3) == Subspace::span(RationalMatrix(3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1})));
}

TEST_CASE("permutation realizations satisfy their presentations") {
  for (int n = 2; n <= 6; ++n) {
    const auto g = groups::symmetric(n);
    const auto p = groups::symmetric_generators(n);
    for (const auto& rel : g.relations) {
      const auto img = evaluate_word(
          rel, Permutation::identity(n), [&](int i) { return p[static_cast<std::size_t>(i)]; },
          [&](int i) { return p[static_cast<std::size_t>(i)].inverse(); }, [](const Permutation& a, const Permutation& b) { return a * b; });
      CHECK(img.is_identity());
    }
  }
  for (int n = 3; n <= 7; ++n) {
    const auto g = groups::alternating(n);
    const auto p = groups::alternating_generators(n);
    for (const auto& x : p) CHECK(x.sign() == 1);
    for (const auto& rel : g.relations) {
      const auto img = evaluate_word(
          rel, Permutation::identity(n), [&](int i) { return p[static_cast<std::size_t>(i)]; },
          [&](int i) { return p[static_cast<std::size_t>(i)].inverse(); }, [](const Permutation& a, const Permutation& b) { return a * b; });
      CHECK(img.is_identity());
    }
    CHECK(g.perfect == (n >= 5));
  }
  CHECK(Permutation::transposition(3, 0, 1).sign() == -1);
}

TEST_CASE("group names") {
  CHECK(groups::by_name("S4").generators.size() == 3);
  CHECK(groups::by_name("A5").perfect);
  CHECK(groups::by_name("OutW3").name == "OutW3");
  CHECK(groups::by_name("G3").generators.size() == 4);
  CHECK(groups::by_name("B4").generators.back() == "xi");
  CHECK(groups::by_name("trivial").generators.empty());
  CHECK_THROWS_AS(groups::by_name("Q8"), std::invalid_argument);
  CHECK_THROWS_AS(groups::by_name("S"), std::invalid_argument);
  const auto w = groups::by_name("S3");
  CHECK(w.word_string(w.parse_word({"s_1", "s_2^-1", "s_1^3"})) == "s_1 s_2^-1 s_1^3");
  CHECK_THROWS_AS(w.parse_word({"t"}), std::invalid_argument);
  CHECK_THROWS_AS(w.parse_word({"s_1^x"}), std::invalid_argument);
}

TEST_CASE("representation validation") {
  for (int n = 2; n <= 5; ++n) CHECK(rep_problems(signed_permutations(n)).empty());
  FiniteRep broken = signed_permutations(3);
  broken.matrices[0](0, 0) = 2;  // eps_1 no longer an involution
  CHECK_FALSE(rep_problems(broken).empty());
  CHECK_THROWS_AS(require_valid(broken), std::invalid_argument);
  FiniteRep short_rep = signed_permutations(3);
  short_rep.matrices.pop_back();
  CHECK_FALSE(rep_problems(short_rep).empty());
  FiniteRep singular = signed_permutations(3);
  singular.matrices[1] = RationalMatrix(3, 3);
  CHECK_FALSE(rep_problems(singular).empty());
}

TEST_CASE("eigenspace decomposition of signed permutations") {
  for (int n = 2; n <= 6; ++n) {
    const auto d = eps_decomposition(signed_permutations(n), n);
    CHECK(d.total_dim() == n);
    for (int j = 0; j < n; ++j) CHECK(d.dim(1u << j) == 1);
    const auto layers = d.layer_dims();
    CHECK(layers[1] == n);
    CHECK(divisibility_check(d).pass());
  }
  CHECK_THROWS_AS(simultaneous_eigenspaces({RationalMatrix(2, 2, {1, 1, 0, 1})}), std::invalid_argument);
  CHECK_THROWS_AS(simultaneous_eigenspaces({RationalMatrix(2, 2, {0, 1, 1, 0}), RationalMatrix(2, 2, {1, 0, 0, -1})}),
                  std::invalid_argument);
  CHECK(subset_string(0b101) == "{1,3}");
  CHECK(subset_string(0) == "{}");
}

TEST_CASE("divisibility flags uneven layers") {
  // eps_1 = diag(-1, 1), eps_2 = diag(1, 1): E_{1} has dim 1, E_{2} is zero.
  const auto d = simultaneous_eigenspaces({RationalMatrix(2, 2, {-1, 0, 0, 1}), RationalMatrix::identity(2)});
  const auto r = divisibility_check(d);
  CHECK_FALSE(r.pass());
  CHECK(r.violations == std::vector<int>{1});
}

TEST_CASE("diamond containment") {
  for (int n = 3; n <= 5; ++n) {
    const auto d = eps_decomposition(signed_permutations(n), n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        CHECK(check_diamond(from_int(abelianize(rho(i, j, n))), d, i, j));
        CHECK(check_diamond(from_int(abelianize(lambda(i, j, n))), d, i, j));
      }
    // A transvection mixing coordinates 1 and 3 breaks containment for (1, 2).
    RationalMatrix bad = RationalMatrix::identity(n);
    bad(0, 2) = 1;
    CHECK_FALSE(check_diamond(bad, d, 1, 2));
  }
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("partitions and class sizes") {
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 1; n <= 7; ++n) {
    const auto ps = partitions(n);
    CHECK(ps.size() == counts[n]);
    Integer total = 0;
    for (const auto& p : ps) total += class_size(p, n);
    CHECK(Rational(total) == factorial(n));
  }
  CHECK_THROWS_AS(check_partition({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_partition({2, 2}, 3), std::invalid_argument);
}

TEST_CASE("character orthogonality") {
  for (int n = 4; n <= 7; ++n) {
    const NamedRep irreducible[] = {NamedRep::trivial, NamedRep::determinant, NamedRep::standard,
                                    NamedRep::signed_standard};
    for (NamedRep a : irreducible)
      for (NamedRep b : irreducible) {
        Rational sum = 0;
        for (const auto& p : partitions(n)) sum += Rational(class_size(p, n)) * named_character(a, n, p) * named_character(b, n, p);
        CHECK(sum == (a == b ? factorial(n) : Rational(0)));
      }
    for (NamedRep a : all_named_reps) CHECK(named_character(a, n, Partition(static_cast<std::size_t>(n), 1)) == named_dimension(a, n));
  }
}

TEST_CASE("multiplicities of concrete representations") {
  for (int n = 3; n <= 6; ++n) {
    const FiniteRep perm = permutation_rep(n);
    CHECK(rep_problems(perm).empty());
    CHECK(multiplicity(perm, NamedRep::trivial, n) == 1);
    CHECK(multiplicity(perm, NamedRep::standard, n) == 1);
    CHECK(multiplicity(perm, NamedRep::determinant, n) == 0);
    CHECK(trivial_multiplicity(perm) == 1);
    const FiniteRep std_rep = cage_standard_rep(n);
    CHECK(std_rep.dim == n - 1);
    CHECK(multiplicity(std_rep, NamedRep::standard, n) == 1);
    CHECK(multiplicity(std_rep, NamedRep::trivial, n) == 0);
    CHECK(trivial_multiplicity(std_rep) == 0);
  }
  for (int n = 3; n <= 6; ++n) CHECK(branching_check(n).pass);
  CHECK(parse_named_rep(to_string(NamedRep::signed_standard)) == NamedRep::signed_standard);
  CHECK_THROWS_AS(parse_named_rep("spin"), std::invalid_argument);
}

TEST_CASE("Schur squares") {
  Rng rng(26);
  CHECK(parse_mu("1,1") == Mu::exterior);
  CHECK(parse_mu("(2)") == Mu::symmetric);
  CHECK_THROWS_AS(parse_mu("3"), std::invalid_argument);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = uniform(rng, 1, 5);
    const RationalMatrix a = random_matrix(rng, d, d, 3), b = random_matrix(rng, d, d, 3);
    const Rational t = a.trace(), t2 = (a * a).trace();
    for (Mu mu : {Mu::exterior, Mu::symmetric}) {
      const RationalMatrix s = schur_square(a, mu);
      CHECK(s.rows() == schur_dimension(d, mu));
      CHECK(s.rows() == (mu == Mu::exterior ? binomial(d, 2) : binomial(d + 1, 2)));
      // Traces of the exterior and symmetric squares.
      const Rational expected = mu == Mu::exterior ? Rational((t * t - t2) / 2) : Rational((t * t + t2) / 2);
      CHECK(s.trace() == expected);
      CHECK(schur_square(a * b, mu) == s * schur_square(b, mu));
      CHECK(schur_square(-a, mu) == s);
      CHECK(schur_square(RationalMatrix::identity(d), mu).is_identity());
    }
  }
}
