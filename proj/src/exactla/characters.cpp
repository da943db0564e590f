#include "outfn/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace outfn {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(remaining, largest); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

void check_partition(const Partition& p, int n) {
  int total = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < 1 || (k > 0 && p[k] > p[k - 1])) throw std::invalid_argument("cycle type must be nonincreasing and positive");
    total += p[k];
  }
  if (total != n) throw std::invalid_argument("cycle type does not sum to " + std::to_string(n));
}

Integer class_size(const Partition& p, int n) {
  check_partition(p, n);
  Integer size;
  mpz_fac_ui(size.get_mpz_t(), static_cast<unsigned long>(n));
  std::map<int, int> mult;
  for (int k : p) ++mult[k];
  for (const auto& [k, m] : mult) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    size /= f * kp;
  }
  return size;
}

RelWord class_representative(const Partition& p, int n) {
  check_partition(p, n);
  RelWord w;
  int start = 0;  // 0-based first point of the block; s_{a} has index a-1
  for (int k : p) {
    for (int t = 0; t + 1 < k; ++t) w.push_back({start + t, 1});
    start += k;
  }
  return w;
}

std::string to_string(NamedRep r) {
  switch (r) {
    case NamedRep::trivial: return "trivial";
    case NamedRep::determinant: return "determinant";
    case NamedRep::standard: return "standard";
    case NamedRep::permutation: return "permutation";
    case NamedRep::signed_standard: return "signed_standard";
  }
  return "?";
}

NamedRep parse_named_rep(const std::string& name) {
  for (NamedRep r : all_named_reps)
    if (to_string(r) == name) return r;
  throw std::invalid_argument("unknown representation name \"" + name + "\"");
}

int named_dimension(NamedRep r, int n) {
  switch (r) {
    case NamedRep::trivial:
    case NamedRep::determinant: return 1;
    case NamedRep::permutation: return n;
    case NamedRep::standard:
    case NamedRep::signed_standard: return n - 1;
  }
  return 0;
}

Rational named_character(NamedRep r, int n, const Partition& cycle_type) {
  check_partition(cycle_type, n);
  const long fixed = std::count(cycle_type.begin(), cycle_type.end(), 1);
  long even_cycles = 0;
  for (int k : cycle_type) even_cycles += k % 2 == 0;
  const long sign = even_cycles % 2 ? -1 : 1;
  switch (r) {
    case NamedRep::trivial: return 1;
    case NamedRep::determinant: return sign;
    case NamedRep::permutation: return fixed;
    case NamedRep::standard: return fixed - 1;
    case NamedRep::signed_standard: return sign * (fixed - 1);
  }
  return 0;
}

long long multiplicity(const FiniteRep& rep, NamedRep r, int n) {
  if (static_cast<int>(rep.group.generators.size()) != n - 1) {
    throw std::invalid_argument("multiplicity: expected a representation on s_1..s_" + std::to_string(n - 1));
  }
  Rational total = 0;
  for (const auto& p : partitions(n)) {
    const Rational trace = rep.evaluate(class_representative(p, n)).trace();
    total += Rational(class_size(p, n)) * trace * named_character(r, n, p);
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  total /= Rational(fact);
  if (total.get_den() != 1 || total < 0) {
    throw std::domain_error("character inner product " + to_string(total) + " is not a nonnegative integer");
  }
  return total.get_num().get_si();
}

FiniteRep permutation_rep(int n) {
  FiniteRep rep{groups::symmetric(n), n, {}};
  for (int i = 0; i + 1 < n; ++i) {
    RationalMatrix m = RationalMatrix::identity(n);
    m(i, i) = 0;
    m(i + 1, i + 1) = 0;
    m(i, i + 1) = 1;
    m(i + 1, i) = 1;
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

FiniteRep cage_standard_rep(int n) {
  // Boundary of the n-cage: every edge runs from one vertex to the other.
  RationalMatrix boundary(2, n);
  for (int e = 0; e < n; ++e) {
    boundary(0, e) = -1;
    boundary(1, e) = 1;
  }
  const Subspace cycles = kernel(boundary);
  const FiniteRep perm = permutation_rep(n);
  FiniteRep rep{perm.group, cycles.dim(), {}};
  for (const auto& m : perm.matrices) rep.matrices.push_back(cycles.coordinates(m * cycles.basis()));
  return rep;
}

BranchingResult branching_check(int n) {
  if (n < 3) throw std::invalid_argument("branching_check needs n >= 3");
  const FiniteRep big = cage_standard_rep(n + 1);
  FiniteRep restricted{groups::symmetric(n), big.dim, {}};
  for (int i = 0; i + 1 < n; ++i) restricted.matrices.push_back(big.matrices[static_cast<std::size_t>(i)]);

  BranchingResult r;
  r.n = n;
  r.pass = rep_problems(restricted).empty();
  for (NamedRep name : all_named_reps) {
    const long long m = multiplicity(restricted, name, n);
    r.multiplicities.emplace_back(name, m);
    long long expected = 0;
    if (name == NamedRep::standard || name == NamedRep::trivial) expected = 1;
    // permutation = trivial ⊕ standard, so it meets standard ⊕ trivial twice.
    if (name == NamedRep::permutation) expected = 2;
    if (name == NamedRep::signed_standard && n == 3) expected = 1;
    if (m != expected) r.pass = false;
  }
  return r;
}

}  // namespace outfn
