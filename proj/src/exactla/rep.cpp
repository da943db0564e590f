#include "outfn/rep.hpp"

#include <bit>
#include <stdexcept>

namespace outfn {

bool FiniteRep::has(const std::string& generator) const {
  for (const auto& g : group.generators)
    if (g == generator) return true;
  return false;
}

RationalMatrix FiniteRep::evaluate(const RelWord& w) const {
  std::vector<RationalMatrix> inverses(matrices.size());
  return evaluate_word(
      w, RationalMatrix::identity(dim), [&](int g) -> const RationalMatrix& { return matrices.at(static_cast<std::size_t>(g)); },
      [&](int g) -> const RationalMatrix& {
        auto& inv = inverses.at(static_cast<std::size_t>(g));
        if (inv.rows() == 0 && dim > 0) inv = inverse(matrices[static_cast<std::size_t>(g)]);
        return inv;
      },
      [](const RationalMatrix& a, const RationalMatrix& b) { return a * b; });
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  auto x = solve(m, RationalMatrix::identity(m.rows()));
  if (!x || rank(m) != m.rows()) throw std::domain_error("matrix is singular");
  return *x;
}

std::vector<std::string> rep_problems(const FiniteRep& rep) {
  std::vector<std::string> out;
  const auto& gens = rep.group.generators;
  if (rep.matrices.size() != gens.size()) {
    out.push_back("expected " + std::to_string(gens.size()) + " generator matrices, got " +
                  std::to_string(rep.matrices.size()));
    return out;
  }
  bool shapes_ok = true;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& m = rep.matrices[k];
    if (m.rows() != rep.dim || m.cols() != rep.dim) {
      out.push_back(gens[k] + ": not " + std::to_string(rep.dim) + "x" + std::to_string(rep.dim));
      shapes_ok = false;
    } else if (rank(m) != rep.dim) {
      out.push_back(gens[k] + ": singular");
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;
  for (const auto& r : rep.group.relations) {
    if (!rep.evaluate(r).is_identity()) out.push_back("relation " + rep.group.word_string(r) + " is not the identity");
  }
  return out;
}

void require_valid(const FiniteRep& rep) {
  const auto problems = rep_problems(rep);
  if (problems.empty()) return;
  std::string msg = "invalid representation of " + rep.group.name + ":";
  for (const auto& p : problems) msg += "\n  " + p;
  throw std::invalid_argument(msg);
}

FiniteRep pull_back(const FiniteRep& rep, const GroupDescriptor& group, const std::vector<std::string>& names) {
  if (names.size() != group.generators.size()) throw std::invalid_argument("pull_back: one name per generator");
  FiniteRep out{group, rep.dim, {}};
  for (const auto& name : names) out.matrices.push_back(rep[name]);
  return out;
}

int trivial_multiplicity(const FiniteRep& rep) {
  if (rep.matrices.empty()) return rep.dim;
  RationalMatrix stacked(0, rep.dim);
  for (const auto& m : rep.matrices) stacked = vstack(stacked, m - RationalMatrix::identity(rep.dim));
  return rep.dim - rank(stacked);
}

std::string subset_string(Subset s) {
  std::string out = "{";
  for (int j = 1; s; ++j, s >>= 1) {
    if (s & 1u) out += (out.size() > 1 ? "," : "") + std::to_string(j);
  }
  return out + "}";
}

int EpsDecomposition::dim(Subset s) const {
  const auto it = spaces.find(s);
  return it == spaces.end() ? 0 : it->second.dim();
}

std::vector<int> EpsDecomposition::layer_dims() const {
  std::vector<int> out(static_cast<std::size_t>(n + 1), 0);
  for (const auto& [s, space] : spaces) out[static_cast<std::size_t>(std::popcount(s))] += space.dim();
  return out;
}

int EpsDecomposition::total_dim() const {
  int d = 0;
  for (const auto& [s, space] : spaces) d += space.dim();
  return d;
}

Subspace EpsDecomposition::sum(const std::vector<Subset>& which) const {
  Subspace out(ambient);
  for (Subset s : which) {
    const auto it = spaces.find(s);
    if (it != spaces.end()) out = out + it->second;
  }
  return out;
}

EpsDecomposition simultaneous_eigenspaces(const std::vector<RationalMatrix>& involutions) {
  if (involutions.size() > 31) throw std::invalid_argument("too many involutions");
  EpsDecomposition d;
  d.n = static_cast<int>(involutions.size());
  d.ambient = involutions.empty() ? 0 : involutions.front().rows();
  for (std::size_t a = 0; a < involutions.size(); ++a) {
    const auto& m = involutions[a];
    if (!m.square() || m.rows() != d.ambient) throw std::invalid_argument("involutions must share one square shape");
    if (!(m * m).is_identity()) throw std::invalid_argument("matrix " + std::to_string(a + 1) + " is not an involution");
    for (std::size_t b = 0; b < a; ++b) {
      if (!(m * involutions[b] == involutions[b] * m)) {
        throw std::invalid_argument("matrices " + std::to_string(b + 1) + " and " + std::to_string(a + 1) +
                                    " do not commute");
      }
    }
  }

  std::map<Subset, Subspace> pieces;
  if (d.ambient > 0) pieces.emplace(0u, Subspace::whole(d.ambient));
  const auto id = RationalMatrix::identity(d.ambient);
  for (int j = 0; j < d.n; ++j) {
    const auto& m = involutions[static_cast<std::size_t>(j)];
    std::map<Subset, Subspace> next;
    for (const auto& [s, w] : pieces) {
      // m preserves w, so w splits into its +1 and -1 parts.
      const auto& b = w.basis();
      const Subspace plus = kernel((m - id) * b);
      const Subspace minus = kernel((m + id) * b);
      if (plus.dim() > 0) next.emplace(s, Subspace::span(b * plus.basis()));
      if (minus.dim() > 0) next.emplace(s | (1u << j), Subspace::span(b * minus.basis()));
    }
    pieces = std::move(next);
  }
  d.spaces = std::move(pieces);
  return d;
}

EpsDecomposition eps_decomposition(const FiniteRep& rep, int n) {
  std::vector<RationalMatrix> eps;
  for (int j = 1; j <= n; ++j) eps.push_back(rep["eps_" + std::to_string(j)]);
  if (n == 0) {
    EpsDecomposition d;
    d.ambient = rep.dim;
    if (rep.dim > 0) d.spaces.emplace(0u, Subspace::whole(rep.dim));
    return d;
  }
  return simultaneous_eigenspaces(eps);
}

bool check_diamond(const RationalMatrix& rho, const EpsDecomposition& decomp, int i, int j) {
  if (rho.rows() != decomp.ambient || rho.cols() != decomp.ambient) {
    throw std::invalid_argument("check_diamond: dimension mismatch");
  }
  if (i < 1 || j < 1 || i > decomp.n || j > decomp.n || i == j) throw std::invalid_argument("check_diamond: bad indices");
  const Subset bi = 1u << (i - 1);
  const Subset bj = 1u << (j - 1);
  for (const auto& [s, space] : decomp.spaces) {
    const Subspace target = decomp.sum({s, s ^ bi, s ^ bj, s ^ bi ^ bj});
    if (!target.contains(rho * space.basis())) return false;
  }
  return true;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int t = 1; t <= k; ++t) b = b * (n - k + t) / t;
  return b;
}

DivisibilityReport divisibility_check(const EpsDecomposition& decomp) {
  DivisibilityReport r;
  r.n = decomp.n;
  r.layer_dims = decomp.layer_dims();
  for (int i = 0; i <= decomp.n; ++i) {
    if (r.layer_dims[static_cast<std::size_t>(i)] % binomial(decomp.n, i) != 0) r.violations.push_back(i);
  }
  std::vector<int> seen(static_cast<std::size_t>(decomp.n + 1), -1);
  std::vector<char> uneven(static_cast<std::size_t>(decomp.n + 1), 0);
  // Layers with a missing E_I count as uneven unless the whole layer is zero.
  std::vector<int> present(static_cast<std::size_t>(decomp.n + 1), 0);
  for (const auto& [s, space] : decomp.spaces) {
    const auto layer = static_cast<std::size_t>(std::popcount(s));
    ++present[layer];
    if (seen[layer] == -1) seen[layer] = space.dim();
    else if (seen[layer] != space.dim()) uneven[layer] = 1;
  }
  for (int i = 0; i <= decomp.n; ++i) {
    const auto layer = static_cast<std::size_t>(i);
    if (present[layer] != 0 && present[layer] != binomial(decomp.n, i)) uneven[layer] = 1;
    if (uneven[layer]) r.uneven_layers.push_back(i);
  }
  return r;
}

}  // namespace outfn
