#include "outfn/gersten.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace outfn {

std::string generator_name(NielsenKind kind, int i, int j) {
  const auto s = [](int v) { return std::to_string(v); };
  switch (kind) {
    case NielsenKind::rho: return "rho_" + s(i) + "_" + s(j);
    case NielsenKind::lambda: return "lambda_" + s(i) + "_" + s(j);
    case NielsenKind::eps: return "eps_" + s(i);
    case NielsenKind::sigma: return "sigma_" + s(i) + "_" + s(j);
    case NielsenKind::sigma_star: return "sigma_star_" + s(i);
    case NielsenKind::delta: return "delta";
  }
  return "?";
}

std::string generator_name(const GenLetter& g) {
  std::string s = generator_name(g.kind, g.i, g.j);
  if (g.exp < 0) s += "^-1";
  return s;
}

namespace {

std::vector<int> split_indices(const std::string& s, const std::string& name) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find('_', pos);
    const std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
      throw std::invalid_argument("bad generator name: " + name);
    }
    out.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

GenLetter parse_generator(const std::string& name) {
  if (name == "delta") return {NielsenKind::delta, 0, 0, 1};
  struct Prefix {
    const char* text;
    NielsenKind kind;
    std::size_t arity;
  };
  // sigma_star_ must be tried before sigma_.
  static const Prefix prefixes[] = {{"sigma_star_", NielsenKind::sigma_star, 1},
                                    {"sigma_", NielsenKind::sigma, 2},
                                    {"lambda_", NielsenKind::lambda, 2},
                                    {"rho_", NielsenKind::rho, 2},
                                    {"eps_", NielsenKind::eps, 1}};
  for (const auto& p : prefixes) {
    const std::string pre = p.text;
    if (name.rfind(pre, 0) != 0) continue;
    const auto idx = split_indices(name.substr(pre.size()), name);
    if (idx.size() != p.arity) throw std::invalid_argument("bad generator name: " + name);
    return {p.kind, idx[0], p.arity == 2 ? idx[1] : 0, 1};
  }
  throw std::invalid_argument("unknown generator: " + name);
}

GenWord inverse(const GenWord& w) {
  GenWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

GenWord concat(std::initializer_list<GenWord> parts) {
  GenWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

GenWord commutator(const GenWord& g, const GenWord& h) {
  return concat({g, h, inverse(g), inverse(h)});
}

GenWord power(const GenWord& w, int k) {
  const GenWord base = k < 0 ? inverse(w) : w;
  GenWord out;
  for (int t = 0; t < std::abs(k); ++t) out.insert(out.end(), base.begin(), base.end());
  return out;
}

std::string to_string(const GenWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += generator_name(w[k]);
  }
  return s;
}

Automorphism evaluate(const GenWord& w, int n) {
  Automorphism out = Automorphism::identity(n);
  for (const GenLetter& g : w) {
    const Automorphism a = nielsen(g.kind, g.i, g.j, n);
    out = out * (g.exp < 0 ? a.inverse() : a);
  }
  return out;
}

namespace {

GenWord R(int i, int j, int e = 1) { return {{NielsenKind::rho, i, j, e}}; }
GenWord L(int i, int j, int e = 1) { return {{NielsenKind::lambda, i, j, e}}; }
GenWord E1(int e = 1) { return {{NielsenKind::eps, 1, 0, e}}; }

std::string idx(std::initializer_list<int> v) {
  std::string s = "(";
  bool first = true;
  for (int x : v) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

Relation rel(std::string label, GenWord lhs, GenWord rhs = {}) {
  return {std::move(label), std::move(lhs), std::move(rhs)};
}

}  // namespace

std::vector<RelationFamily> gersten_relations(int n) {
  if (n < 3) throw std::invalid_argument("the presentation needs n >= 3");
  std::vector<RelationFamily> fams;

  {
    RelationFamily f{"commute-same-side", "[rho_ij,rho_kl] = [lambda_ij,lambda_kl] = 1, k not in {i,j}, l != i", 0, {}};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (i == j || k == i || k == j || l == i || l == k) continue;
            ++f.tuple_count;
            const auto t = idx({i, j, k, l});
            f.relations.push_back(rel("[rho,rho]" + t, commutator(R(i, j), R(k, l))));
            f.relations.push_back(rel("[lambda,lambda]" + t, commutator(L(i, j), L(k, l))));
          }
    fams.push_back(std::move(f));
  }
  {
    RelationFamily f{"commute-mixed", "[lambda_ij,rho_kl] = 1, k != j, l != i", 0, {}};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (i == j || k == l || k == j || l == i) continue;
            ++f.tuple_count;
            f.relations.push_back(rel("[lambda,rho]" + idx({i, j, k, l}), commutator(L(i, j), R(k, l))));
          }
    fams.push_back(std::move(f));
  }
  {
    RelationFamily f{"rho-commutators",
                     "[rho_ij^-1,rho_jk^-1] = [rho_ij,lambda_jk] = [rho_ij^-1,rho_jk]^-1 = "
                     "[rho_ij,lambda_jk^-1]^-1 = rho_ik^-1, k not in {i,j}",
                     0, {}};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || k == i || k == j) continue;
          ++f.tuple_count;
          const auto t = idx({i, j, k});
          const GenWord target = R(i, k, -1);
          f.relations.push_back(rel("[rho^-1,rho^-1]" + t, commutator(R(i, j, -1), R(j, k, -1)), target));
          f.relations.push_back(rel("[rho,lambda]" + t, commutator(R(i, j), L(j, k)), target));
          f.relations.push_back(rel("[rho^-1,rho]^-1" + t, inverse(commutator(R(i, j, -1), R(j, k))), target));
          f.relations.push_back(rel("[rho,lambda^-1]^-1" + t, inverse(commutator(R(i, j), L(j, k, -1))), target));
        }
    fams.push_back(std::move(f));
  }
  {
    RelationFamily f{"lambda-commutators",
                     "[lambda_ij^-1,lambda_jk^-1] = [lambda_ij,rho_jk] = [lambda_ij^-1,lambda_jk]^-1 = "
                     "[lambda_ij,rho_jk^-1]^-1 = lambda_ik^-1, k not in {i,j}",
                     0, {}};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || k == i || k == j) continue;
          ++f.tuple_count;
          const auto t = idx({i, j, k});
          const GenWord target = L(i, k, -1);
          f.relations.push_back(rel("[lambda^-1,lambda^-1]" + t, commutator(L(i, j, -1), L(j, k, -1)), target));
          f.relations.push_back(rel("[lambda,rho]" + t, commutator(L(i, j), R(j, k)), target));
          f.relations.push_back(rel("[lambda^-1,lambda]^-1" + t, inverse(commutator(L(i, j, -1), L(j, k))), target));
          f.relations.push_back(rel("[lambda,rho^-1]^-1" + t, inverse(commutator(L(i, j), R(j, k, -1))), target));
        }
    fams.push_back(std::move(f));
  }
  {
    RelationFamily f{"order-four",
                     "rho_ij rho_ji^-1 lambda_ij = lambda_ij lambda_ji^-1 rho_ij, (rho_ij rho_ji^-1 lambda_ij)^4 = 1",
                     0, {}};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        ++f.tuple_count;
        const auto t = idx({i, j});
        const GenWord w = concat({R(i, j), R(j, i, -1), L(i, j)});
        f.relations.push_back(rel("swap" + t, w, concat({L(i, j), L(j, i, -1), R(i, j)})));
        f.relations.push_back(rel("fourth-power" + t, power(w, 4)));
      }
    fams.push_back(std::move(f));
  }
  {
    RelationFamily f{"eps-commute", "[eps_1,rho_ij] = [eps_1,lambda_ij] = 1, i,j != 1", 0, {}};
    for (int i = 2; i <= n; ++i)
      for (int j = 2; j <= n; ++j) {
        if (i == j) continue;
        ++f.tuple_count;
        const auto t = idx({i, j});
        f.relations.push_back(rel("[eps_1,rho]" + t, commutator(E1(), R(i, j))));
        f.relations.push_back(rel("[eps_1,lambda]" + t, commutator(E1(), L(i, j))));
      }
    fams.push_back(std::move(f));
  }
  {
    RelationFamily f{"eps-conjugation", "rho_12^eps_1 = lambda_12^-1, rho_21^eps_1 = rho_21^-1", 1, {}};
    f.relations.push_back(rel("rho_12^eps_1", concat({E1(-1), R(1, 2), E1()}), L(1, 2, -1)));
    f.relations.push_back(rel("rho_21^eps_1", concat({E1(-1), R(2, 1), E1()}), R(2, 1, -1)));
    fams.push_back(std::move(f));
  }
  {
    RelationFamily f{"eps-involution", "eps_1^2 = 1", 1, {}};
    f.relations.push_back(rel("eps_1^2", power(E1(), 2)));
    fams.push_back(std::move(f));
  }
  {
    RelationFamily f{"partial-conjugation-product", "prod_{i != j} rho_ij lambda_ij^-1 = 1 for each j", 0, {}};
    for (int j = 1; j <= n; ++j) {
      ++f.tuple_count;
      GenWord w;
      for (int i = 1; i <= n; ++i) {
        if (i == j) continue;
        w = concat({w, R(i, j), L(i, j, -1)});
      }
      f.relations.push_back(rel("product" + idx({j}), w));
    }
    fams.push_back(std::move(f));
  }
  return fams;
}

bool GerstenReport::all_pass() const {
  return std::all_of(families.begin(), families.end(),
                     [](const FamilyResult& f) { return f.failures.empty(); });
}

GerstenReport verify_gersten(int n) {
  const auto fams = gersten_relations(n);
  struct Item {
    std::size_t family;
    const Relation* relation;
  };
  std::vector<Item> items;
  for (std::size_t f = 0; f < fams.size(); ++f)
    for (const auto& r : fams[f].relations) items.push_back({f, &r});

  std::vector<char> ok(items.size(), 0);
  const long long count = static_cast<long long>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    const Relation& r = *items[static_cast<std::size_t>(k)].relation;
    ok[static_cast<std::size_t>(k)] = outer_equal(evaluate(r.lhs, n), evaluate(r.rhs, n)) ? 1 : 0;
  }

  GerstenReport report;
  report.n = n;
  for (const auto& f : fams) {
    report.families.push_back({f.name, f.statement, f.tuple_count,
                               static_cast<int>(f.relations.size()), {}});
  }
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!ok[k]) report.families[items[k].family].failures.push_back(items[k].relation->label);
  }
  return report;
}

}  // namespace outfn
