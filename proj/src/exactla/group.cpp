#include "outfn/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace outfn {

int GroupDescriptor::index_of(const std::string& generator) const {
  const auto it = std::find(generators.begin(), generators.end(), generator);
  if (it == generators.end()) {
    throw std::invalid_argument("group " + name + " has no generator \"" + generator + "\"");
  }
  return static_cast<int>(it - generators.begin());
}

RelWord GroupDescriptor::parse_word(const std::vector<std::string>& tokens) const {
  RelWord w;
  for (const auto& tok : tokens) {
    const auto caret = tok.find('^');
    int exp = 1;
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        exp = std::stoi(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in relation token \"" + tok + "\"");
      }
      if (exp == 0) continue;
    }
    w.push_back({index_of(tok.substr(0, caret)), exp});
  }
  return w;
}

std::vector<std::string> GroupDescriptor::format_word(const RelWord& w) const {
  std::vector<std::string> out;
  for (const auto& l : w) {
    std::string s = generators.at(static_cast<std::size_t>(l.gen));
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
    out.push_back(s);
  }
  return out;
}

std::string GroupDescriptor::word_string(const RelWord& w) const {
  std::string s;
  for (const auto& t : format_word(w)) s += (s.empty() ? "" : " ") + t;
  return s.empty() ? "1" : s;
}

Permutation Permutation::identity(int size) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) p.image[static_cast<std::size_t>(i)] = i;
  return p;
}

Permutation Permutation::transposition(int size, int a, int b) {
  Permutation p = identity(size);
  std::swap(p.image.at(static_cast<std::size_t>(a)), p.image.at(static_cast<std::size_t>(b)));
  return p;
}

Permutation Permutation::cycle(int size, std::initializer_list<int> points) {
  Permutation p = identity(size);
  const std::vector<int> pts(points);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    p.image.at(static_cast<std::size_t>(pts[k])) = pts[(k + 1) % pts.size()];
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int i = 0; i < size(); ++i) p.image[static_cast<std::size_t>((*this)(i))] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Permutation::sign() const {
  std::vector<char> seen(image.size(), 0);
  int s = 1;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation product: size mismatch");
  Permutation p = b;
  for (auto& x : p.image) x = a(x);
  return p;
}

namespace groups {

namespace {

std::string idx(int i) { return std::to_string(i); }

RelWord w(std::initializer_list<RelLetter> letters) { return RelWord(letters); }

// Coxeter relations for S_{m} on generator indices offset..offset+m-2.
void add_coxeter(std::vector<RelWord>& rels, int m, int offset) {
  for (int i = 0; i + 1 < m; ++i) {
    rels.push_back(w({{offset + i, 2}}));
    for (int j = i + 1; j + 1 < m; ++j) {
      if (j == i + 1) {
        rels.push_back(w({{offset + i, 1}, {offset + j, 1}, {offset + i, 1}, {offset + j, 1},
                          {offset + i, 1}, {offset + j, 1}}));
      } else {
        rels.push_back(w({{offset + i, 1}, {offset + j, 1}, {offset + i, 1}, {offset + j, 1}}));
      }
    }
  }
}

void add_carmichael(std::vector<RelWord>& rels, int count, int offset) {
  for (int i = 0; i < count; ++i) {
    rels.push_back(w({{offset + i, 3}}));
    for (int j = i + 1; j < count; ++j) {
      rels.push_back(w({{offset + i, 1}, {offset + j, 1}, {offset + i, 1}, {offset + j, 1}}));
    }
  }
}

void check_degree(int n, int minimum, const char* what) {
  if (n < minimum) throw std::invalid_argument(std::string(what) + ": degree too small");
}

}  // namespace

GroupDescriptor symmetric(int n) {
  check_degree(n, 1, "symmetric group");
  GroupDescriptor g;
  g.name = "S" + idx(n);
  for (int i = 1; i < n; ++i) g.generators.push_back("s_" + idx(i));
  add_coxeter(g.relations, n, 0);
  return g;
}

std::vector<Permutation> symmetric_generators(int n) {
  std::vector<Permutation> out;
  for (int i = 0; i + 1 < n; ++i) out.push_back(Permutation::transposition(n, i, i + 1));
  return out;
}

GroupDescriptor alternating(int n) {
  check_degree(n, 3, "alternating group");
  GroupDescriptor g;
  g.name = "A" + idx(n);
  for (int i = 1; i <= n - 2; ++i) g.generators.push_back("x_" + idx(i));
  add_carmichael(g.relations, n - 2, 0);
  g.perfect = n >= 5;
  return g;
}

std::vector<Permutation> alternating_generators(int n) {
  check_degree(n, 3, "alternating group");
  std::vector<Permutation> out;
  for (int i = 1; i <= n - 2; ++i) out.push_back(Permutation::cycle(n, {0, 1, i + 1}));
  return out;
}

GroupDescriptor hyperoctahedral(int n) {
  check_degree(n, 1, "hyperoctahedral group");
  GroupDescriptor g;
  g.name = "W" + idx(n);
  for (int i = 1; i <= n; ++i) g.generators.push_back("eps_" + idx(i));
  for (int i = 1; i < n; ++i) g.generators.push_back("sigma_" + idx(i) + "_" + idx(i + 1));
  const auto e = [](int i) { return i - 1; };
  const auto s = [n](int i) { return n + i - 1; };
  for (int i = 1; i <= n; ++i) {
    g.relations.push_back(w({{e(i), 2}}));
    for (int j = i + 1; j <= n; ++j) {
      g.relations.push_back(w({{e(i), 1}, {e(j), 1}, {e(i), -1}, {e(j), -1}}));
    }
  }
  add_coxeter(g.relations, n, n);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i) {
        g.relations.push_back(w({{s(i), 1}, {e(i), 1}, {s(i), 1}, {e(i + 1), -1}}));
      } else if (j != i + 1) {
        g.relations.push_back(w({{s(i), 1}, {e(j), 1}, {s(i), 1}, {e(j), -1}}));
      }
    }
  }
  return g;
}

GroupDescriptor out_fragment(int n) {
  check_degree(n, 3, "Out fragment");
  GroupDescriptor g = hyperoctahedral(n);
  g.name = "OutW" + idx(n);
  const int base = static_cast<int>(g.generators.size());
  const auto r = [base, n](int i, int j) { return base + (i - 1) * (n - 1) + (j < i ? j - 1 : j - 2); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) g.generators.push_back("rho_" + idx(i) + "_" + idx(j));
  const auto e = [](int i) { return i - 1; };
  const auto s = [n](int i) { return n + i - 1; };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      // rho_ij^{eps_j} = rho_ij^{-1}
      g.relations.push_back(w({{e(j), 1}, {r(i, j), 1}, {e(j), 1}, {r(i, j), 1}}));
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        g.relations.push_back(w({{r(i, j), 1}, {e(k), 1}, {r(i, j), -1}, {e(k), -1}}));
        // [rho_ij^-1, rho_jk^-1] = rho_ik^-1
        g.relations.push_back(w({{r(i, j), -1}, {r(j, k), -1}, {r(i, j), 1}, {r(j, k), 1}, {r(i, k), 1}}));
        for (int l = 1; l <= n; ++l) {
          if (l == i || l == k) continue;
          g.relations.push_back(w({{r(i, j), 1}, {r(k, l), 1}, {r(i, j), -1}, {r(k, l), -1}}));
        }
      }
      for (int t = 1; t < n; ++t) {
        const auto swap = [t](int x) { return x == t ? t + 1 : (x == t + 1 ? t : x); };
        g.relations.push_back(w({{s(t), 1}, {r(i, j), 1}, {s(t), 1}, {r(swap(i), swap(j)), -1}}));
      }
    }
  return g;
}

GroupDescriptor cage_group(int n) {
  check_degree(n, 1, "cage group");
  GroupDescriptor g;
  g.name = "G" + idx(n);
  g.generators.push_back("delta");
  for (int i = 1; i <= n; ++i) g.generators.push_back("s_" + idx(i));
  g.relations.push_back(w({{0, 2}}));
  for (int i = 1; i <= n; ++i) g.relations.push_back(w({{0, 1}, {i, 1}, {0, -1}, {i, -1}}));
  add_coxeter(g.relations, n + 1, 1);
  return g;
}

GroupDescriptor b_group(int n) {
  check_degree(n, 2, "B group");
  GroupDescriptor g;
  g.name = "B" + idx(n);
  for (int i = 1; i <= n - 1; ++i) g.generators.push_back("x_" + idx(i));
  g.generators.push_back("xi");
  const int xi = n - 1;
  add_carmichael(g.relations, n - 1, 0);
  g.relations.push_back(w({{xi, 2}}));
  for (int i = 0; i < n - 1; ++i) {
    if (n % 2 == 0) {
      g.relations.push_back(w({{xi, 1}, {i, 1}, {xi, -1}, {i, -1}}));
    } else {
      g.relations.push_back(w({{xi, 1}, {i, 1}, {xi, -1}, {i, 1}}));
    }
  }
  return g;
}

GroupDescriptor cyclic(int order, const std::string& generator) {
  if (order < 1) throw std::invalid_argument("cyclic group order must be positive");
  GroupDescriptor g;
  g.name = "Z" + idx(order);
  g.generators.push_back(generator);
  g.relations.push_back(w({{0, order}}));
  return g;
}

GroupDescriptor trivial() {
  GroupDescriptor g;
  g.name = "trivial";
  g.perfect = true;
  return g;
}

GroupDescriptor by_name(const std::string& name) {
  if (name == "trivial") return trivial();
  if (name == "Z2") return cyclic(2);
  const auto number = [&](std::size_t from) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(name.substr(from), &used);
      if (used == name.size() - from) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("unknown group \"" + name + "\"");
  };
  if (name.rfind("OutW", 0) == 0) return out_fragment(number(4));
  if (!name.empty()) {
    switch (name[0]) {
      case 'S': return symmetric(number(1));
      case 'A': return alternating(number(1));
      case 'W': return hyperoctahedral(number(1));
      case 'G': return cage_group(number(1));
      case 'B': return b_group(number(1));
      default: break;
    }
  }
  throw std::invalid_argument("unknown group \"" + name + "\"");
}

}  // namespace groups

}  // namespace outfn
