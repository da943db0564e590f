#include <algorithm>
#include <cstdlib>
#include <string>

#include "outfn/word.hpp"

namespace outfn {

Endomorphism::Endomorphism(std::vector<Word> images)
    : rank_(static_cast<int>(images.size())), images_(std::move(images)) {
  if (rank_ < 1) throw RankError("endomorphism needs at least one generator");
  for (const Word& w : images_) check_rank(rank_, w.rank(), "endomorphism image");
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return Endomorphism(std::move(images));
}

Word Endomorphism::apply(const Word& w) const {
  check_rank(rank_, w.rank(), "apply");
  return substitute(images_, w);
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  check_rank(f.rank(), g.rank(), "compose");
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const Word& w : g.images()) images.push_back(f.apply(w));
  return Endomorphism(std::move(images));
}

bool fixes_generators(const Endomorphism& e) {
  for (int i = 1; i <= e.rank(); ++i) {
    if (e.image(i) != Word::generator(e.rank(), i)) return false;
  }
  return true;
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  check_rank(forward_.rank(), backward_.rank(), "automorphism");
  if (!fixes_generators(compose(forward_, backward_)) ||
      !fixes_generators(compose(backward_, forward_))) {
    throw std::invalid_argument("supplied inverse does not invert the automorphism");
  }
}

Automorphism Automorphism::identity(int rank) {
  return Automorphism(Endomorphism::identity(rank), Endomorphism::identity(rank), Unchecked{});
}

Automorphism Automorphism::inverse() const { return Automorphism(backward_, forward_, Unchecked{}); }

Automorphism Automorphism::pow(int k) const {
  const Automorphism base = k < 0 ? inverse() : *this;
  Automorphism out = identity(rank());
  for (int t = 0; t < std::abs(k); ++t) out = compose(out, base);
  return out;
}

Automorphism Automorphism::conj(const Automorphism& h) const {
  return compose(compose(h.inverse(), *this), h);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return Automorphism(compose(f.forward_, g.forward_), compose(g.backward_, f.backward_),
                      Automorphism::Unchecked{});
}

Automorphism commutator(const Automorphism& g, const Automorphism& h) {
  return g * h * g.inverse() * h.inverse();
}

namespace {

void check_index(int i, int n, const char* what) {
  if (n < 1) throw RankError("rank must be at least 1");
  if (i < 1 || i > n) {
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                " outside 1.." + std::to_string(n));
  }
}

void check_pair(int i, int j, int n, const char* what) {
  check_index(i, n, what);
  check_index(j, n, what);
  if (i == j) throw std::invalid_argument(std::string(what) + ": indices must differ");
}

std::vector<Word> generators(int n) { return Endomorphism::identity(n).images(); }

}  // namespace

Automorphism rho(int i, int j, int n) {
  check_pair(i, j, n, "rho");
  auto fwd = generators(n);
  auto bwd = generators(n);
  fwd[i - 1] = Word::reduce(n, {i, j});
  bwd[i - 1] = Word::reduce(n, {i, -j});
  return Automorphism(Endomorphism(fwd), Endomorphism(bwd));
}

Automorphism lambda(int i, int j, int n) {
  check_pair(i, j, n, "lambda");
  auto fwd = generators(n);
  auto bwd = generators(n);
  fwd[i - 1] = Word::reduce(n, {j, i});
  bwd[i - 1] = Word::reduce(n, {-j, i});
  return Automorphism(Endomorphism(fwd), Endomorphism(bwd));
}

Automorphism eps(int i, int n) {
  check_index(i, n, "eps");
  auto img = generators(n);
  img[i - 1] = Word::reduce(n, {-i});
  return Automorphism(Endomorphism(img), Endomorphism(img));
}

Automorphism sigma(int i, int j, int n) {
  check_pair(i, j, n, "sigma");
  auto img = generators(n);
  std::swap(img[i - 1], img[j - 1]);
  return Automorphism(Endomorphism(img), Endomorphism(img));
}

Automorphism sigma_star(int i, int n) {
  check_index(i, n, "sigma_star");
  std::vector<Word> img;
  for (int k = 1; k <= n; ++k) {
    img.push_back(k == i ? Word::reduce(n, {-i}) : Word::reduce(n, {k, -i}));
  }
  // An involution: a_j a_i^{-1} -> a_j a_i^{-1} a_i = a_j.
  return Automorphism(Endomorphism(img), Endomorphism(img));
}

Automorphism delta(int n) {
  if (n < 1) throw RankError("rank must be at least 1");
  std::vector<Word> img;
  for (int k = 1; k <= n; ++k) img.push_back(Word::reduce(n, {-k}));
  return Automorphism(Endomorphism(img), Endomorphism(img));
}

Automorphism nielsen(NielsenKind kind, int i, int j, int n) {
  switch (kind) {
    case NielsenKind::rho: return rho(i, j, n);
    case NielsenKind::lambda: return lambda(i, j, n);
    case NielsenKind::eps: return eps(i, n);
    case NielsenKind::sigma: return sigma(i, j, n);
    case NielsenKind::sigma_star: return sigma_star(i, n);
    case NielsenKind::delta: return delta(n);
  }
  throw std::invalid_argument("unknown Nielsen generator");
}

Automorphism inner(const Word& w) {
  const int n = w.rank();
  std::vector<Word> fwd;
  std::vector<Word> bwd;
  const Word wi = w.inverse();
  for (int k = 1; k <= n; ++k) {
    const Word a = Word::generator(n, k);
    fwd.push_back(wi * a * w);
    bwd.push_back(w * a * wi);
  }
  return Automorphism(Endomorphism(fwd), Endomorphism(bwd));
}

std::optional<Word> is_inner(const Automorphism& a) {
  const int n = a.rank();
  const Endomorphism& f = a.forward();
  if (n == 1) {
    // Inn(F_1) is trivial.
    if (fixes_generators(f)) return Word(1);
    return std::nullopt;
  }

  // a(a_1) = w'^{-1} a_1 w' with w' the suffix after the middle letter.
  const Word& u1 = f.image(1);
  if (u1.size() % 2 == 0) return std::nullopt;
  const std::size_t half = u1.size() / 2;
  if (u1.letters()[half] != 1) return std::nullopt;
  const auto tail = u1.letters().subspan(half + 1);
  const Word core = Word::reduce(n, tail);
  if (core.inverse() * Word::generator(n, 1) * core != u1) return std::nullopt;

  std::size_t bound = 0;
  for (const Word& img : f.images()) bound = std::max(bound, img.size());
  const Word a1 = Word::generator(n, 1);
  const int t_max = static_cast<int>(bound);
  for (int t = 0; t <= t_max; ++t) {
    for (int sign : {1, -1}) {
      if (t == 0 && sign < 0) continue;
      const Word w = a1.pow(sign * t) * core;
      const Word wi = w.inverse();
      bool ok = true;
      for (int k = 2; k <= n && ok; ++k) {
        ok = f.image(k) == wi * Word::generator(n, k) * w;
      }
      if (ok) return w;
    }
  }
  return std::nullopt;
}

bool outer_equal(const Automorphism& a, const Automorphism& b) {
  check_rank(a.rank(), b.rank(), "outer_equal");
  return is_inner(compose(a, b.inverse())).has_value();
}

}  // namespace outfn
