#pragma once

// Free group words and automorphisms of F_n.
//
// Letters are nonzero integers: +i is a_i, -i is a_i^{-1}. Every Word is kept
// freely reduced and carries the rank of its ambient free group.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace outfn {

class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Word {
 public:
  explicit Word(int rank = 1);

  // Free reduction of an arbitrary letter sequence. Throws RankError if any
  // index falls outside 1..rank.
  static Word reduce(int rank, std::span<const int> letters);
  static Word reduce(int rank, std::initializer_list<int> letters) {
    return reduce(rank, std::span<const int>(letters.begin(), letters.size()));
  }
  static Word generator(int rank, int i) { return reduce(rank, {i}); }

  int rank() const { return rank_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(int k) const;

  // Concatenate and reduce. Ranks must match.
  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;

  // "a1 a2^-1"; empty word prints as "1".
  std::string str() const;

 private:
  Word(int rank, std::vector<int> reduced) : rank_(rank), letters_(std::move(reduced)) {}

  int rank_;
  std::vector<int> letters_;
};

void check_rank(int expected, int actual, const char* what);

// Substitute images[i-1] for a_i (and its inverse for a_i^{-1}), then reduce.
// The image rank may differ from the word rank; this is how homomorphisms
// F_k -> F_n are applied.
Word substitute(std::span<const Word> images, const Word& w);

// Endomorphism of F_n given by generator images.
class Endomorphism {
 public:
  explicit Endomorphism(std::vector<Word> images);
  static Endomorphism identity(int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  Word apply(const Word& w) const;
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

// f∘g: g first, then f.
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);
bool fixes_generators(const Endomorphism& e);

// An automorphism with a certified inverse.
class Automorphism {
 public:
  // Throws std::invalid_argument unless forward and backward compose to the
  // identity in both orders.
  Automorphism(Endomorphism forward, Endomorphism backward);
  static Automorphism identity(int rank);

  int rank() const { return forward_.rank(); }
  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& backward() const { return backward_; }

  Word apply(const Word& w) const { return forward_.apply(w); }
  Automorphism inverse() const;
  Automorphism pow(int k) const;

  // Conjugation g^h = h^{-1} g h.
  Automorphism conj(const Automorphism& h) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.forward_ == b.forward_;
  }

 private:
  struct Unchecked {};
  Automorphism(Endomorphism forward, Endomorphism backward, Unchecked)
      : forward_(std::move(forward)), backward_(std::move(backward)) {}
  friend Automorphism compose(const Automorphism&, const Automorphism&);

  Endomorphism forward_;
  Endomorphism backward_;
};

Automorphism compose(const Automorphism& f, const Automorphism& g);
inline Automorphism operator*(const Automorphism& f, const Automorphism& g) {
  return compose(f, g);
}
// [g,h] = g h g^{-1} h^{-1}
Automorphism commutator(const Automorphism& g, const Automorphism& h);

enum class NielsenKind { rho, lambda, eps, sigma, sigma_star, delta };

// Indices are 1-based. sigma_star(i) is the automorphism sigma_{i(n+1)}:
// a_i -> a_i^{-1}, a_j -> a_j a_i^{-1}. Arguments a kind does not use are
// ignored. Throws std::invalid_argument on bad index combinations.
Automorphism nielsen(NielsenKind kind, int i, int j, int n);

Automorphism rho(int i, int j, int n);
Automorphism lambda(int i, int j, int n);
Automorphism eps(int i, int n);
Automorphism sigma(int i, int j, int n);
Automorphism sigma_star(int i, int n);
Automorphism delta(int n);

// c_w(x) = w^{-1} x w.
Automorphism inner(const Word& w);

// Returns w with a = c_w, or nothing. Candidates come from factorizations of
// a(a_1) as w'^{-1} a_1 w', extended by a_1^t w' for |t| up to the longest
// generator image. For a = c_w with w = a_1^t w' the conjugate w^{-1} a_2 w
// has length at least 2|t|+1, so the bound never misses an inner automorphism.
std::optional<Word> is_inner(const Automorphism& a);

// Equality in Out(F_n).
bool outer_equal(const Automorphism& a, const Automorphism& b);

}  // namespace outfn
