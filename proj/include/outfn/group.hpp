#pragma once

// Finite group descriptors: generator names plus defining relations, with
// permutation realizations for the symmetric and alternating groups.

#include <string>
#include <vector>

namespace outfn {

struct RelLetter {
  int gen = 0;  // index into GroupDescriptor::generators
  int exp = 1;
  friend bool operator==(const RelLetter&, const RelLetter&) = default;
};
using RelWord = std::vector<RelLetter>;

struct GroupDescriptor {
  std::string name;
  std::vector<std::string> generators;
  std::vector<RelWord> relations;
  // Only used to decide which lemma checks apply; never inferred.
  bool perfect = false;

  // Throws std::invalid_argument for unknown names.
  int index_of(const std::string& generator) const;
  // Tokens are generator names, optionally suffixed "^-1" (or "^k").
  RelWord parse_word(const std::vector<std::string>& tokens) const;
  std::vector<std::string> format_word(const RelWord& w) const;
  std::string word_string(const RelWord& w) const;
};

// Evaluate a relation word; gen(index) gives the image of a generator and
// inv(index) the image of its inverse.
template <class T, class Gen, class Inv, class Mul>
T evaluate_word(const RelWord& w, T identity, Gen&& gen, Inv&& inv, Mul&& mul) {
  T out = std::move(identity);
  for (const RelLetter& l : w) {
    const int reps = l.exp < 0 ? -l.exp : l.exp;
    for (int k = 0; k < reps; ++k) out = mul(out, l.exp < 0 ? inv(l.gen) : gen(l.gen));
  }
  return out;
}

// 0-based permutation of {0..size-1}; image[i] is where i goes.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int size);
  static Permutation transposition(int size, int a, int b);
  static Permutation cycle(int size, std::initializer_list<int> points);
  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// a∘b: b first.
Permutation operator*(const Permutation& a, const Permutation& b);

namespace groups {

// S_n on s_1..s_{n-1}, s_i = (i i+1), Coxeter relations.
GroupDescriptor symmetric(int n);
std::vector<Permutation> symmetric_generators(int n);

// A_n (n >= 3) on x_1..x_{n-2}, x_i = (1 2 i+2); relations x_i^3 and
// (x_i x_j)^2. Flagged perfect for n >= 5.
GroupDescriptor alternating(int n);
std::vector<Permutation> alternating_generators(int n);

// W_n = Z_2^n ⋊ S_n on eps_1..eps_n and sigma_i_{i+1}.
GroupDescriptor hyperoctahedral(int n);

// W_n together with every rho_i_j, with the relations among them that hold
// in Out(F_n): the generator set a representation needs for the
// eigenspace-containment check.
GroupDescriptor out_fragment(int n);

// G_n = Z_2 x S_{n+1} on delta and s_1..s_n.
GroupDescriptor cage_group(int n);

// B_n = <A_{n+1}, xi> on x_1..x_{n-1} and xi, where xi is central for n even
// and conjugates x_i to x_i^{-1} (like the transposition (1 2)) for n odd.
GroupDescriptor b_group(int n);

GroupDescriptor cyclic(int order, const std::string& generator = "t");
GroupDescriptor trivial();

// "S4", "A5", "W4", "OutW4", "G3", "B4", "Z2", "trivial". Throws
// std::invalid_argument for anything else.
GroupDescriptor by_name(const std::string& name);

}  // namespace groups

}  // namespace outfn
