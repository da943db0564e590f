#pragma once

// Gersten's presentation of Out(F_n), n >= 3, as explicit relation lists.
//
// Relations are words in named Nielsen generators so that they can be
// evaluated both as automorphisms (equality in Out) and in any matrix
// representation.

#include <string>
#include <vector>

#include "outfn/word.hpp"

namespace outfn {

struct GenLetter {
  NielsenKind kind;
  int i = 0;
  int j = 0;
  int exp = 1;  // +1 or -1

  GenLetter inverse() const { return {kind, i, j, -exp}; }
  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

using GenWord = std::vector<GenLetter>;

// "rho_1_2", "lambda_2_3", "eps_1", "sigma_1_2", "sigma_star_1", "delta".
std::string generator_name(NielsenKind kind, int i, int j);
std::string generator_name(const GenLetter& g);
// Inverse of generator_name; exp is always +1. Throws std::invalid_argument.
GenLetter parse_generator(const std::string& name);

GenWord inverse(const GenWord& w);
GenWord concat(std::initializer_list<GenWord> parts);
GenWord commutator(const GenWord& g, const GenWord& h);
GenWord power(const GenWord& w, int k);
std::string to_string(const GenWord& w);

Automorphism evaluate(const GenWord& w, int n);

struct Relation {
  std::string label;
  GenWord lhs;
  GenWord rhs;  // empty means the identity

  GenWord relator() const { return concat({lhs, inverse(rhs)}); }
};

struct RelationFamily {
  std::string name;
  std::string statement;
  int tuple_count = 0;  // index tuples instantiated
  std::vector<Relation> relations;
};

// All nine relation families at rank n. Throws std::invalid_argument if n < 3.
std::vector<RelationFamily> gersten_relations(int n);

struct FamilyResult {
  std::string name;
  std::string statement;
  int tuple_count = 0;
  int relation_count = 0;
  std::vector<std::string> failures;
};

struct GerstenReport {
  int n = 0;
  std::vector<FamilyResult> families;
  bool all_pass() const;
};

// Checks every relation as an equality in Out(F_n). Relations are checked
// in parallel; the report order is fixed.
GerstenReport verify_gersten(int n);

}  // namespace outfn
