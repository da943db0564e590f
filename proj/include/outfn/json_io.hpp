#pragma once

// JSON encodings shared by the command-line tool and its tests. Malformed
// input raises std::invalid_argument.

#include <json.hpp>

#include "outfn/glrep.hpp"
#include "outfn/graph.hpp"
#include "outfn/rep.hpp"
#include "outfn/word.hpp"

namespace outfn::json_io {

using nlohmann::json;

json to_json(const Word& w);
Word word_from_json(const json& j, int rank);

json to_json(const Automorphism& a);
Automorphism automorphism_from_json(const json& j);

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

json to_json(const GroupDescriptor& g);
// An object as produced by to_json, or a name accepted by groups::by_name.
GroupDescriptor group_from_json(const json& j);

json to_json(const FiniteRep& r);
FiniteRep rep_from_json(const json& j);

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const GraphAction& a);
// Needs the graph the maps refer to.
GraphAction action_from_json(const json& j, const Graph& g);

json to_json(const InducedRep& rep);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace outfn::json_io
