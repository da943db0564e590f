#include "outfn/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "outfn/schur.hpp"

namespace outfn::json_io {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

const json& field(const json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  expect(v.is_number_integer(), std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string id_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument("ids must be strings or integers");
}

}  // namespace

json to_json(const Word& w) { return json(std::vector<int>(w.letters().begin(), w.letters().end())); }

Word word_from_json(const json& j, int rank) {
  expect(j.is_array(), "a word is an array of nonzero integers");
  std::vector<int> letters;
  for (const auto& x : j) {
    expect(x.is_number_integer() && x.get<int>() != 0, "a word is an array of nonzero integers");
    letters.push_back(x.get<int>());
  }
  return Word::reduce(rank, letters);
}

json to_json(const Automorphism& a) {
  json images = json::array(), inverse = json::array();
  for (const auto& w : a.forward().images()) images.push_back(to_json(w));
  for (const auto& w : a.backward().images()) inverse.push_back(to_json(w));
  return {{"n", a.rank()}, {"images", images}, {"inverse_images", inverse}};
}

Automorphism automorphism_from_json(const json& j) {
  const int n = int_field(j, "n");
  expect(n >= 1, "rank must be positive");
  const auto read = [&](const char* key) {
    const json& arr = field(j, key);
    expect(arr.is_array() && static_cast<int>(arr.size()) == n, std::string("\"") + key + "\" needs n words");
    std::vector<Word> ws;
    for (const auto& w : arr) ws.push_back(word_from_json(w, n));
    return Endomorphism(std::move(ws));
  };
  return Automorphism(read("images"), read("inverse_images"));
}

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  expect(j.is_string(), "rationals are strings \"p/q\" or integers");
  return parse_rational(j.get<std::string>());
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RationalMatrix matrix_from_json(const json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  expect(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
  const json& e = field(j, "entries");
  expect(e.is_array() && static_cast<int>(e.size()) == rows, "\"entries\" must have one array per row");
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = e[static_cast<std::size_t>(r)];
    expect(row.is_array() && static_cast<int>(row.size()) == cols, "matrix row has the wrong length");
    for (int c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json to_json(const GroupDescriptor& g) {
  json rels = json::array();
  for (const auto& r : g.relations) rels.push_back(g.format_word(r));
  return {{"name", g.name}, {"generators", g.generators}, {"relations", rels}, {"perfect", g.perfect}};
}

GroupDescriptor group_from_json(const json& j) {
  if (j.is_string()) return groups::by_name(j.get<std::string>());
  GroupDescriptor g;
  const json& name = field(j, "name");
  expect(name.is_string(), "group name must be a string");
  g.name = name.get<std::string>();
  const json& gens = field(j, "generators");
  expect(gens.is_array(), "\"generators\" must be an array of names");
  for (const auto& x : gens) {
    expect(x.is_string(), "generator names must be strings");
    g.generators.push_back(x.get<std::string>());
  }
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      expect(r.is_array(), "each relation is an array of generator tokens");
      std::vector<std::string> tokens;
      for (const auto& t : r) {
        expect(t.is_string(), "relation tokens must be strings");
        tokens.push_back(t.get<std::string>());
      }
      g.relations.push_back(g.parse_word(tokens));
    }
  }
  if (j.contains("perfect")) {
    expect(j.at("perfect").is_boolean(), "\"perfect\" must be a boolean");
    g.perfect = j.at("perfect").get<bool>();
  }
  return g;
}

json to_json(const FiniteRep& r) {
  json gens = json::object();
  for (std::size_t k = 0; k < r.matrices.size(); ++k) gens[r.group.generators[k]] = to_json(r.matrices[k]);
  return {{"group", to_json(r.group)}, {"dim", r.dim}, {"generators", gens}};
}

FiniteRep rep_from_json(const json& j) {
  FiniteRep r;
  r.group = group_from_json(field(j, "group"));
  r.dim = int_field(j, "dim");
  expect(r.dim >= 0, "dimension must be nonnegative");
  const json& gens = field(j, "generators");
  expect(gens.is_object(), "\"generators\" must map names to matrices");
  for (const auto& name : r.group.generators) {
    expect(gens.contains(name), "no matrix for generator \"" + name + "\"");
    r.matrices.push_back(matrix_from_json(gens.at(name)));
  }
  for (const auto& [name, m] : gens.items()) r.group.index_of(name);
  return r;
}

json to_json(const Graph& g) {
  json vs = json::array(), es = json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vs.push_back(g.vertex_name(v));
  for (int e = 0; e < g.num_edges(); ++e)
    es.push_back({{"id", g.edge_name(e)}, {"iota", g.vertex_name(g.iota(e))}, {"tau", g.vertex_name(g.tau(e))}});
  return {{"vertices", vs}, {"edges", es}};
}

Graph graph_from_json(const json& j) {
  Graph g;
  const json& vs = field(j, "vertices");
  expect(vs.is_array(), "\"vertices\" must be an array");
  for (const auto& v : vs) {
    const std::string name = id_string(v);
    bool dup = true;
    try {
      g.vertex_index(name);
    } catch (const std::invalid_argument&) {
      dup = false;
    }
    expect(!dup, "duplicate vertex \"" + name + "\"");
    g.add_vertex(name);
  }
  const json& es = field(j, "edges");
  expect(es.is_array(), "\"edges\" must be an array");
  for (const auto& e : es) {
    const std::string name = id_string(field(e, "id"));
    bool dup = true;
    try {
      g.edge_index(name);
    } catch (const std::invalid_argument&) {
      dup = false;
    }
    expect(!dup, "duplicate edge \"" + name + "\"");
    g.add_edge(g.vertex_index(id_string(field(e, "iota"))), g.vertex_index(id_string(field(e, "tau"))), name);
  }
  return g;
}

json to_json(const GraphAction& a) {
  json maps = json::object();
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const auto& m = a.maps[k];
    json vm = json::object(), em = json::object(), fl = json::object();
    for (int v = 0; v < a.graph.num_vertices(); ++v)
      vm[a.graph.vertex_name(v)] = a.graph.vertex_name(m.vertex_map[static_cast<std::size_t>(v)]);
    for (int e = 0; e < a.graph.num_edges(); ++e) {
      em[a.graph.edge_name(e)] = a.graph.edge_name(m.edge_map[static_cast<std::size_t>(e)]);
      fl[a.graph.edge_name(e)] = static_cast<bool>(m.flip[static_cast<std::size_t>(e)]);
    }
    maps[a.group.generators[k]] = {{"vertex_map", vm}, {"edge_map", em}, {"flips", fl}};
  }
  return {{"group", to_json(a.group)}, {"maps", maps}};
}

GraphAction action_from_json(const json& j, const Graph& g) {
  GraphAction a;
  a.graph = g;
  a.group = group_from_json(field(j, "group"));
  const json& maps = field(j, "maps");
  expect(maps.is_object(), "\"maps\" must be an object keyed by generator");
  for (const auto& gen : a.group.generators) {
    expect(maps.contains(gen), "no map for generator \"" + gen + "\"");
    const json& m = maps.at(gen);
    GraphAut aut = GraphAut::identity(g);
    // Unlisted vertices and edges are fixed.
    if (m.contains("vertex_map"))
      for (const auto& [from, to] : m.at("vertex_map").items())
        aut.vertex_map[static_cast<std::size_t>(g.vertex_index(from))] = g.vertex_index(id_string(to));
    if (m.contains("edge_map"))
      for (const auto& [from, to] : m.at("edge_map").items())
        aut.edge_map[static_cast<std::size_t>(g.edge_index(from))] = g.edge_index(id_string(to));
    if (m.contains("flips"))
      for (const auto& [edge, f] : m.at("flips").items()) {
        expect(f.is_boolean(), "flips must be booleans");
        aut.flip[static_cast<std::size_t>(g.edge_index(edge))] = f.get<bool>();
      }
    a.maps.push_back(std::move(aut));
  }
  return a;
}

json to_json(const InducedRep& rep) {
  json cosets = json::array();
  for (const auto& s : rep.transversal().cosets) cosets.push_back(s.bits);
  json gens = json::object();
  for (const auto& [name, m] : rep.generator_matrices()) gens[name] = to_json(m);
  return {{"n", rep.n()}, {"mu", to_string(rep.mu())}, {"m", rep.m()}, {"cosets", cosets}, {"generators", gens}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  expect(static_cast<bool>(in), "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace outfn::json_io
