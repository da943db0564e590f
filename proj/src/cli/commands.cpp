#include "outfn/commands.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "outfn/abelian.hpp"
#include "outfn/admissible.hpp"
#include "outfn/characters.hpp"
#include "outfn/double_tree.hpp"
#include "outfn/gersten.hpp"
#include "outfn/glrep.hpp"
#include "outfn/graph_builtin.hpp"
#include "outfn/homology.hpp"
#include "outfn/json_io.hpp"
#include "outfn/loops.hpp"
#include "outfn/rep_builtin.hpp"
#include "outfn/report.hpp"

namespace outfn::cli {

namespace {

using nlohmann::json;

struct Config {
  int n = 0;
  std::string mu;
  std::string json_path;
  int jobs = 1;
  std::string builtin;
  std::string rep_file;
  std::string matrices_path;
  std::string group;
  std::string xi;
  std::string graph_file;
  std::string action_file;
  std::string edges;
};

json parameters(const Config& c) {
  json p = json::object();
  if (c.n) p["n"] = c.n;
  p["jobs"] = c.jobs;
  const std::pair<const char*, const std::string*> strings[] = {
      {"mu", &c.mu},       {"builtin", &c.builtin},         {"rep", &c.rep_file},      {"matrices", &c.matrices_path},
      {"group", &c.group}, {"xi", &c.xi},                   {"graph", &c.graph_file},  {"action", &c.action_file},
      {"edges", &c.edges}};
  for (const auto& [key, value] : strings)
    if (!value->empty()) p[key] = *value;
  return p;
}

void require_n(const Config& c, int lo, int hi) {
  if (c.n < lo || c.n > hi) {
    throw std::invalid_argument("--n must be between " + std::to_string(lo) + " and " + std::to_string(hi));
  }
}

std::string plural(long long k, const std::string& noun) { return std::to_string(k) + " " + noun + (k == 1 ? "" : "s"); }

json names(const std::vector<int>& ids, const std::function<std::string(int)>& name) {
  json out = json::array();
  for (int id : ids) out.push_back(name(id));
  return out;
}

// ---------------------------------------------------------------- gersten

Report cmd_gersten(const Config& c) {
  require_n(c, 3, 8);
  Report report("gersten", parameters(c));
  for (const auto& f : verify_gersten(c.n).families) {
    report.add(f.name, f.failures.empty(),
               {{"summary", plural(f.relation_count, "relation") + " from " + plural(f.tuple_count, "index tuple")},
                {"statement", f.statement},
                {"tuple_count", f.tuple_count},
                {"relation_count", f.relation_count},
                {"failures", f.failures}});
  }
  return report;
}

// -------------------------------------------------------------- decompose

Report cmd_decompose(const Config& c) {
  if (c.rep_file.empty() == c.builtin.empty()) throw std::invalid_argument("decompose needs exactly one of --rep, --builtin");
  const FiniteRep rep = c.rep_file.empty() ? builtin::rep_by_name(c.builtin)
                                           : json_io::rep_from_json(json_io::read_file(c.rep_file));
  require_valid(rep);

  int n = 0;
  while (rep.has("eps_" + std::to_string(n + 1))) ++n;
  if (n == 0) throw std::invalid_argument("representation has no eps_1 generator");
  if (c.n && c.n != n) throw std::invalid_argument("--n disagrees with the representation's eps generators");

  Report report("decompose", parameters(c));
  report.add("relations", true,
             {{"summary", plural(static_cast<long long>(rep.group.relations.size()), "relation") + " of " + rep.group.name +
                              " hold"},
              {"group", rep.group.name},
              {"dim", rep.dim}});

  const EpsDecomposition d = eps_decomposition(rep, n);
  json spaces = json::object();
  for (const auto& [s, space] : d.spaces) spaces[subset_string(s)] = space.dim();
  const auto layers = d.layer_dims();
  report.add("eigenspace dimensions sum to the dimension", d.total_dim() == rep.dim,
             {{"summary", std::to_string(d.total_dim()) + " of " + std::to_string(rep.dim)}, {"E_I", spaces}, {"V_i", layers}});

  const auto div = divisibility_check(d);
  std::ostringstream layer_text;
  for (std::size_t i = 0; i < layers.size(); ++i) layer_text << (i ? " " : "") << "V_" << i << "=" << layers[i];
  report.add("binom(n,i) divides dim V_i", div.violations.empty(),
             {{"summary", layer_text.str()}, {"violations", div.violations}});
  report.add("dim E_I constant on each layer", div.uneven_layers.empty(), {{"uneven_layers", div.uneven_layers}});

  bool any_rho = false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::string name = "rho_" + std::to_string(i) + "_" + std::to_string(j);
      if (i == j || !rep.has(name)) continue;
      any_rho = true;
      report.add("diamond containment for " + name, check_diamond(rep[name], d, i, j));
    }
  if (!any_rho) report.skip("diamond containment", {{"summary", "no rho generators"}});
  return report;
}

// --------------------------------------------------------------- section4

Report cmd_section4(const Config& c) {
  require_n(c, 3, 6);
  const int n = c.n;
  Report report("section4", parameters(c));
  const Section4Report s = verify_section4_formulas(n);
  for (const auto& f : s.families) {
    json failures = json::array();
    for (const auto& fc : f.cases)
      if (!fc.match) failures.push_back({{"element", fc.element}, {"detail", fc.detail}});
    report.add(f.name, failures.empty(),
               {{"summary", plural(static_cast<long long>(f.cases.size()), "case")}, {"failures", failures}});
  }
  for (int i = 1; i <= n; ++i) {
    const RationalMatrix p = psi_prime(inner(Word::generator(n, i)));
    const RationalMatrix id = RationalMatrix::identity(p.rows());
    const bool ok = i == n ? p == -id : p == id;
    report.add("psi'(c_a" + std::to_string(i) + ") = " + (i == n ? "-I" : "I"), ok);
  }
  report.add("tau eigenspaces have dimensions (n, n-1)", s.tau_plus_dim == n && s.tau_minus_dim == n - 1,
             {{"summary", "+1: " + std::to_string(s.tau_plus_dim) + ", -1: " + std::to_string(s.tau_minus_dim)},
              {"plus", s.tau_plus_dim},
              {"minus", s.tau_minus_dim}});
  report.add("psi(c_a" + std::to_string(n) + ") = tau", s.psi_of_c_an_is_tau);
  return report;
}

// ----------------------------------------------------------------- induce

Report cmd_induce(const Config& c) {
  require_n(c, 3, 5);
  const Mu mu = c.mu.empty() ? (c.n == 3 ? Mu::symmetric : Mu::exterior) : parse_mu(c.mu);
  const InducedRep rep(c.n, mu);

  Config shown = c;
  shown.mu = to_string(mu);
  Report report("induce", parameters(shown));

  const long long cosets = (1LL << c.n) - 1;
  const long long block = mu == Mu::exterior ? binomial(c.n - 1, 2) : binomial(c.n, 2);
  report.add("dimension m = (2^n - 1) dim U", rep.m() == cosets * block,
             {{"summary", "m = " + std::to_string(rep.m())}, {"m", rep.m()}, {"cosets", cosets}, {"block_dim", rep.block_dim()}});

  const RelatorReport rel = check_relators(rep);
  json failures = json::array();
  for (const auto& f : rel.failures) failures.push_back({{"family", f.family}, {"label", f.label}});
  report.add("relators map to the identity", rel.failures.empty(),
             {{"summary", std::to_string(rel.checked - static_cast<int>(rel.failures.size())) + "/" +
                              std::to_string(rel.checked)},
              {"checked", rel.checked},
              {"failures", failures}});

  const Certificate cert = check_not_factoring(rep);
  const bool ok = cert.found && cert.in_ia && cert.nontrivial && cert.unipotent;
  std::string summary = "none found";
  if (cert.found) {
    summary = "theta(" + cert.element + ")" + (cert.power == 1 ? "" : "^" + std::to_string(cert.power)) +
              " unipotent, nilpotency index " + std::to_string(cert.nilpotency_index);
  }
  report.add("non-factoring certificate", ok,
             {{"summary", summary},
              {"element", cert.element},
              {"power", cert.power},
              {"in_ia", cert.in_ia},
              {"nontrivial", cert.nontrivial},
              {"unipotent", cert.unipotent},
              {"nilpotency_index", cert.nilpotency_index},
              {"tried", cert.tried},
              {"note", "certifies an infinite image of IA; faithfulness of U is not checked"}});

  if (!c.matrices_path.empty()) json_io::write_file(c.matrices_path, json_io::to_json(rep));
  return report;
}

// ------------------------------------------------------------------ graph

GraphAction load_action(const Config& c) {
  if (c.graph_file.empty() == c.builtin.empty()) throw std::invalid_argument("graph needs exactly one of --graph, --builtin");
  if (!c.group.empty() && !c.action_file.empty()) throw std::invalid_argument("give --group or --action, not both");
  if (!c.graph_file.empty() && !c.group.empty()) throw std::invalid_argument("--group only applies to --builtin graphs");
  GraphAction a;
  if (!c.action_file.empty()) {
    const Graph g = c.builtin.empty() ? json_io::graph_from_json(json_io::read_file(c.graph_file))
                                      : builtin::graph_by_name(c.builtin);
    a = json_io::action_from_json(json_io::read_file(c.action_file), g);
  } else if (!c.builtin.empty()) {
    a = builtin::action_by_name(c.builtin, c.group.empty() ? "trivial" : c.group);
  } else {
    a = builtin::trivial_action(json_io::graph_from_json(json_io::read_file(c.graph_file)), groups::trivial());
  }
  require_valid(a);
  return a;
}

json edge_names(const Graph& g, const std::vector<int>& edges) {
  return names(edges, [&](int e) { return g.edge_name(e); });
}

json vertex_names(const Graph& g, const std::vector<int>& vertices) {
  return names(vertices, [&](int v) { return g.vertex_name(v); });
}

// m(e) from the full list of simple loops, and the first (edge, endpoint)
// whose other incident edges all have a different m-value.
std::optional<ObstructionWitness> witness_from_loops(const Graph& g) {
  std::vector<int> m(static_cast<std::size_t>(g.num_edges()), 0);
  for (const auto& l : simple_loops(g))
    for (const auto& s : l.steps) {
      auto& best = m[static_cast<std::size_t>(s.edge)];
      if (best == 0 || l.length() < best) best = l.length();
    }
  for (int e = 0; e < g.num_edges(); ++e)
    for (int x : {g.iota(e), g.tau(e)}) {
      bool distinct = true;
      for (int f = 0; f < g.num_edges() && distinct; ++f) {
        if (f == e || (g.iota(f) != x && g.tau(f) != x)) continue;
        distinct = m[static_cast<std::size_t>(f)] != m[static_cast<std::size_t>(e)];
      }
      if (distinct) return ObstructionWitness{e, x};
    }
  return std::nullopt;
}

Report graph_admissible(const Config& c, const GraphAction& a) {
  Report report("graph admissible", parameters(c));
  const Graph& g = a.graph;
  const auto adm = check_admissible(a);
  report.add("connected", adm.connected, {{"components", g.components()}});
  report.add("no valence-two vertices", adm.valence_two_vertices.empty(),
             {{"vertices", vertex_names(g, adm.valence_two_vertices)}});
  json orbits = json::array();
  for (const auto& o : adm.orbits) orbits.push_back(edge_names(g, o));
  json forests = json::array();
  for (auto mask : adm.invariant_forests) {
    std::vector<int> edges;
    for (std::size_t k = 0; k < adm.orbits.size(); ++k)
      if (mask & (1u << k)) edges.insert(edges.end(), adm.orbits[k].begin(), adm.orbits[k].end());
    std::sort(edges.begin(), edges.end());
    forests.push_back(edge_names(g, edges));
  }
  report.add("no invariant nontrivial forest", adm.invariant_forests.empty(),
             {{"summary", plural(static_cast<long long>(adm.orbits.size()), "edge orbit") + ", " +
                              plural(static_cast<long long>(adm.invariant_forests.size()), "invariant forest")},
              {"orbits", orbits},
              {"forests", forests}});

  const auto obs = admissibility_obstruction(g);
  if (!obs.separating_edges.empty()) {
    report.skip("loop-length witness", {{"summary", "graph has separating edges"},
                                        {"separating_edges", edge_names(g, obs.separating_edges)}});
  } else {
    const auto scan = witness_from_loops(g);
    json details = json::object();
    if (obs.witness) {
      details["summary"] = "edge " + g.edge_name(obs.witness->edge) + " at " + g.vertex_name(obs.witness->vertex);
      details["edge"] = g.edge_name(obs.witness->edge);
      details["vertex"] = g.vertex_name(obs.witness->vertex);
    } else {
      details["summary"] = "no witness";
    }
    report.add("loop-length witness agrees with loop enumeration", obs.witness == scan, details);
  }
  return report;
}

Report graph_homology(const Config& c, const GraphAction& a) {
  Report report("graph homology", parameters(c));
  const Graph& g = a.graph;
  const Subspace h1 = h1_basis(g);
  report.add("dim H1 = |E| - |V| + components", h1.dim() == g.rank(),
             {{"summary", "dim H1 = " + std::to_string(h1.dim())},
              {"dim", h1.dim()},
              {"edges", g.num_edges()},
              {"vertices", g.num_vertices()},
              {"components", g.components()}});
  const FiniteRep rep = homology_rep(a);
  const auto problems = rep_problems(rep);
  report.add("H1 is a representation of " + a.group.name, problems.empty(), {{"problems", problems}});
  if (!problems.empty()) return report;
  const int fixed = trivial_multiplicity(rep);
  report.add("trivial multiplicity", true, {{"summary", std::to_string(fixed)}, {"value", fixed}});

  // Character inner products only make sense for the symmetric groups.
  const GroupDescriptor probe = a.group.name.size() > 1 && a.group.name[0] == 'S' ? a.group : GroupDescriptor{};
  if (probe.name.empty()) return report;
  const int k = static_cast<int>(probe.generators.size()) + 1;
  json mult = json::object();
  for (NamedRep r : all_named_reps) mult[to_string(r)] = multiplicity(rep, r, k);
  const bool transitive_cage = is_cage(g) && g.num_edges() == k && edge_orbits(a).size() == 1;
  if (transitive_cage) {
    const bool ok = mult["standard"] == 1 && mult["trivial"] == 0 && rep.dim == k - 1;
    report.add("H1 is the standard representation", ok, {{"multiplicities", mult}});
  } else {
    report.add("character multiplicities", true, {{"multiplicities", mult}});
  }
  return report;
}

Report graph_rose_lemma(const Config& c, const GraphAction& a) {
  if (!is_rose(a.graph)) throw std::invalid_argument("rose-lemma needs a rose");
  Report report("graph rose-lemma", parameters(c));
  const auto o = invariant_orientation(a);
  report.add("invariant orientation exists", o.orientation.has_value(),
             {{"orientation", o.orientation ? json(*o.orientation) : json(nullptr)}});
  report.add("trivial multiplicity equals orbit count", o.trivial_multiplicity == o.orbit_count,
             {{"summary", "multiplicity " + std::to_string(o.trivial_multiplicity) + ", " +
                              plural(o.orbit_count, "orbit")},
              {"trivial_multiplicity", o.trivial_multiplicity},
              {"orbit_count", o.orbit_count}});
  return report;
}

Report graph_cage_lemma(const Config& c, const GraphAction& a) {
  if (!is_cage(a.graph)) throw std::invalid_argument("cage-lemma needs a cage");
  Report report("graph cage-lemma", parameters(c));
  const auto r = cage_trivial_multiplicity_check(a);
  json details = {{"summary", "multiplicity " + std::to_string(r.trivial_multiplicity) + ", " +
                                  plural(r.orbit_count, "orbit")},
                  {"trivial_multiplicity", r.trivial_multiplicity},
                  {"orbit_count", r.orbit_count}};
  if (!r.applicable) {
    details["summary"] = a.group.name + " is not flagged perfect";
    report.skip("trivial multiplicity equals orbit count minus one", details);
  } else {
    report.add("trivial multiplicity equals orbit count minus one", r.pass(), details);
  }
  return report;
}

Report graph_double_tree(const Config& c, const GraphAction& a) {
  if (c.xi.empty()) throw std::invalid_argument("double-tree needs --xi");
  if (c.builtin.empty()) throw std::invalid_argument("double-tree needs a --builtin graph");
  const Graph& g = a.graph;
  const GraphAut xi = builtin::involution_by_name(c.builtin, c.xi);
  const std::string problem = automorphism_problem(g, xi);
  if (!problem.empty()) throw std::invalid_argument("--xi: " + problem);

  Report report("graph double-tree", parameters(c));
  report.add("xi is an involution", (xi * xi).is_identity());
  report.add("xi flips every simple loop", flips_all_simple_loops(g, xi),
             {{"loops", simple_loops(g).size()}});
  const DoubleTree t = double_tree_decomposition(g, xi);
  if (!t.failure.empty()) {
    report.add("decomposition", false, {{"summary", t.failure}});
    return report;
  }
  const Graph& s = t.sub.graph;
  std::vector<int> common;
  std::set_intersection(t.d.vertices.begin(), t.d.vertices.end(), t.d_prime.vertices.begin(), t.d_prime.vertices.end(),
                        std::back_inserter(common));
  report.add("D is a tree", t.d_is_tree,
             {{"summary", plural(static_cast<long long>(t.d.edges.size()), "edge")},
              {"vertices", vertex_names(s, t.d.vertices)},
              {"edges", edge_names(s, t.d.edges)}});
  report.add("D and xi(D) cover the graph", t.covers);
  report.add("D and xi(D) meet in the fixed set", t.meets_in_fixed_set,
             {{"summary", std::to_string(common.size()) + " common vertices"},
              {"fixed_vertices", vertex_names(s, t.fixed.vertices)},
              {"fixed_edges", edge_names(s, t.fixed.edges)}});
  return report;
}

Report graph_collapse(const Config& c, const GraphAction& a) {
  if (c.edges.empty()) throw std::invalid_argument("collapse needs --edges");
  const Graph& g = a.graph;
  std::vector<int> edges;
  std::stringstream in(c.edges);
  for (std::string name; std::getline(in, name, ',');)
    if (!name.empty()) edges.push_back(g.edge_index(name));
  const Collapse col = collapse(g, edges);
  Report report("graph collapse", parameters(c));
  report.add("collapse is surjective on H1", col.surjective,
             {{"summary", "rank " + std::to_string(g.rank()) + " -> " + std::to_string(col.quotient.rank())},
              {"quotient", json_io::to_json(col.quotient)}});
  return report;
}

// ------------------------------------------------------------------- main

void emit(const Report& report, const Config& c, std::ostream& out) {
  report.print(out);
  if (!c.json_path.empty()) json_io::write_file(c.json_path, report.to_json());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for automorphisms of free groups and graph actions", "outfn"};
  app.fallthrough();
  app.require_subcommand(1);
  Config c;
  app.add_option("--n", c.n, "Rank");
  app.add_option("--mu", c.mu, "Partition: 1,1 (exterior) or 2 (symmetric)");
  app.add_option("--json", c.json_path, "Write the report as JSON");
  app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--builtin", c.builtin, "Built-in representation or graph, e.g. perm:4 or cage:5");

  auto* gersten = app.add_subcommand("gersten", "Check the presentation of Out(F_n)");
  auto* decompose = app.add_subcommand("decompose", "Eigenspace decomposition of a W_n representation");
  decompose->add_option("--rep", c.rep_file, "Representation JSON file");
  auto* section4 = app.add_subcommand("section4", "Check the psi formulas");
  auto* induce = app.add_subcommand("induce", "Build the induced representation");
  induce->add_option("--matrices", c.matrices_path, "Write the generator matrices as JSON");

  auto* graph = app.add_subcommand("graph", "Graph actions");
  graph->require_subcommand(1);
  graph->add_option("--group", c.group, "Built-in group acting on a --builtin graph");
  graph->add_option("--graph", c.graph_file, "Graph JSON file");
  graph->add_option("--action", c.action_file, "Action JSON file");
  graph->add_option("--xi", c.xi, "Involution for double-tree");
  graph->add_option("--edges", c.edges, "Comma-separated edge names for collapse");
  using GraphCommand = Report (*)(const Config&, const GraphAction&);
  struct GraphEntry {
    const char* name;
    const char* help;
    GraphCommand fn;
  };
  const GraphEntry graph_commands[] = {
      {"admissible", "Loop-length obstruction", graph_admissible},
      {"homology", "Action on H_1", graph_homology},
      {"rose-lemma", "Loop flips on a rose", graph_rose_lemma},
      {"cage-lemma", "Perfect group on a cage", graph_cage_lemma},
      {"double-tree", "Double-tree decomposition", graph_double_tree},
      {"collapse", "Collapse an invariant forest", graph_collapse}};
  for (const auto& e : graph_commands) graph->add_subcommand(e.name, e.help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    omp_set_num_threads(c.jobs);
    Report report("", json::object());
    if (gersten->parsed()) report = cmd_gersten(c);
    else if (decompose->parsed()) report = cmd_decompose(c);
    else if (section4->parsed()) report = cmd_section4(c);
    else if (induce->parsed()) report = cmd_induce(c);
    else {
      for (const auto& e : graph_commands)
        if (graph->get_subcommand(e.name)->parsed()) report = e.fn(c, load_action(c));
    }
    emit(report, c, out);
    return report.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace outfn::cli
