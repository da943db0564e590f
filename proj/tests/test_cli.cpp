#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "outfn/commands.hpp"
#include "outfn/graph_builtin.hpp"
#include "outfn/json_io.hpp"
#include "outfn/rep_builtin.hpp"
#include "outfn/report.hpp"
#include "outfn/schur.hpp"

using namespace outfn;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "outfn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("outfn_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("report tallies") {
  Report r("demo", {{"n", 3}});
  r.add("a", true);
  r.add("b", false, {{"summary", "broken"}});
  r.skip("c");
  const json j = r.to_json();
  CHECK(j["summary"]["total"] == 3);
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["summary"]["skip"] == 1);
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(r.exit_code() == 1);
  std::ostringstream out;
  r.print(out);
  CHECK(out.str().find("FAIL  b: broken") != std::string::npos);
  Report ok("demo", json::object());
  ok.skip("only");
  CHECK(ok.exit_code() == 0);
}

TEST_CASE("JSON round trips") {
  const Word w = Word::reduce(3, {1, -2, 3});
  CHECK(json_io::to_json(w) == json::parse("[1,-2,3]"));
  CHECK(json_io::word_from_json(json::parse("[1,-2,3]"), 3) == w);
  CHECK_THROWS_AS(json_io::word_from_json(json::parse("[4]"), 3), std::invalid_argument);

  const Automorphism a = rho(1, 2, 3) * eps(3, 3);
  CHECK(json_io::automorphism_from_json(json_io::to_json(a)) == a);

  CHECK(json_io::to_json(Rational(-3, 4)) == "-3/4");
  CHECK(json_io::rational_from_json(json("5/10")) == Rational(1, 2));
  CHECK(json_io::rational_from_json(json(7)) == 7);

  const FiniteRep rep = builtin::abelianization_rep(3);
  const FiniteRep back = json_io::rep_from_json(json_io::to_json(rep));
  CHECK(back.group.generators == rep.group.generators);
  CHECK(back.matrices == rep.matrices);

  const Graph g = builtin::doubled_triangle();
  const Graph h = json_io::graph_from_json(json_io::to_json(g));
  CHECK(h.num_edges() == g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    CHECK(h.edge_name(e) == g.edge_name(e));
    CHECK(h.iota(e) == g.iota(e));
  }
  const GraphAction act = builtin::cage_group_on_cage(3);
  const GraphAction act_back = json_io::action_from_json(json_io::to_json(act), act.graph);
  CHECK(act_back.maps == act.maps);
}

TEST_CASE("exit codes") {
  CHECK(run({"gersten", "--n", "3"}).code == 0);
  CHECK(run({"gersten", "--n", "2"}).code == 2);
  CHECK(run({"gersten", "--n", "9"}).code == 2);
  CHECK(run({"gersten"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"gersten", "--n", "3", "--jobs", "0"}).code == 2);
  CHECK(run({"decompose", "--builtin", "perm:4"}).code == 0);
  CHECK(run({"decompose", "--builtin", "abel:4"}).code == 0);
  CHECK(run({"decompose", "--builtin", "planted:4"}).code == 1);
  CHECK(run({"decompose", "--builtin", "perm:x"}).code == 2);
  CHECK(run({"decompose"}).code == 2);
  CHECK(run({"section4", "--n", "3"}).code == 0);
  CHECK(run({"section4", "--n", "7"}).code == 2);
  CHECK(run({"induce", "--n", "3"}).code == 0);
  CHECK(run({"induce", "--n", "3", "--mu", "1,1"}).code == 2);
  CHECK(run({"induce", "--n", "6"}).code == 2);
  CHECK(run({"induce", "--n", "4", "--mu", "3"}).code == 2);
  CHECK(run({"graph", "admissible", "--builtin", "cage:7", "--group", "G6"}).code == 0);
  CHECK(run({"graph", "admissible", "--builtin", "barbell", "--group", "Z2"}).code == 1);
  CHECK(run({"graph", "rose-lemma", "--builtin", "rose:7", "--group", "A7"}).code == 0);
  CHECK(run({"graph", "rose-lemma", "--builtin", "cage:3"}).code == 2);
  CHECK(run({"graph", "cage-lemma", "--builtin", "cage:6", "--group", "A6"}).code == 0);
  CHECK(run({"graph", "double-tree", "--builtin", "cage:5", "--xi", "vertex-swap"}).code == 0);
  CHECK(run({"graph", "double-tree", "--builtin", "cage:5", "--xi", "identity"}).code == 1);
  CHECK(run({"graph", "double-tree", "--builtin", "cage:5"}).code == 2);
  CHECK(run({"graph", "homology", "--builtin", "cage:5", "--group", "S5"}).code == 0);
  CHECK(run({"graph", "collapse", "--builtin", "cage:4", "--edges", "c1,c2"}).code == 0);
  CHECK(run({"graph", "collapse", "--builtin", "cage:4", "--edges", "q"}).code == 2);
  CHECK(run({"graph", "admissible", "--builtin", "cage:3", "--group", "Q8"}).code == 2);
  CHECK(run({"graph"}).code == 2);
}

TEST_CASE("edge cap violations are input errors") {
  ::setenv("OUTFN_MAX_EDGES", "3", 1);
  const Run r = run({"graph", "double-tree", "--builtin", "cage:5", "--xi", "vertex-swap"});
  ::unsetenv("OUTFN_MAX_EDGES");
  CHECK(r.code == 2);
  CHECK(r.err.find("OUTFN_MAX_EDGES") != std::string::npos);
}

TEST_CASE("representation files") {
  const std::string good = temp_path("good.json"), bad = temp_path("bad.json"), junk = temp_path("junk.json");
  json_io::write_file(good, json_io::to_json(builtin::signed_permutation_rep(4)));
  json broken = json_io::to_json(builtin::signed_permutation_rep(4));
  broken["generators"]["eps_1"] = json_io::to_json(RationalMatrix(4, 4, {2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
  json_io::write_file(bad, broken);
  std::ofstream(junk) << "{ not json";
  CHECK(run({"decompose", "--rep", good}).code == 0);
  CHECK(run({"decompose", "--rep", bad}).code == 2);
  CHECK(run({"decompose", "--rep", junk}).code == 2);
  CHECK(run({"decompose", "--rep", temp_path("missing.json")}).code == 2);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
  std::filesystem::remove(junk);
}

TEST_CASE("graph and action files") {
  const std::string graph = temp_path("graph.json"), action = temp_path("action.json");
  const GraphAction act = builtin::cage_group_on_cage(3);
  json_io::write_file(graph, json_io::to_json(act.graph));
  json_io::write_file(action, json_io::to_json(act));
  CHECK(run({"graph", "admissible", "--graph", graph, "--action", action}).code == 0);
  CHECK(run({"graph", "admissible", "--graph", graph}).code == 1);  // trivial group: every edge is a forest
  CHECK(run({"graph", "admissible", "--graph", graph, "--group", "G3"}).code == 2);
  std::filesystem::remove(graph);
  std::filesystem::remove(action);
}

TEST_CASE("JSON reports are deterministic and consistent") {
  const std::string a = temp_path("a.json"), b = temp_path("b.json"), m = temp_path("m.json");
  CHECK(run({"gersten", "--n", "4", "--json", a}).code == 0);
  CHECK(run({"gersten", "--n", "4", "--json", b, "--jobs", "2"}).code == 0);
  json ja = json::parse(slurp(a)), jb = json::parse(slurp(b));
  ja["parameters"].erase("jobs");
  jb["parameters"].erase("jobs");
  CHECK(ja == jb);
  CHECK(ja["command"] == "gersten");
  CHECK(ja["summary"]["total"] == ja["checks"].size());
  int pass = 0;
  for (const auto& c : ja["checks"]) {
    CHECK((c["status"] == "pass" || c["status"] == "fail" || c["status"] == "skip"));
    pass += c["status"] == "pass";
    CHECK(c["details"]["tuple_count"].get<int>() > 0);
  }
  CHECK(ja["summary"]["pass"] == pass);

  CHECK(run({"induce", "--n", "3", "--json", a, "--matrices", m}).code == 0);
  CHECK(run({"induce", "--n", "3", "--json", b}).code == 0);
  json ia = json::parse(slurp(a)), ib = json::parse(slurp(b));
  ia["parameters"].erase("matrices");
  CHECK(ia == ib);
  const json mats = json::parse(slurp(m));
  CHECK(mats["m"] == 21);
  CHECK(mats["mu"] == to_string(Mu::symmetric));
  CHECK(mats["cosets"].size() == 7);
  CHECK(mats["generators"].contains("rho_1_2"));
  CHECK(json_io::matrix_from_json(mats["generators"]["eps_1"]).rows() == 21);
  for (const auto& p : {a, b, m}) std::filesystem::remove(p);
}

TEST_CASE("human-readable output") {
  const Run r = run({"section4", "--n", "3"});
  CHECK(r.out.find("PASS  psi'(c_a3) = -I") != std::string::npos);
  CHECK(r.out.find("+1: 3, -1: 2") != std::string::npos);
  const Run d = run({"decompose", "--builtin", "perm:4"});
  CHECK(d.out.find("V_1=4") != std::string::npos);
  const Run i = run({"induce", "--n", "4"});
  CHECK(i.out.find("m = 45") != std::string::npos);
}

TEST_CASE("builtin representations are valid") {
  for (int n = 3; n <= 5; ++n) {
    for (const std::string kind : {"perm", "perm2", "abel", "abel-ext2", "abel-sym2", "planted"}) {
      CHECK(rep_problems(builtin::rep_by_name(kind + ":" + std::to_string(n))).empty());
    }
  }
  CHECK_THROWS_AS(builtin::rep_by_name("planted:2"), std::invalid_argument);
  CHECK_THROWS_AS(builtin::rep_by_name("perm"), std::invalid_argument);
  CHECK_THROWS_AS(builtin::rep_by_name("cube:3"), std::invalid_argument);
}
