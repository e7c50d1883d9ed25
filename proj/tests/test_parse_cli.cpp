#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "splitcm/cli.hpp"
#include "splitcm/families.hpp"
#include "splitcm/parse.hpp"

#include "helpers.hpp"

using namespace splitcm;
using namespace splitcm::test;
using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("splitcm_test_" + name);
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path.string();
}

const char* kExampleIdeal =
    "ring 4\n"
    "x1^2\nx1*x3\nx3^2\nx1*x2*x4\nx2*x3*x4\nx2^2*x4^2\n";

const char* kBicmGraph =
    "graph 5\nedge 1 2\nedge 1 4\nedge 1 5\nedge 2 4\nedge 2 5\nedge 3 5\n";

const char* kNotBicmGraph = "graph 5\nedge 1 4\nedge 1 5\nedge 2 4\nedge 2 5\nedge 3 5\n";

json parse_line(const std::string& out) {
  REQUIRE_FALSE(out.empty());
  return json::parse(out);
}

}  // namespace

TEST_SUITE_BEGIN("parse_cli");

TEST_CASE("monomial and ideal text forms") {
  CHECK(to_string(mono(4, "x1^2*x3")) == "x1^2*x3");
  CHECK(to_string(Monomial::one(3)) == "1");
  CHECK(to_string(mono(3, "x2")) == "x2");
  CHECK(to_string(mk(3, {"x3", "x1*x2"})) == "(x3, x1*x2)");
  CHECK(to_string(MonomialIdeal::zero(RingContext(2))) == "0");
  CHECK(to_string(MonomialIdeal::unit(RingContext(2))) == "(1)");

  CHECK(parse_monomial("x2*x1", 3) == mono(3, "x1*x2"));
  CHECK(parse_monomial("x1*x1", 3) == mono(3, "x1^2"));
  CHECK(parse_monomial(" x1 * x2 ^ 3 ", 3) == mono(3, "x1*x2^3"));
  CHECK(parse_monomial("1", 3) == Monomial::one(3));
  CHECK_THROWS_AS(parse_monomial("", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("x0", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("x4", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("y1", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1^0", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1 x2", 3), ParseError);
}

TEST_CASE("ideal files round trip") {
  MonomialIdeal I = mk(4, {"x1^2", "x1*x3", "x3^2", "x1*x2*x4", "x2*x3*x4", "x2^2*x4^2"});
  CHECK(parse_ideal_text(ideal_file_text(I)) == I);
  CHECK(parse_ideal_text(kExampleIdeal) == I);

  MonomialIdeal zero = parse_ideal_text("ring 3\n");
  CHECK(zero.is_zero());
  CHECK(zero.num_vars() == 3);
  CHECK(parse_ideal_text("ring 2\n1\n").is_unit());
  CHECK(parse_ideal_text("# intro\n\nring 2\nx1 # trailing note\n") == mk(2, {"x1"}));

  CHECK_THROWS_AS(parse_ideal_text(""), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("x1*x2\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("ring 0\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("ring 64\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("ring 2\nx3\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("/nonexistent/ideal.txt"), ParseError);

  // parse errors carry the line number
  try {
    parse_ideal_text("ring 2\nx1\nbogus\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("graph files round trip") {
  SimpleGraph G = parse_graph_text(kBicmGraph);
  CHECK(G.n == 5);
  CHECK(G.edges.size() == 6);
  CHECK(parse_graph_text(graph_file_text(G)) == G);

  CHECK_THROWS_AS(parse_graph_text(""), ParseError);
  CHECK_THROWS_AS(parse_graph_text("edge 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("graph 3\nedge 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("graph 3\nedge 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("graph 3\nvertex 1\n"), ParseError);
}

TEST_CASE("cli split") {
  std::string principal = temp_file("principal.ideal", "ring 2\nx1*x2\n");
  CliResult r = run({"split", principal});
  CHECK(r.code == 0);
  CHECK(r.out.find("vertex splittable: yes") != std::string::npos);
  CHECK(r.out.find("principal") != std::string::npos);

  std::string stuck = temp_file("stuck.ideal", "ring 2\nx1^2\nx2^2\n");
  CliResult rj = run({"split", stuck, "--json"});
  CHECK(rj.code == 1);
  json j = parse_line(rj.out);
  CHECK(j["splittable"] == false);

  std::string tri = temp_file("tri.ideal", "ring 3\nx1*x2\nx1*x3\nx2*x3\n");
  CliResult rt = run({"split", tri, "--json"});
  CHECK(rt.code == 0);
  json jt = parse_line(rt.out);
  CHECK(jt["splittable"] == true);
  CHECK(jt["certificate"]["kind"] == "split");

  CHECK(run({"split", "/nonexistent.ideal"}).code == 2);
  std::string bad = temp_file("bad.ideal", "ring 2\nwat\n");
  CliResult rb = run({"split", bad});
  CHECK(rb.code == 2);
  CHECK(rb.err.find("error") != std::string::npos);
}

TEST_CASE("cli betti") {
  std::string max3 = temp_file("max3.ideal", "ring 3\nx1\nx2\nx3\n");
  CliResult r = run({"betti", max3, "--json"});
  CHECK(r.code == 0);
  json j = parse_line(r.out);
  CHECK(j["proj_dim"] == 2);
  CHECK(j["regularity"] == 1);
  CHECK(j["entries"] == json::parse("[[0,1,3],[1,2,3],[2,3,1]]"));

  CliResult rq = run({"betti", max3, "--json", "--quotient"});
  json jq = parse_line(rq.out);
  CHECK(jq["proj_dim"] == 3);
  CHECK(jq["regularity"] == 0);
  CHECK(jq["entries"] == json::parse("[[0,0,1],[1,1,3],[2,2,3],[3,3,1]]"));

  CliResult rg = run({"betti", max3});
  CHECK(rg.out.find("i=") != std::string::npos);
  CHECK(rg.out.find("j=") != std::string::npos);

  std::string stuck = temp_file("stuck2.ideal", "ring 4\nx1*x2\nx3*x4\n");
  CliResult rs = run({"betti", stuck});
  CHECK(rs.code == 1);
  CHECK(rs.err.find("not vertex splittable") != std::string::npos);
}

TEST_CASE("cli cm") {
  std::string ex = temp_file("ex42.ideal", kExampleIdeal);
  CliResult r = run({"cm", ex});
  CHECK(r.code == 0);
  CHECK(r.out.find("cm: yes") != std::string::npos);

  CliResult rj = run({"cm", ex, "--json"});
  json j = parse_line(rj.out);
  CHECK(j["cm"] == true);
  CHECK(j["depth"] == 1);
  CHECK(j["dim"] == 1);
  CHECK(j["projdim"] == 3);
  CHECK(j["reg"] == 3);
  CHECK(j["route"] == "split");
  CHECK(j["gorenstein"] == false);

  CliResult re = run({"cm", ex, "--json", "--explain"});
  json je = parse_line(re.out);
  REQUIRE(je.contains("explanation"));
  CHECK(je["explanation"]["agrees"] == true);
  // canonical serialization: reparse and redump reproduces the byte stream
  std::string line = re.out.substr(0, re.out.find('\n'));
  CHECK(json::parse(line).dump() == line);

  std::string stuck = temp_file("stuck3.ideal", "ring 4\nx1*x2\nx3*x4\n");
  CHECK(run({"cm", stuck}).code == 2);
  CliResult ro = run({"cm", stuck, "--oracle", "--json"});
  CHECK(ro.code == 0);
  json jo = parse_line(ro.out);
  CHECK(jo["route"] == "oracle");
  CHECK(jo["cm"] == true);
  CHECK(jo["cm_type"] == 1);
  CHECK(jo["gorenstein"] == true);

  std::string unit = temp_file("unit.ideal", "ring 2\n1\n");
  CHECK(run({"cm", unit}).code == 2);
}

TEST_CASE("cli classify") {
  std::string ver = temp_file("ver32.ideal", ideal_file_text(veronese(3, 2)));
  CliResult r = run({"classify", ver, "--polymatroidal", "--json"});
  CHECK(r.code == 0);
  json j = parse_line(r.out);
  CHECK(j["polymatroidal"] == true);
  CHECK(j["componentwise_polymatroidal"] == true);
  CHECK(j["class"] == "veronese");
  CHECK(j["cm"] == true);

  std::string sq = temp_file("sq32.ideal", ideal_file_text(squarefree_veronese(3, 2)));
  CliResult rt = run({"classify", sq, "--tspread", "1", "--json"});
  CHECK(rt.code == 0);
  json jt = parse_line(rt.out);
  CHECK(jt["tspread"] == true);
  CHECK(jt["tspread_strongly_stable"] == true);
  CHECK(jt["witness_conclusive"] == true);
  CHECK(jt["cm"] == true);
  CHECK(jt["cm_witness"] == "x2*x3");

  // mixed degrees with nonzero gaps: the witness alone cannot certify CM
  std::string mixed =
      temp_file("mixed11.ideal", "ring 4\nx1*x2\nx1*x3\nx1*x4\nx2*x3*x4\n");
  CliResult rm = run({"classify", mixed, "--tspread", "1,1", "--json"});
  CHECK(rm.code == 0);
  json jm = parse_line(rm.out);
  CHECK(jm["tspread_strongly_stable"] == true);
  CHECK(jm["witness_present"] == true);
  CHECK(jm["witness_conclusive"] == false);
  CHECK(jm["cm_witness"] == "x2*x3*x4");
  CHECK_FALSE(jm.contains("cm"));

  // not strongly stable: exit 1
  std::string path = temp_file("path.ideal", "ring 3\nx1*x2\nx2*x3\n");
  CliResult rp = run({"classify", path, "--tspread", "1", "--json"});
  CHECK(rp.code == 1);
  json jp = parse_line(rp.out);
  CHECK(jp["tspread"] == true);
  CHECK(jp["tspread_strongly_stable"] == false);

  CHECK(run({"classify", ver}).code == 2);
  CHECK(run({"classify", ver, "--polymatroidal", "--tspread", "1"}).code == 2);
  CHECK(run({"classify", ver, "--tspread", "1,x"}).code == 2);
}

TEST_CASE("cli bicm") {
  std::string yes = temp_file("fig_yes.graph", kBicmGraph);
  CliResult r = run({"bicm", yes, "--json"});
  CHECK(r.code == 0);
  json j = parse_line(r.out);
  CHECK(j["bicm"] == true);
  CHECK(j["cochordal"] == true);
  CHECK(j["projdim"] == 3);
  CHECK(j["peo"].size() == 5);

  std::string no = temp_file("fig_no.graph", kNotBicmGraph);
  CliResult rn = run({"bicm", no, "--json"});
  CHECK(rn.code == 1);
  json jn = parse_line(rn.out);
  CHECK(jn["bicm"] == false);
  CHECK(jn["cochordal"] == true);
  REQUIRE(jn.contains("witness_violation"));
  CHECK(jn["witness_violation"]["position_i"].get<int>() <
        jn["witness_violation"]["position_j"].get<int>());

  CliResult rh = run({"bicm", no});
  CHECK(rh.out.find("bi-cm: no") != std::string::npos);
  CHECK(rh.out.find("violation") != std::string::npos);
}

TEST_CASE("cli verify") {
  std::string ver = temp_file("ver42.ideal", ideal_file_text(veronese(4, 2)));
  CliResult r = run({"verify", ver, "--json"});
  CHECK(r.code == 0);
  json j = parse_line(r.out);
  CHECK(j["command"] == "verify");
  CHECK(j["version"] == kToolVersion);
  CHECK(j["verdicts"]["match"] == true);
  CHECK(j["verdicts"]["splittable"] == true);
  CHECK(j["verdicts"]["field"] == 32003);
  CHECK(j["input"].get<std::string>().size() == 16);
  CHECK(j["timings"].contains("oracle_ms"));

  std::string line = r.out.substr(0, r.out.find('\n'));
  CHECK(json::parse(line).dump() == line);

  // deterministic digest across runs
  CliResult again = run({"verify", ver, "--json"});
  CHECK(parse_line(again.out)["input"] == j["input"]);

  CliResult r2 = run({"verify", ver, "--json", "--field", "2"});
  json j2 = parse_line(r2.out);
  CHECK(j2["verdicts"]["field"] == 2);
  CHECK(j2["verdicts"]["match"] == true);

  std::string stuck = temp_file("stuck4.ideal", "ring 4\nx1*x2\nx3*x4\n");
  CliResult rs = run({"verify", stuck, "--json"});
  CHECK(rs.code == 1);
  CHECK(parse_line(rs.out)["verdicts"]["match"].is_null());

  std::string unit = temp_file("unit2.ideal", "ring 2\n1\n");
  CHECK(run({"verify", unit}).code == 2);

  std::string big = [&] {
    std::string text = "ring 21\n";
    for (int i = 1; i <= 21; ++i) text += "x" + std::to_string(i) + "\n";
    return temp_file("big.ideal", text);
  }();
  CliResult rb = run({"verify", big});
  CHECK(rb.code == 2);
  CHECK(rb.err.find("capped") != std::string::npos);
}

TEST_CASE("cli gen") {
  CliResult r = run({"gen", "--veronese", "3", "2"});
  CHECK(r.code == 0);
  CHECK(parse_ideal_text(r.out) == veronese(3, 2));

  auto out_path = std::filesystem::temp_directory_path() / "splitcm_test_gen_out.ideal";
  std::filesystem::remove(out_path);
  CliResult rf = run({"gen", "--sqfree-veronese", "4", "2", "-o", out_path.string()});
  CHECK(rf.code == 0);
  CHECK(parse_ideal_file(out_path.string()) == squarefree_veronese(4, 2));

  CHECK(run({"gen"}).code == 2);
  CHECK(run({"gen", "--veronese", "3", "2", "--sqfree-veronese", "3", "2"}).code == 2);
  CHECK(run({"gen", "--veronese", "3", "0"}).code == 2);
}

TEST_CASE("cli corpus") {
  CliResult r = run({"corpus", "--kind", "antichain", "--n", "2", "--max-gens", "3", "--max-deg",
                     "2", "--json"});
  CHECK(r.code == 0);
  json j = parse_line(r.out);
  CHECK(j["command"] == "corpus");
  CHECK(j["verdicts"]["kind"] == "antichain");
  CHECK(j["verdicts"]["mismatches"] == 0);
  CHECK(j["verdicts"]["errors"] == 0);
  CHECK(j["verdicts"]["checked"].get<long long>() > 0);
  CHECK(j["verdicts"]["splittable"].get<long long>() > 0);

  CliResult rp = run({"corpus", "--kind", "polymatroidal", "--n", "3", "--degree", "2",
                      "--max-gens", "6", "--json"});
  CHECK(rp.code == 0);
  CHECK(parse_line(rp.out)["verdicts"]["mismatches"] == 0);

  CliResult rn = run({"corpus", "--kind", "antichain", "--n", "2", "--max-gens", "3", "--max-deg",
                      "2", "--no-check", "--json"});
  CHECK(rn.code == 0);
  CHECK(parse_line(rn.out)["verdicts"]["checked"] == 0);

  CHECK(run({"corpus", "--kind", "bogus"}).code == 2);
}

TEST_CASE("cli thread cap leaves counts unchanged") {
  std::vector<std::string> args = {"corpus", "--kind", "antichain", "--n", "3",
                                   "--max-gens", "3",  "--max-deg", "2",  "--json"};
  CliResult base = run(args);
  REQUIRE(base.code == 0);
  ::setenv("SPLITCM_THREADS", "2", 1);
  CliResult threaded = run(args);
  ::unsetenv("SPLITCM_THREADS");
  REQUIRE(threaded.code == 0);
  json a = parse_line(base.out)["verdicts"];
  json b = parse_line(threaded.out)["verdicts"];
  CHECK(a["checked"] == b["checked"]);
  CHECK(a["splittable"] == b["splittable"]);
  CHECK(a["mismatches"] == b["mismatches"]);
  CHECK(a["total"] == b["total"]);
}

TEST_CASE("cli version and argument errors") {
  CliResult v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(kToolVersion) != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"split"}).code == 2);
}

TEST_SUITE_END();
