#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "arithgraph/catalog.hpp"
#include "arithgraph/cli.hpp"
#include "arithgraph/emit.hpp"
#include "arithgraph/errors.hpp"
#include "arithgraph/manifest.hpp"
#include "arithgraph/spec_text.hpp"

using namespace arithgraph;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string parse_error(const char* text) {
  try {
    parse_group_spec(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("parsed: " << text);
  return {};
}

}  // namespace

TEST_CASE("spec grammar examples") {
  CHECK(parse_group_spec("S:4") == GroupSpec{SpecKind::Symmetric, {4}, {}, {}});
  const GroupSpec p = parse_group_spec("S:3xC:5");
  CHECK(p.kind == SpecKind::Product);
  CHECK(p.factors.at(0) == GroupSpec{SpecKind::Symmetric, {3}, {}, {}});
  CHECK(p.factors.at(1) == GroupSpec{SpecKind::Cyclic, {5}, {}, {}});
  const GroupSpec h = parse_group_spec("Schmidt:2,3");
  CHECK(h == GroupSpec{SpecKind::Schmidt, {2, 3}, {}, {}});
  CHECK(build(h).order() == 12);
  CHECK(parse_group_spec(" S : 3 x C : 5 ") == p);
  CHECK(parse_group_spec("PSL2:27").params == std::vector<std::uint64_t>{27});
  CHECK(parse_group_spec("PSL3:3").kind == SpecKind::Psl3_3);
  CHECK(parse_group_spec("Sz:8").kind == SpecKind::Sz8);
  CHECK(parse_group_spec("D:4").kind == SpecKind::Dihedral);
  // left-associative
  const GroupSpec t = parse_group_spec("C:2xC:3xC:5");
  CHECK(t.factors.at(0).kind == SpecKind::Product);
  CHECK(t.factors.at(1) == GroupSpec{SpecKind::Cyclic, {5}, {}, {}});
}

TEST_CASE("file paths") {
  CHECK(parse_group_spec("file:q8.grp").path == "q8.grp");
  const GroupSpec f = parse_group_spec("file:q8.grpxC:3");
  CHECK(f.kind == SpecKind::Product);
  CHECK(f.factors.at(0).path == "q8.grp");
  CHECK(parse_group_spec("file:box.grp").path == "box.grp");
  CHECK(parse_group_spec("file:\"my dir/a x b.grp\"").path == "my dir/a x b.grp");
  CHECK(parse_group_spec("file:\"q\\\"uote\"").path == "q\"uote");
  CHECK(parse_group_spec("file:/abs/path/g.grp").path == "/abs/path/g.grp");
}

TEST_CASE("parse errors name the column and expected tokens") {
  CHECK(parse_error("").find("expected one of S:") != std::string::npos);
  CHECK(parse_error("Q:4").find("column 1") != std::string::npos);
  CHECK(parse_error("S:").find("expected an integer") != std::string::npos);
  CHECK(parse_error("S:4y").find("expected 'x' or end of input") != std::string::npos);
  CHECK(parse_error("Schmidt:2").find("expected ','") != std::string::npos);
  CHECK(parse_error("PSL3:4").find("expected '3'") != std::string::npos);
  CHECK(parse_error("Sz:32").find("expected '8'") != std::string::npos);
  CHECK(parse_error("S:4x").find("column 5") != std::string::npos);
  CHECK(parse_error("file:").find("expected a path") != std::string::npos);
  CHECK(parse_error("file:\"abc").find("closing") != std::string::npos);
  CHECK(parse_error("S:99999999999999999999999").find("64 bits") != std::string::npos);
}

TEST_CASE("parse then print round-trips") {
  std::mt19937 rng(3);
  const std::vector<std::string> atoms{"S:4",  "A:5",    "C:12",        "D:6",          "PSL2:8",
                                       "PSL3:3", "Sz:8", "Schmidt:3,13", "file:q8.grp", "file:\"a b\\\"x.grp\""};
  for (int t = 0; t < 300; ++t) {
    std::string text = atoms[rng() % atoms.size()];
    for (unsigned k = rng() % 3; k > 0; --k) text += (rng() % 2 ? " x " : "x") + atoms[rng() % atoms.size()];
    const GroupSpec s = parse_group_spec(text);
    const std::string printed = to_text(s);
    CHECK(parse_group_spec(printed) == s);
    CHECK(to_text(parse_group_spec(printed)) == printed);
  }
}

TEST_CASE("graph emission") {
  const PrimeDigraph s4({2, 3}, {{3, 2}});
  CHECK(emit_graph(s4, GraphFormat::Json) == R"({"vertices":[2,3],"edges":[[3,2]]})");
  CHECK(emit_graph(PrimeDigraph(), GraphFormat::Json) == R"({"vertices":[],"edges":[]})");
  const PrimeDigraph h({2, 3}, {{2, 2}, {2, 3}, {3, 2}});
  const std::string dot = emit_graph(h, GraphFormat::Dot);
  CHECK(dot.rfind("digraph G {", 0) == 0);
  CHECK(dot.find("\"2\" -> \"2\";") != std::string::npos);
  CHECK(dot.find("\"3\";") != std::string::npos);
  CHECK(dot == emit_graph(h, GraphFormat::Dot));
  CHECK(parse_graph_format("dot") == GraphFormat::Dot);
  CHECK_THROWS_AS(parse_graph_format("svg"), Error);
}

TEST_CASE("manifests") {
  const auto entries = parse_manifest("# c\n\nS4 S:4\nprod  S:3 x C:5\n", "m");
  REQUIRE(entries.size() == 2);
  CHECK(entries[1].name == "prod");
  CHECK(entries[1].spec == "S:3 x C:5");
  CHECK(entries[1].line == 4);
  CHECK_THROWS_AS(parse_manifest("lonely\n"), Error);
  CHECK_THROWS_AS(parse_manifest("x Q:1\n"), Error);
  CHECK_THROWS_AS(build_corpus(parse_manifest("a S:3\na C:2\n")), Error);
  const Corpus c = load_corpus(bundled_manifest());
  CHECK(c.size() >= 40);
  CHECK(c.find("S4").has_value());
  CHECK(c.find("Sz(8)").has_value());
}

TEST_CASE("run: graph subcommand") {
  const Run a = run({"graph", "--fn", "sylow", "--group", "S:4", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == "{\"vertices\":[2,3],\"edges\":[[3,2]]}\n");
  const Run dot = run({"graph", "--fn", "hawkes", "--group", "S:4", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("\"2\" -> \"2\";") != std::string::npos);
  CHECK(run({"graph", "--fn", "hawkes", "--group", "file:missing.grp"}).code == 2);
  CHECK(run({"graph", "--fn", "nope", "--group", "S:4"}).code == 2);
  CHECK(run({"graph", "--fn", "gk", "--group", "S:"}).code == 2);
  CHECK(run({"graph", "--fn", "gk", "--group", "S:30"}).code == 3);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("ARITHGRAPH_ELEMENT_CAP") != std::string::npos);
}

TEST_CASE("run: corpus and check subcommands") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "arithgraph_cli_test";
  std::filesystem::create_directories(dir);
  const auto m = (dir / "small.manifest").string();
  std::ofstream(m) << "S4 S:4\nA4 A:4\nS3 S:3\nC5 C:5\n";
  const Run cg = run({"corpus-graph", "--fn", "sylow", "--corpus", m});
  CHECK(cg.code == 0);
  CHECK(cg.out == "{\"vertices\":[2,3,5],\"edges\":[[2,3],[3,2]]}\n");
  const Run chain = run({"check", "chain", "--corpus", m});
  CHECK(chain.code == 0);
  const Run s = run({"check", "closure", "--fn", "sylow", "--op", "S", "--corpus", m});
  CHECK(s.code == 1);
  CHECK(s.out.find("witness S4") != std::string::npos);
  CHECK(run({"check", "closure", "--fn", "hawkes", "--op", "Q", "--corpus", m, "--jobs", "2"}).code == 0);
  CHECK(run({"check", "closure", "--fn", "hawkes", "--op", "Z", "--corpus", m}).code == 2);
  const Run tower = run({"check", "theorems", "--which", "tower", "--corpus", m});
  CHECK(tower.code == 0);
  CHECK(tower.out.find("tower A4 premise=yes conclusion=yes") != std::string::npos);
  CHECK(run({"check", "theorems", "--which", "hall", "--group", "S:3xC:5"}).code == 0);
  CHECK(run({"check", "theorems", "--which", "nope", "--corpus", m}).code == 2);
  CHECK(run({"check", "chain", "--corpus", (dir / "absent.manifest").string()}).code == 2);
  std::filesystem::remove_all(dir);
}
