#include <doctest.h>

#include <cstdlib>

#include "arithgraph/catalog.hpp"
#include "arithgraph/errors.hpp"
#include "arithgraph/graphs.hpp"
#include "arithgraph/oracles.hpp"
#include "arithgraph/spec_text.hpp"
#include "arithgraph/structure.hpp"

using namespace arithgraph;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Io;
}

bool abelian(const FiniteGroup& g) {
  for (Elem a : g.generators())
    for (Elem b : g.generators())
      if (!g.commute(a, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("orders match the closed forms") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(6).order() == 360);
  CHECK(cyclic_group(15).order() == 15);
  CHECK(dihedral_group(5).order() == 10);
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u}) {
    const FiniteGroup g = psl2(q);
    CHECK(g.degree() == q + 1);
    CHECK(g.order() == std::uint64_t{q} * (q * q - 1) / (q % 2 ? 2 : 1));
  }
  const FiniteGroup l33 = psl3_3();
  CHECK(l33.degree() == 13);
  CHECK(l33.order() == 5616);
  const FiniteGroup sz = sz8();
  CHECK(sz.degree() == 65);
  CHECK(sz.order() == 29120);
  for (const char* s : {"S:5", "A:5", "C:7", "D:6", "PSL2:7", "Schmidt:3,5", "S:3xC:5", "PSL3:3"}) {
    const GroupSpec spec = parse_group_spec(s);
    CHECK(build(spec).order() == *expected_order(spec));
  }
  CHECK_FALSE(expected_order(parse_group_spec("file:q8.grp")).has_value());
}

TEST_CASE("schmidt groups") {
  const FiniteGroup h32 = schmidt_group(3, 2);
  CHECK(h32.order() == 6);
  CHECK_FALSE(abelian(h32));
  const FiniteGroup h23 = schmidt_group(2, 3);
  CHECK(h23.order() == 12);
  CHECK(hawkes_graph(h23) == hawkes_graph(alternating_group(4)));
  CHECK(h23.degree() == 4);
  const FiniteGroup h52 = schmidt_group(5, 2);
  CHECK(h52.order() == 10);
  CHECK_FALSE(abelian(h52));
  CHECK(kind_of([] { schmidt_group(3, 3); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { schmidt_group(4, 3); }) == ErrorKind::InvalidSpec);
  const std::vector<std::pair<unsigned, unsigned>> pq{{3, 2}, {2, 3}, {5, 2}, {7, 3}, {2, 7}, {2, 5}, {5, 3},
                                                      {3, 13}, {3, 5}, {7, 2}, {11, 5}};
  for (const auto& [p, q] : pq) {
    const FiniteGroup g = schmidt_group(p, q);
    const std::uint64_t d = multiplicative_order(p, q);
    CHECK(g.order() == ipow(p, static_cast<unsigned>(d)) * q);
    CHECK_FALSE(is_nilpotent(g));
    CHECK(is_normal(sylow_subgroup(g, p)));
    CHECK(schmidt_graph(g) == PrimeDigraph({p, q}, {{p, q}}));
    CHECK(sylow_graph(g) == PrimeDigraph({p, q}, {{p, q}}));
    if (g.order() <= kExhaustiveThreshold)
      for (const auto& h : oracle::all_subgroups(g))
        if (!h.is_whole()) CHECK(is_nilpotent(h));
  }
}

TEST_CASE("Sz(8) is simple") {
  CHECK(normal_subgroups(sz8()).size() == 2);
}

TEST_CASE("build determinism") {
  for (const char* s : {"PSL2:8", "Schmidt:2,7", "S:3xC:5", "file:sl2_3.grp"}) {
    const GroupSpec spec = parse_group_spec(s);
    CHECK(build(spec).data().images == build(spec).data().images);
    CHECK(build(spec).name() == to_text(spec));
  }
}

TEST_CASE("invalid parameters") {
  CHECK(kind_of([] { psl2(6); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { psl2(3); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { dihedral_group(2); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { symmetric_group(0); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { build(GroupSpec{SpecKind::Sz8, {32}, {}, {}}); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { build(GroupSpec{SpecKind::Psl3_3, {4}, {}, {}}); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("budget") {
  CHECK(kind_of([] { symmetric_group(9, 1000); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { symmetric_group(30); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { build(parse_group_spec("S:5xS:5"), 1000); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("group files") {
  const GroupFile f = parse_group_file("# a comment\n# expected-order: 6\ndegree: 3\n(1 2 3)\n(1 2) # trailing\n()\n");
  CHECK(f.degree == 3);
  CHECK(f.generators.size() == 3);
  CHECK(f.expected_order == std::uint64_t{6});
  auto parse_err = [](const char* text) {
    try {
      parse_group_file(text, "t.grp");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(parse_err("(1 2)\n").find("t.grp:1") != std::string::npos);
  CHECK(parse_err("degree: 3\n(1 5)\n").find("t.grp:2") != std::string::npos);
  CHECK(parse_err("degree: 3\ndegree: 4\n").find("t.grp:2") != std::string::npos);
  CHECK(parse_err("degree: x\n").find("t.grp:1") != std::string::npos);
  CHECK(kind_of([] { read_group_file("/nonexistent/file.grp"); }) == ErrorKind::Io);
  CHECK(load_group_file("q8.grp").order() == 8);
  CHECK(load_group_file("sl2_3.grp").order() == 24);
  CHECK(data_dir().filename() == "data");
}
