#include <doctest.h>

#include "arithgraph/catalog.hpp"
#include "arithgraph/errors.hpp"
#include "arithgraph/spec_text.hpp"
#include "arithgraph/structure.hpp"
#include "arithgraph/theorems.hpp"
#include "small_groups.hpp"

using namespace arithgraph;

namespace {

FiniteGroup G(const char* s) { return build(parse_group_spec(s)); }

}  // namespace

TEST_CASE("sylow tower check") {
  const TheoremVerdict a4 = sylow_tower_check(G("A:4"));
  CHECK(a4.premise_holds);
  CHECK(a4.conclusion_holds);
  CHECK(a4.witness.ordering == std::vector<Prime>{2, 3});
  CHECK(a4.witness.orders == std::vector<std::size_t>{1, 4, 12});
  const TheoremVerdict s4 = sylow_tower_check(G("S:4"));
  CHECK_FALSE(s4.premise_holds);
  CHECK_FALSE(s4.conclusion_holds);
  CHECK(s4.witness.cycle == Cycle{2, 3});
  const TheoremVerdict z30 = sylow_tower_check(G("C:30"));
  CHECK(z30.premise_holds);
  CHECK(z30.conclusion_holds);
  for (const auto& ord : {std::vector<Prime>{5, 3, 2}, std::vector<Prime>{3, 2, 5}})
    CHECK(sylow_tower_for(G("C:30"), ord).has_value());
  for (const auto& g : small_groups()) {
    const TheoremVerdict v = sylow_tower_check(g);
    CHECK_FALSE(v.refutes());
    if (v.premise_holds) CHECK(v.witness.ordering == *topological_peel(v.witness.graph));
  }
}

TEST_CASE("solubility criteria") {
  const TheoremVerdict s3 = solubility_criteria(G("S:3"));
  CHECK(s3.witness.criteria == std::vector<bool>{true, true, true});
  CHECK(s3.conclusion_holds);
  const TheoremVerdict a5 = solubility_criteria(G("A:5"));
  CHECK(a5.witness.criteria == std::vector<bool>{false, false, false});
  CHECK_FALSE(a5.premise_holds);
  CHECK_FALSE(a5.conclusion_holds);
  CHECK(a5.witness.graph == PrimeDigraph({2, 3, 5}, {{2, 3}, {3, 2}, {5, 2}}));
  const TheoremVerdict h = solubility_criteria(G("Schmidt:3,5xSchmidt:5,3"));
  CHECK(h.witness.graph == PrimeDigraph({3, 5}, {{3, 5}, {5, 3}}));
  CHECK(h.witness.criteria == std::vector<bool>{false, true, false});
  CHECK(h.conclusion_holds);
  for (const auto& g : small_groups()) CHECK_FALSE(solubility_criteria(g).refutes());
}

TEST_CASE("Mersenne divisor test") {
  CHECK(divides_small_mersenne(3));
  CHECK(divides_small_mersenne(7));
  CHECK(divides_small_mersenne(31));
  CHECK(divides_small_mersenne(23));   // 2^11 - 1 = 23 * 89
  CHECK_FALSE(divides_small_mersenne(5));  // order of 2 mod 5 is 4
  CHECK_FALSE(divides_small_mersenne(2));
  CHECK_FALSE(divides_small_mersenne(13));
}

TEST_CASE("hall normal check") {
  const TheoremVerdict a4 = hall_normal_check(G("A:4"), {2});
  CHECK(a4.premise_holds);
  CHECK(a4.conclusion_holds);
  CHECK(a4.witness.orders == std::vector<std::size_t>{4});
  const TheoremVerdict s4 = hall_normal_check(G("S:4"), {2});
  CHECK_FALSE(s4.premise_holds);
  const FiniteGroup s3 = G("S:3");
  const TheoremVerdict full = hall_normal_check(s3, {2, 3});
  CHECK(full.premise_holds);
  CHECK(full.conclusion_holds);
  // a larger class graph weakens the premise, never the conclusion
  const TheoremVerdict ref = hall_normal_check(G("A:4"), {2}, PrimeDigraph({2, 3}, {{2, 3}, {3, 2}}));
  CHECK_FALSE(ref.premise_holds);
  CHECK_THROWS_AS(hall_normal_check(G("S:4"), {2}, PrimeDigraph({2, 3}, {})), Error);
}

TEST_CASE("direct decomposition check") {
  const TheoremVerdict a = direct_decomposition_check(G("S:3xC:5"), GraphFn::Schmidt);
  CHECK(a.premise_holds);
  CHECK(a.conclusion_holds);
  CHECK(a.witness.blocks == std::vector<PrimeSet>{{2, 3}, {5}});
  CHECK(a.witness.orders == std::vector<std::size_t>{6, 5});
  const TheoremVerdict s4 = direct_decomposition_check(G("S:4"), GraphFn::Schmidt);
  CHECK_FALSE(s4.premise_holds);
  const TheoremVerdict z30 = direct_decomposition_check(G("C:30"), GraphFn::Hawkes);
  CHECK(z30.premise_holds);
  CHECK(z30.conclusion_holds);
  CHECK(z30.witness.blocks.size() == 3);
  CHECK_THROWS_AS(direct_decomposition_check(G("S:4"), GraphFn::Gk), Error);
  const TheoremVerdict insol = direct_decomposition_check(G("A:5xC:7"), GraphFn::Sylow);
  CHECK_FALSE(insol.premise_holds);
  for (const auto& g : small_groups())
    for (GraphFn fn : {GraphFn::Hawkes, GraphFn::Schmidt, GraphFn::Sylow})
      CHECK_FALSE(direct_decomposition_check(g, fn).refutes());
}

TEST_CASE("coprime triple check") {
  const FiniteGroup z30 = G("C:30");
  const auto t = complement_hall_triple(z30, {{2}, {3}, {5}});
  CHECK(t[0].order() == 15);
  const TheoremVerdict v = coprime_triple_check(z30, t[0], t[1], t[2]);
  CHECK(v.premise_holds);
  CHECK(v.conclusion_holds);

  const FiniteGroup s4 = G("S:4");
  const SubgroupRef s3 = subgroup_generated(
      s4, std::vector<Permutation>{Permutation::from_cycles(4, "(1 2 3)"), Permutation::from_cycles(4, "(1 2)")});
  const TheoremVerdict w =
      coprime_triple_check(s4, sylow_subgroup(s4, 2), commutator_subgroup(whole_group(s4)), s3);
  CHECK_FALSE(w.premise_holds);
  CHECK(w.witness.graph == PrimeDigraph({2, 3}, {{2, 3}, {3, 2}}));
  CHECK(*w.witness.expected == PrimeDigraph({2, 3}, {{2, 2}, {2, 3}, {3, 2}}));

  const FiniteGroup g = G("S:3xC:5xC:7");
  const auto h = complement_hall_triple(g, {{2, 3}, {5}, {7}});
  const TheoremVerdict u = coprime_triple_check(g, h[0], h[1], h[2]);
  CHECK(u.premise_holds);
  CHECK(u.conclusion_holds);
  CHECK_THROWS_AS(complement_hall_triple(g, {{2, 3}, {5}}), Error);
  CHECK_THROWS_AS(coprime_triple_check(g, trivial_subgroup(s4), h[1], h[2]), Error);
}

TEST_CASE("minimal simple checks") {
  const auto vs = minimal_simple_graph_check();
  REQUIRE(vs.size() == 4);
  for (const auto& v : vs) {
    CHECK(v.premise_holds);
    CHECK_MESSAGE(v.conclusion_holds, v.group << " " << v.witness.graph.to_string());
  }
  CHECK(vs[1].witness.graph == PrimeDigraph({2, 3, 7}, {{2, 7}, {3, 2}, {7, 2}}));
  CHECK(vs[3].witness.graph == PrimeDigraph({2, 5, 7, 13}, {{2, 7}, {5, 2}, {7, 2}, {13, 2}}));
}
