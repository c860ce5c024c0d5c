#include <doctest.h>

#include "arithgraph/catalog.hpp"
#include "arithgraph/classgraph.hpp"
#include "arithgraph/errors.hpp"
#include "arithgraph/spec_text.hpp"
#include "arithgraph/structure.hpp"

using namespace arithgraph;

namespace {

Corpus corpus_of(std::initializer_list<const char*> specs) {
  Corpus c;
  for (const char* s : specs) c.add(s, build(parse_group_spec(s)), s);
  return c;
}

}  // namespace

TEST_CASE("corpus basics") {
  Corpus c = corpus_of({"S:4", "C:5"});
  CHECK(c.size() == 2);
  CHECK(c.find("C:5") == std::size_t{1});
  CHECK_FALSE(c.find("A:5").has_value());
  CHECK_THROWS_AS(c.add("S:4", symmetric_group(4)), Error);
  // cached graphs equal a fresh computation
  CHECK(c.graph(0, GraphFn::Hawkes) == hawkes_graph(c[0].group));
  CHECK(c.graph(0, GraphFn::Hawkes) == hawkes_graph(c[0].group));
  const Corpus small = c.filtered([](const CorpusEntry& e) { return e.group.order() < 10; });
  CHECK(small.size() == 1);
}

TEST_CASE("corpus graphs") {
  const Corpus s4 = corpus_of({"S:4"});
  CHECK(corpus_graph(s4, GraphFn::Hawkes) == PrimeDigraph({2, 3}, {{2, 2}, {2, 3}, {3, 2}}));
  const Corpus both = corpus_of({"S:4", "C:5"});
  CHECK(corpus_graph(both, GraphFn::Hawkes) == PrimeDigraph({2, 3, 5}, {{2, 2}, {2, 3}, {3, 2}}));
  CHECK(corpus_graph(Corpus(), GraphFn::Hawkes).empty());
  // union over a split corpus
  const Corpus all = corpus_of({"S:4", "A:4", "D:5", "Schmidt:7,3"});
  const Corpus a = all.filtered([](const CorpusEntry& e) { return e.group.order() <= 12; });
  const Corpus b = all.filtered([](const CorpusEntry& e) { return e.group.order() > 12; });
  for (GraphFn fn : {GraphFn::Sylow, GraphFn::Schmidt, GraphFn::Hawkes, GraphFn::Gk}) {
    CHECK(corpus_graph(all, fn) == graph_union(corpus_graph(a, fn), corpus_graph(b, fn)));
    CHECK(corpus_graph(all, fn, 3) == corpus_graph(all, fn, 1));
  }
}

TEST_CASE("x_gamma membership") {
  const PrimeDigraph cls = corpus_graph(corpus_of({"S:4"}), GraphFn::Schmidt);
  CHECK(x_gamma_member(symmetric_group(3), cls, GraphFn::Schmidt));
  CHECK_FALSE(x_gamma_member(cyclic_group(5), cls, GraphFn::Schmidt));
  CHECK(x_gamma_member(cyclic_group(1), cls, GraphFn::Schmidt));
  // monotone in the corpus
  const PrimeDigraph bigger = corpus_graph(corpus_of({"S:4", "C:5"}), GraphFn::Schmidt);
  for (const char* s : {"S:3", "A:4", "C:5", "D:5", "S:3xC:5"}) {
    const FiniteGroup g = build(parse_group_spec(s));
    if (x_gamma_member(g, cls, GraphFn::Schmidt)) CHECK(x_gamma_member(g, bigger, GraphFn::Schmidt));
  }
}

TEST_CASE("closure checks") {
  const Corpus c = corpus_of({"S:4", "A:4", "S:3", "C:5", "D:6", "S:3xC:5"});
  SUBCASE("sylow graph is not S-closed, with the A4 <= S4 witness") {
    const ClosureReport r = closure_check(c, GraphFn::Sylow, ClosureOp::S);
    CHECK_FALSE(r.holds);
    bool found = false;
    for (const auto& w : r.witnesses) {
      if (w.group == "S:4" && w.first_order == 12) {
        found = true;
        CHECK(w.lhs == PrimeDigraph({2, 3}, {{2, 3}}));
        CHECK(w.rhs == PrimeDigraph({2, 3}, {{3, 2}}));
        CHECK(w.offending == std::vector<Edge>{{2, 3}});
      }
      CHECK(revalidate(c, GraphFn::Sylow, ClosureOp::S, w));
    }
    CHECK(found);
  }
  SUBCASE("hawkes closure") {
    for (ClosureOp op : {ClosureOp::S, ClosureOp::Q, ClosureOp::D0, ClosureOp::R0, ClosureOp::N0, ClosureOp::EPhi})
      CHECK(closure_check(c, GraphFn::Hawkes, op).holds);
  }
  SUBCASE("schmidt closure") {
    for (ClosureOp op : {ClosureOp::S, ClosureOp::Q, ClosureOp::D0, ClosureOp::R0})
      CHECK(closure_check(c, GraphFn::Schmidt, op).holds);
    const Corpus pair = corpus_of({"S:3", "C:5"});
    const ClosureReport d0 = closure_check(pair, GraphFn::Schmidt, ClosureOp::D0);
    CHECK(d0.holds);
    CHECK(d0.checks > 0);
  }
  SUBCASE("sylow Q and R0") {
    CHECK(closure_check(c, GraphFn::Sylow, ClosureOp::Q).holds);
    CHECK(closure_check(c, GraphFn::Sylow, ClosureOp::R0).holds);
  }
  SUBCASE("EPhi on S4 is trivially equal") {
    const ClosureReport r = closure_check(corpus_of({"S:4"}), GraphFn::Hawkes, ClosureOp::EPhi);
    CHECK(r.holds);
    CHECK(r.groups.at(0).status == GroupStatus::Holds);
  }
  SUBCASE("reports are independent of the job count") {
    SamplingPolicy one, four;
    four.jobs = 4;
    const ClosureReport a = closure_check(c, GraphFn::Sylow, ClosureOp::S, one);
    const ClosureReport b = closure_check(c, GraphFn::Sylow, ClosureOp::S, four);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i].describe() == b.witnesses[i].describe());
    CHECK(a.checks == b.checks);
  }
}

TEST_CASE("EPhi skips above the Frattini threshold") {
  const ClosureReport r = closure_check(corpus_of({"PSL3:3"}), GraphFn::Hawkes, ClosureOp::EPhi);
  CHECK(r.holds);
  CHECK(r.groups.at(0).status == GroupStatus::Skipped);
}

TEST_CASE("S sampling on a large group") {
  // random subgroups are deduplicated; Sylow subgroups and normalizers are always included
  SamplingPolicy none, some;
  none.random_subgroups = 0;
  some.random_subgroups = 40;
  const Corpus c = corpus_of({"S:5"});
  const ClosureReport a = closure_check(c, GraphFn::Hawkes, ClosureOp::S, none);
  const ClosureReport b = closure_check(c, GraphFn::Hawkes, ClosureOp::S, some);
  CHECK(a.holds);
  CHECK(b.holds);
  CHECK(a.checks == 5);  // P2 = N(P2), P3, N(P3), P5, N(P5)
  CHECK(b.checks > a.checks);
}

TEST_CASE("operator and class parsing") {
  CHECK(parse_closure_op("EPhi") == ClosureOp::EPhi);
  CHECK(to_string(ClosureOp::D0) == "D0");
  CHECK_THROWS_AS(parse_closure_op("X"), Error);
  const ClassPredicate p = parse_class_predicate("p-nilpotent:3");
  CHECK(p.kind == ClassKind::PNilpotent);
  CHECK(p.p == 3);
  CHECK_THROWS_AS(parse_class_predicate("p-nilpotent:4"), Error);
  CHECK_THROWS_AS(parse_class_predicate("supersoluble"), Error);
}

TEST_CASE("class membership") {
  CHECK(in_class(symmetric_group(4), {ClassKind::Soluble, 2}));
  CHECK_FALSE(in_class(alternating_group(5), {ClassKind::Soluble, 2}));
  CHECK(in_class(symmetric_group(3), {ClassKind::PNilpotent, 2}));  // normal 2-complement C3
  CHECK_FALSE(in_class(symmetric_group(3), {ClassKind::PNilpotent, 3}));
  CHECK(in_class(alternating_group(4), {ClassKind::SylowTower, 2}));
  CHECK_FALSE(in_class(symmetric_group(4), {ClassKind::SylowTower, 2}));
}

TEST_CASE("recognition probe") {
  const Corpus nil = corpus_of({"C:6", "D:4", "C:30", "file:q8.grp"});
  const Corpus rest = corpus_of({"S:3", "A:4", "S:4"});
  const RecognitionReport r = recognition_probe(nil, rest, GraphFn::Hawkes, {ClassKind::Nilpotent, 2});
  CHECK(r.witnesses.empty());
  CHECK(r.members.size() == 4);
  // the GK graph cannot tell C6 from S3 x C2... both have an element of order 6
  const Corpus in = corpus_of({"C:6"});
  const Corpus out = corpus_of({"S:3xC:2"});
  const RecognitionReport g = recognition_probe(in, out, GraphFn::Gk, {ClassKind::Nilpotent, 2});
  REQUIRE(g.witnesses.size() == 1);
  CHECK(g.witnesses[0].member == "C:6");
  CHECK(g.witnesses[0].non_member == "S:3xC:2");
}
