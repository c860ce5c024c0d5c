#include <doctest.h>

#include <algorithm>

#include "arithgraph/catalog.hpp"
#include "arithgraph/errors.hpp"
#include "arithgraph/oracles.hpp"
#include "arithgraph/structure.hpp"
#include "small_groups.hpp"

using namespace arithgraph;

namespace {

Permutation P(std::size_t n, const char* c) { return Permutation::from_cycles(n, c); }

SubgroupRef gen(const FiniteGroup& g, std::initializer_list<const char*> cs) {
  std::vector<Permutation> ps;
  for (const char* c : cs) ps.push_back(P(g.degree(), c));
  return subgroup_generated(g, ps);
}

}  // namespace

TEST_CASE("sylow subgroups") {
  const FiniteGroup s3 = symmetric_group(3), s4 = symmetric_group(4);
  CHECK(sylow_subgroup(s3, 3) == gen(s3, {"(1 2 3)"}));
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  const SubgroupRef p13 = sylow_subgroup(psl3_3(), 13);
  CHECK(p13.order() == 13);
  try {
    sylow_subgroup(s4, 5);
    FAIL("expected PrimeNotDividing");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrimeNotDividing);
  }
  // exact p-part, and least among its conjugates, on every small group
  for (const auto& g : small_groups())
    for (Prime p : g.primes()) {
      const SubgroupRef s = sylow_subgroup(g, p);
      CHECK(s.order() == p_part(g.order(), p));
      CHECK(s == least_conjugate(s));
    }
}

TEST_CASE("normalizers and centralizers") {
  const FiniteGroup s4 = symmetric_group(4);
  const SubgroupRef h = gen(s4, {"(1 2 3)"});
  CHECK(normalizer(s4, h).order() == 6);
  CHECK(centralizer(s4, h).order() == 3);
  CHECK(normalizer(s4, whole_group(s4)).is_whole());
  CHECK(centralizer(s4, whole_group(s4)) == center(s4));
  CHECK(center(s4).is_trivial());
  const FiniteGroup z12 = cyclic_group(12);
  CHECK(centralizer(z12, gen(z12, {"(1 4 7 10)(2 5 8 11)(3 6 9 12)"})).is_whole());
  // centralizer is normal in normalizer, by brute force on small groups
  for (const auto& g : small_groups())
    for (Prime p : g.primes()) {
      const SubgroupRef s = sylow_subgroup(g, p), n = normalizer(g, s), c = centralizer(g, s);
      CHECK(c.members().is_subset_of(n.members()));
      for (Elem x : n.generators())
        c.members().for_each([&](Elem e) { CHECK(c.contains(g.conj(e, x))); });
    }
}

TEST_CASE("cores") {
  const FiniteGroup s4 = symmetric_group(4);
  const CoreTriple t2 = cores(s4, 2);
  CHECK(t2.o_p.order() == 4);
  CHECK(t2.o_p_prime.is_trivial());
  CHECK(t2.o_p_prime_p.order() == 4);
  const CoreTriple t3 = cores(s4, 3);
  CHECK(t3.o_p_prime.order() == 4);
  CHECK(t3.o_p_prime_p.order() == 12);
  const FiniteGroup d4 = dihedral_group(4);
  const CoreTriple tp = cores(d4, 2);
  CHECK(tp.o_p.is_whole());
  CHECK(tp.o_p_prime.is_trivial());
  CHECK(tp.o_p_prime_p.is_whole());
  for (const auto& g : small_groups())
    for (Prime p : g.primes()) {
      const CoreTriple t = cores(g, p);
      CHECK(is_normal(t.o_p));
      CHECK(is_normal(t.o_p_prime));
      CHECK(is_normal(t.o_p_prime_p));
      CHECK((t.o_p.order() == 1 || is_power_of(t.o_p.order(), p)));
      CHECK(t.o_p_prime.order() % p != 0);
      CHECK(t.o_p.members().is_subset_of(t.o_p_prime_p.members()));
      CHECK(t.o_p_prime.members().is_subset_of(t.o_p_prime_p.members()));
      // O_{p',p}/O_{p'} is the p-core of the quotient
      const Quotient q = quotient_group(g, t.o_p_prime);
      const SubgroupRef qp = q.group.order() % p == 0 ? cores(q.group, p).o_p : trivial_subgroup(q.group);
      CHECK(preimage(q, qp) == t.o_p_prime_p);
    }
}

TEST_CASE("normal subgroups") {
  CHECK(normal_subgroups(alternating_group(5)).size() == 2);
  const auto n4 = normal_subgroups(symmetric_group(4));
  std::vector<std::size_t> orders;
  for (const auto& n : n4) orders.push_back(n.order());
  CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(normal_subgroups(cyclic_group(6)).size() == 4);
  for (const auto& g : small_groups()) {
    const auto fast = normal_subgroups(g), slow = oracle::normal_subgroups(g);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
}

TEST_CASE("subgroup lattice against brute force") {
  for (const auto& g : small_groups()) {
    const auto lat = subgroup_lattice(g);
    const auto slow = oracle::all_subgroups(g);
    REQUIRE(lat.subgroups.size() == slow.size());
    for (std::size_t i = 0; i < slow.size(); ++i) CHECK(lat.subgroups[i] == slow[i]);
  }
  CHECK_THROWS_AS(oracle::all_subgroups(symmetric_group(5)), Error);
}

TEST_CASE("frattini subgroup") {
  CHECK(frattini_subgroup(symmetric_group(4)).is_trivial());
  CHECK(frattini_subgroup(cyclic_group(4)).order() == 2);
  const FiniteGroup q8 = load_group_file("q8.grp");
  CHECK(frattini_subgroup(q8) == center(q8));
  CHECK(frattini_subgroup(q8).order() == 2);
  CHECK(frattini_subgroup(cyclic_group(12)).order() == 2);
  try {
    frattini_subgroup(psl3_3());
    FAIL("expected ThresholdExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ThresholdExceeded);
  }
  CHECK_THROWS_AS(frattini_subgroup(psl2(8), 100), Error);
  CHECK(frattini_subgroup(psl2(8)).is_trivial());
  // brute force: intersection of the maximal members of the full lattice
  for (const auto& g : small_groups()) {
    const auto all = oracle::all_subgroups(g);
    ElementSet phi = whole_group(g).members();
    for (const auto& h : all) {
      if (h.is_whole()) continue;
      const bool maximal = std::none_of(all.begin(), all.end(), [&](const SubgroupRef& k) {
        return !k.is_whole() && k.order() > h.order() && h.members().is_subset_of(k.members());
      });
      if (maximal) phi &= h.members();
    }
    CHECK(frattini_subgroup(g).members() == phi);
  }
}

TEST_CASE("derived series, solubility, nilpotency") {
  const SeriesReport d = derived_series(symmetric_group(4));
  std::vector<std::size_t> orders;
  for (const auto& t : d.terms) orders.push_back(t.order());
  CHECK(orders == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(d.verdict);
  CHECK_FALSE(is_soluble(alternating_group(5)));
  CHECK(is_nilpotent(dihedral_group(4)));
  CHECK_FALSE(is_nilpotent(symmetric_group(3)));
  CHECK(is_nilpotent(cyclic_group(30)));
  CHECK(is_nilpotent(load_group_file("q8.grp")));
  CHECK_FALSE(is_nilpotent(load_group_file("sl2_3.grp")));
  for (const auto& g : small_groups()) {
    const SeriesReport r = derived_series(g);
    for (std::size_t i = 1; i < r.terms.size(); ++i) {
      CHECK(r.terms[i].order() < r.terms[i - 1].order());
      CHECK(r.terms[i] == commutator_subgroup(r.terms[i - 1]));
    }
  }
}

TEST_CASE("hall subgroups") {
  const FiniteGroup s4 = symmetric_group(4);
  CHECK(hall_subgroup(s4, {2, 3}).is_whole());
  const FiniteGroup s3c5 = build(parse_group_spec("S:3xC:5"));
  const SubgroupRef h = hall_subgroup(s3c5, {2, 3});
  CHECK(h.order() == 6);
  CHECK(is_normal(h));
  CHECK(hall_subgroup(s4, {3}).order() == 3);
  // P. Hall: soluble groups have Hall subgroups for every pi
  for (const auto& g : small_groups()) {
    if (!is_soluble(g)) continue;
    const PrimeSet ps = g.primes();
    for (std::uint32_t mask = 1; mask < (1u << ps.size()); ++mask) {
      PrimeSet pi;
      for (std::size_t k = 0; k < ps.size(); ++k)
        if (mask >> k & 1u) pi.push_back(ps[k]);
      const SubgroupRef hh = hall_subgroup(g, pi);
      CHECK(hh.order() == pi_part(g.order(), pi));
    }
  }
  // A5 has no Hall {3,5}-subgroup
  CHECK_THROWS_AS(hall_subgroup(alternating_group(5), {3, 5}), Error);
  CHECK(hall_subgroup(alternating_group(5), {2, 3}).order() == 12);
}

TEST_CASE("normal hall subgroups and sylow towers") {
  const FiniteGroup s4 = symmetric_group(4);
  CHECK_FALSE(normal_hall_subgroup(s4, {2}).has_value());
  CHECK_FALSE(normal_hall_subgroup(s4, {3}).has_value());
  CHECK(normal_hall_subgroup(build(parse_group_spec("Schmidt:2,3")), {2})->order() == 4);
  CHECK_FALSE(find_sylow_tower(s4).has_value());
  const auto t = find_sylow_tower(build(parse_group_spec("Schmidt:7,3")));
  REQUIRE(t.has_value());
  CHECK(t->ordering == std::vector<Prime>{7, 3});
  CHECK_FALSE(sylow_tower_for(build(parse_group_spec("Schmidt:7,3")), {3, 7}).has_value());
  CHECK_THROWS_AS(sylow_tower_for(s4, {2, 5}), Error);
}
