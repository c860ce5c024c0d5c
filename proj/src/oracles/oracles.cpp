#include "arithgraph/oracles.hpp"

#include <algorithm>
#include <unordered_set>

#include "arithgraph/errors.hpp"
#include "arithgraph/numtheory.hpp"
#include "arithgraph/structure.hpp"

namespace arithgraph::oracle {

namespace {

bool sorted_before(const SubgroupRef& a, const SubgroupRef& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return lex_less(a.members(), b.members());
}

// Every Sylow subgroup normal, by counting p-elements one prime at a time.
bool nilpotent_by_counting(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  for (Prime p : prime_divisors(h.order())) {
    std::size_t n = 0;
    h.members().for_each([&](Elem e) {
      std::uint64_t o = g.elem_order(e);
      while (o % p == 0) o /= p;
      if (o == 1) ++n;
    });
    if (n != p_part(h.order(), p)) return false;
  }
  return true;
}

bool normal_by_scan(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    h.members().for_each([&](Elem e) {
      if (ok && !h.contains(g.conj(e, x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::vector<SubgroupRef> all_subgroups(const FiniteGroup& g) {
  if (g.order() > kExhaustiveThreshold)
    throw Error(ErrorKind::ThresholdExceeded, "brute-force lattice limited to order " +
                                                  std::to_string(kExhaustiveThreshold));
  std::vector<SubgroupRef> out{trivial_subgroup(g)};
  std::unordered_set<ElementSet, ElementSetHash> seen{out.front().members()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem e = 0; e < g.order(); ++e) {
      if (out[i].contains(e)) continue;
      Elem one[1] = {e};
      SubgroupRef k = *closure(out[i], one);
      if (seen.insert(k.members()).second) out.push_back(std::move(k));
    }
  }
  std::sort(out.begin(), out.end(), sorted_before);
  return out;
}

PrimeDigraph schmidt_graph(const FiniteGroup& g) {
  PrimeDigraph out(g.primes(), {});
  const auto subs = oracle::all_subgroups(g);
  std::vector<bool> nil(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) nil[i] = nilpotent_by_counting(subs[i]);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (nil[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < subs.size() && minimal; ++j)
      if (j != i && !nil[j] && subs[j].order() < subs[i].order() &&
          subs[j].members().is_subset_of(subs[i].members()))
        minimal = false;
    if (!minimal) continue;
    const PrimeSet ps = prime_divisors(subs[i].order());
    if (ps.size() != 2) continue;
    for (Prime p : ps) {
      const Prime q = p == ps[0] ? ps[1] : ps[0];
      std::size_t n = 0;
      subs[i].members().for_each([&](Elem e) {
        if (g.elem_order(e) == 1 || is_power_of(g.elem_order(e), p)) ++n;
      });
      if (n == p_part(subs[i].order(), p)) out.add_edge(p, q);
    }
  }
  return out;
}

std::vector<SubgroupRef> normal_subgroups(const FiniteGroup& g) {
  std::vector<SubgroupRef> out;
  for (auto& h : oracle::all_subgroups(g))
    if (normal_by_scan(h)) out.push_back(std::move(h));
  return out;
}

PrimeDigraph hawkes_graph(const FiniteGroup& g) {
  PrimeDigraph out(g.primes(), {});
  const auto normals = oracle::normal_subgroups(g);
  for (Prime p : g.primes()) {
    const SubgroupRef* opp = nullptr;
    for (const auto& n : normals)
      if (n.order() % p != 0 && (!opp || n.order() > opp->order())) opp = &n;
    const SubgroupRef* top = opp;
    for (const auto& n : normals)
      if (opp->members().is_subset_of(n.members()) && is_power_of(n.order() / opp->order(), p) &&
          n.order() > top->order())
        top = &n;
    for (Prime q : prime_divisors(g.order() / top->order())) out.add_edge(p, q);
  }
  return out;
}

PrimeDigraph sylow_graph(const FiniteGroup& g) {
  PrimeDigraph out(g.primes(), {});
  const auto subs = oracle::all_subgroups(g);
  for (Prime p : g.primes()) {
    const auto it = std::find_if(subs.begin(), subs.end(),
                                 [&](const SubgroupRef& h) { return h.order() == p_part(g.order(), p); });
    const SubgroupRef& P = *it;
    std::vector<Elem> c;
    std::size_t n = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      bool norm = true, cent = true;
      P.members().for_each([&](Elem e) {
        if (!P.contains(g.conj(e, x))) norm = false;
        if (!g.commute(e, x)) cent = false;
      });
      if (norm) ++n;
      if (cent) c.push_back(x);
    }
    std::unordered_set<Elem> pc;
    P.members().for_each([&](Elem e) {
      for (Elem y : c) pc.insert(g.mul(e, y));
    });
    for (Prime q : prime_divisors(n / pc.size())) out.add_edge(p, q);
  }
  return out;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> out;
  std::vector<bool> done(g.order(), false);
  for (Elem e = 0; e < g.order(); ++e) {
    if (done[e]) continue;
    std::vector<Elem> cls;
    for (Elem x = 0; x < g.order(); ++x) {
      const Elem c = g.conj(e, x);
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace arithgraph::oracle
