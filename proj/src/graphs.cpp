#include "arithgraph/graphs.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "arithgraph/errors.hpp"
#include "arithgraph/structure.hpp"

namespace arithgraph {

std::string_view to_string(GraphFn fn) {
  switch (fn) {
    case GraphFn::Gk: return "gk";
    case GraphFn::Hawkes: return "hawkes";
    case GraphFn::Sylow: return "sylow";
    case GraphFn::Schmidt: return "schmidt";
  }
  return "?";
}

GraphFn parse_graph_fn(std::string_view text) {
  for (GraphFn fn : {GraphFn::Gk, GraphFn::Hawkes, GraphFn::Sylow, GraphFn::Schmidt})
    if (to_string(fn) == text) return fn;
  throw Error(ErrorKind::InvalidSpec, "unknown graph function '" + std::string(text) +
                                          "' (expected gk, hawkes, sylow or schmidt)");
}

std::string_view to_string(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::ChiefFactorsWithP: return "chief-factors-with-p";
    case SelectorKind::SylowP: return "sylow-p";
    case SelectorKind::AllPSubgroups: return "all-p-subgroups";
    case SelectorKind::Custom: return "custom";
  }
  return "?";
}

PrimeDigraph gk_graph(const FiniteGroup& g) {
  PrimeDigraph out(g.primes(), {});
  std::set<std::uint32_t> orders;
  for (Elem e = 0; e < g.order(); ++e) orders.insert(g.elem_order(e));
  for (auto o : orders) {
    const PrimeSet ps = prime_divisors(o);
    for (Prime p : ps)
      for (Prime q : ps)
        if (p != q) out.add_edge(p, q);
  }
  return out;
}

PrimeDigraph hawkes_graph(const FiniteGroup& g) {
  PrimeDigraph out(g.primes(), {});
  for (Prime p : g.primes()) {
    const CoreTriple t = cores(g, p);
    for (Prime q : prime_divisors(g.order() / t.o_p_prime_p.order())) out.add_edge(p, q);
  }
  return out;
}

PrimeDigraph sylow_graph(const FiniteGroup& g) {
  PrimeDigraph out(g.primes(), {});
  for (Prime p : g.primes()) {
    const SubgroupRef P = sylow_subgroup(g, p);
    const std::size_t n = normalizer_members(g, P).count();
    const SubgroupRef pc = join(P, centralizer(g, P));
    for (Prime q : prime_divisors(n / pc.order())) out.add_edge(p, q);
  }
  return out;
}

PrimeDigraph schmidt_graph(const FiniteGroup& g, std::uint64_t work_cap, std::vector<SchmidtWitness>* witnesses) {
  PrimeDigraph out(g.primes(), {});
  const PrimeSet& ps = g.primes();
  if (ps.size() < 2) return out;

  std::vector<std::vector<Elem>> p_elems(ps.size());
  for (Elem e = 1; e < g.order(); ++e) {
    const auto o = g.elem_order(e);
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (is_power_of(o, ps[i])) p_elems[i].push_back(e);
  }

  std::uint64_t work = 0;
  auto charge = [&](std::uint64_t units) {
    work += units;
    if (work > work_cap)
      throw Error(ErrorKind::BudgetExceeded, "Schmidt pair scan on " + g.name() + " exceeds work cap " +
                                                 std::to_string(work_cap));
  };

  const auto& classes = g.classes();
  std::vector<Elem> orbit;
  for (std::size_t qi = 0; qi < ps.size(); ++qi) {
    const Prime q = ps[qi];
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
      const Prime p = ps[pi];
      if (p == q) continue;
      const std::size_t limit = p_part(g.order(), p);
      bool found = false;
      for (const auto& cls : classes) {
        if (found) break;
        const Elem x = cls.front();
        if (x == FiniteGroup::identity() || !is_power_of(g.elem_order(x), q)) continue;
        // a and a^x lead to the same orbit; skip repeats for this x.
        std::unordered_set<Elem> seen;
        for (Elem a : p_elems[pi]) {
          if (seen.count(a)) continue;
          charge(1);
          if (g.commute(a, x)) continue;
          orbit.assign(1, a);
          for (Elem y = g.conj(a, x); y != a; y = g.conj(y, x)) orbit.push_back(y);
          for (Elem y : orbit) seen.insert(y);
          std::uint64_t visited = 0;
          auto sub = closure(trivial_subgroup(g), orbit, limit, [&](Elem e) {
            ++visited;
            return is_p_element(g, e, p);
          });
          charge(visited);
          if (sub) {
            out.add_edge(p, q);
            if (witnesses) witnesses->push_back({p, q, a, x});
            found = true;
            break;
          }
        }
      }
    }
  }
  return out;
}

PrimeDigraph compute_graph(const FiniteGroup& g, GraphFn fn) {
  switch (fn) {
    case GraphFn::Gk: return gk_graph(g);
    case GraphFn::Hawkes: return hawkes_graph(g);
    case GraphFn::Sylow: return sylow_graph(g);
    case GraphFn::Schmidt: return schmidt_graph(g);
  }
  return {};
}

std::uint64_t induced_automorphism_order(const FiniteGroup& g, const Section& s) {
  const ElementSet nt = normalizer_members(g, s.top);
  const ElementSet n = s.bottom.is_trivial() ? nt : (nt & normalizer_members(g, s.bottom));
  std::uint64_t c = 0;
  auto tops = s.top.generators();
  n.for_each([&](Elem x) {
    for (Elem h : tops)
      if (!s.bottom.contains(g.mul(g.inv(h), g.conj(h, x)))) return;
    ++c;
  });
  return n.count() / c;
}

std::vector<Section> chief_factors(const FiniteGroup& g) {
  const auto normals = normal_subgroups(g);
  std::vector<Section> out;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = 0; j < normals.size(); ++j) {
      const auto& k = normals[i];
      const auto& h = normals[j];
      if (h.order() <= k.order() || !k.members().is_subset_of(h.members())) continue;
      bool covering = true;
      for (const auto& m : normals) {
        if (m.order() <= k.order() || m.order() >= h.order()) continue;
        if (k.members().is_subset_of(m.members()) && m.members().is_subset_of(h.members())) {
          covering = false;
          break;
        }
      }
      if (covering) out.push_back({h, k});
    }
  }
  return out;
}

std::vector<SubgroupRef> p_subgroup_classes(const FiniteGroup& g, Prime p, std::size_t cap) {
  std::vector<SubgroupRef> reps;
  if (g.order() % p != 0) return reps;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::size_t total = 0;
  auto add_class = [&](const SubgroupRef& k) {
    const auto cs = conjugates(k);
    total += cs.size();
    if (total > cap)
      throw Error(ErrorKind::BudgetExceeded, g.name() + " has more than " + std::to_string(cap) + " " +
                                                 std::to_string(p) + "-subgroups");
    for (const auto& c : cs) seen.insert(c.members());
    reps.push_back(cs.front());
  };
  std::vector<SubgroupRef> queue{trivial_subgroup(g)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const SubgroupRef P = queue[i];
    const ElementSet n = normalizer_members(g, P);
    ElementSet done = P.members();
    n.for_each([&](Elem x) {
      if (done.test(x) || !is_p_element(g, x, p) || !P.contains(g.pow(x, p))) return;
      Elem one[1] = {x};
      SubgroupRef k = *closure(P, one);
      k.members().for_each([&](Elem y) { done.insert(y); });
      if (seen.count(k.members())) return;
      add_class(k);
      queue.push_back(reps.back());
    });
  }
  return reps;
}

std::vector<Section> select_sections(const FiniteGroup& g, const SectionSelector& sel, Prime p) {
  std::vector<Section> out;
  switch (sel.kind) {
    case SelectorKind::ChiefFactorsWithP:
      for (auto& s : chief_factors(g))
        if ((s.top.order() / s.bottom.order()) % p == 0) out.push_back(std::move(s));
      break;
    case SelectorKind::SylowP:
      out.push_back({sylow_subgroup(g, p), trivial_subgroup(g)});
      break;
    case SelectorKind::AllPSubgroups:
      for (auto& s : p_subgroup_classes(g, p, sel.subgroup_cap)) out.push_back({std::move(s), trivial_subgroup(g)});
      break;
    case SelectorKind::Custom:
      if (!sel.custom) throw Error(ErrorKind::SelectorUndefined, "custom selector has no enumerator");
      out = sel.custom(g, p);
      break;
  }
  return out;
}

PrimeDigraph theta_local_graph(const FiniteGroup& g, const SectionSelector& sel, bool exclude_loops) {
  PrimeDigraph out(g.primes(), {});
  for (Prime p : g.primes()) {
    for (const auto& s : select_sections(g, sel, p)) {
      for (Prime q : prime_divisors(induced_automorphism_order(g, s)))
        if (!(exclude_loops && q == p)) out.add_edge(p, q);
    }
  }
  return out;
}

PrimeDigraph hawkes_graph_chief(const FiniteGroup& g) {
  return theta_local_graph(g, SectionSelector{SelectorKind::ChiefFactorsWithP, {}, kMaxPSubgroups}, false);
}

}  // namespace arithgraph
