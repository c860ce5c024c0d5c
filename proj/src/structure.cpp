#include "arithgraph/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "arithgraph/errors.hpp"

namespace arithgraph {

namespace {

void require_divides(const FiniteGroup& g, Prime p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw Error(ErrorKind::PrimeNotDividing, std::to_string(p) + " does not divide |" + g.name() + "| = " +
                                                 std::to_string(g.order()));
}

// Smallest subgroup containing base and every member of `members`; members
// must already form a subgroup that contains base.
SubgroupRef grow_to(SubgroupRef base, const ElementSet& members) {
  members.for_each([&](Elem e) {
    if (base.order() == members.count() || base.contains(e)) return;
    Elem one[1] = {e};
    base = *closure(base, one);
  });
  return base;
}

bool lex_order(const SubgroupRef& a, const SubgroupRef& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return lex_less(a.members(), b.members());
}

}  // namespace

ElementSet normalizer_members(const FiniteGroup& g, const SubgroupRef& h) {
  ElementSet m(g.order());
  auto gens = h.generators();
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem t : gens)
      if (!h.contains(g.conj(t, x))) {
        ok = false;
        break;
      }
    if (ok) m.insert(x);
  }
  return m;
}

bool is_p_element(const FiniteGroup& g, Elem e, Prime p) {
  const auto o = g.elem_order(e);
  return o == 1 || is_power_of(o, p);
}

bool is_pi_element(const FiniteGroup& g, Elem e, const PrimeSet& pi) { return is_pi_number(g.elem_order(e), pi); }

SubgroupRef normalizer(const FiniteGroup& g, const SubgroupRef& h) { return grow_to(h, normalizer_members(g, h)); }

SubgroupRef centralizer(const FiniteGroup& g, const SubgroupRef& h) {
  ElementSet m(g.order());
  auto gens = h.generators();
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem t : gens)
      if (!g.commute(t, x)) {
        ok = false;
        break;
      }
    if (ok) m.insert(x);
  }
  return subgroup_from_members(g, m);
}

SubgroupRef center(const FiniteGroup& g) { return centralizer(g, whole_group(g)); }

std::vector<SubgroupRef> conjugates(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  std::vector<SubgroupRef> orbit{h};
  std::unordered_set<ElementSet, ElementSetHash> seen{h.members()};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Elem s : g.generators()) {
      SubgroupRef c = conjugate(orbit[i], s);
      if (seen.insert(c.members()).second) orbit.push_back(std::move(c));
    }
  }
  std::sort(orbit.begin(), orbit.end(), lex_order);
  return orbit;
}

SubgroupRef least_conjugate(const SubgroupRef& h) {
  if (is_normal(h)) return h;
  return conjugates(h).front();
}

SubgroupRef core(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  ElementSet k = h.members();
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem s : g.generators()) {
      ElementSet img(g.order());
      k.for_each([&](Elem e) { img.insert(g.conj(e, s)); });
      ElementSet next = k & img;
      if (next.count() != k.count()) {
        k = std::move(next);
        changed = true;
      }
    }
  }
  return subgroup_from_members(g, k);
}

SubgroupRef sylow_subgroup(const FiniteGroup& g, Prime p) {
  require_divides(g, p);
  const std::uint64_t target = p_part(g.order(), p);
  SubgroupRef P = trivial_subgroup(g);
  while (P.order() < target) {
    const ElementSet n = normalizer_members(g, P);
    std::optional<Elem> pick;
    for (Elem e : n.to_vector())
      if (!P.contains(e) && is_p_element(g, e, p)) {
        pick = e;
        break;
      }
    if (!pick) throw Error(ErrorKind::NotFound, "normalizer climb stalled");
    Elem one[1] = {*pick};
    P = *closure(P, one);
  }
  return least_conjugate(P);
}

std::vector<SubgroupRef> normal_subgroups(const FiniteGroup& g) {
  const auto& d = g.data();
  std::call_once(d.normals_once, [&] {
    std::vector<SubgroupRef> closures;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    const auto& cls = g.classes();
    for (std::size_t c = 1; c < cls.size(); ++c) {
      SubgroupRef n = *closure(trivial_subgroup(g), cls[c]);
      if (seen.insert(n.members()).second) closures.push_back(std::move(n));
    }
    std::vector<SubgroupRef> all{trivial_subgroup(g)};
    seen.insert(all.front().members());
    for (const auto& n : closures) all.push_back(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (const auto& b : closures) {
        if (b.members().is_subset_of(all[i].members())) continue;
        SubgroupRef j = join(all[i], b);
        if (seen.insert(j.members()).second) {
          all.push_back(std::move(j));
          if (all.size() > kMaxNormalSubgroups)
            throw Error(ErrorKind::BudgetExceeded, g.name() + " has more than " +
                                                       std::to_string(kMaxNormalSubgroups) + " normal subgroups");
        }
      }
    }
    std::sort(all.begin(), all.end(), lex_order);
    for (const auto& n : all) {
      auto gens = n.generators();
      d.normals.push_back({n.members(), std::vector<Elem>(gens.begin(), gens.end())});
    }
  });
  std::vector<SubgroupRef> out;
  out.reserve(d.normals.size());
  for (const auto& c : d.normals) out.emplace_back(g, c.members, c.gens);
  return out;
}

CoreTriple cores(const FiniteGroup& g, Prime p) {
  require_divides(g, p);
  CoreTriple t;
  t.p = p;
  t.o_p = core(sylow_subgroup(g, p));
  t.o_p_prime = trivial_subgroup(g);
  for (const auto& n : normal_subgroups(g))
    if (n.order() % p != 0 && n.order() > t.o_p_prime.order()) t.o_p_prime = n;
  if (t.o_p_prime.is_trivial()) {
    t.o_p_prime_p = t.o_p;
    return t;
  }
  const Quotient q = quotient_group(g, t.o_p_prime);
  SubgroupRef top = q.group.order() % p == 0 ? core(sylow_subgroup(q.group, p)) : trivial_subgroup(q.group);
  t.o_p_prime_p = preimage(q, top);
  return t;
}

SubgroupRef normal_closure(const SubgroupRef& within, std::span<const Elem> seed) {
  const FiniteGroup& g = within.parent();
  SubgroupRef k = subgroup_generated(g, seed);
  for (std::size_t i = 0; i < k.generators().size(); ++i) {
    for (Elem h : within.generators()) {
      const Elem c = g.conj(k.generators()[i], h);
      if (k.contains(c)) continue;
      Elem one[1] = {c};
      k = *closure(k, one);
    }
  }
  return k;
}

SubgroupRef commutator_subgroup(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Elem> seed;
  auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Elem a = gens[i], b = gens[j];
      const Elem c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != FiniteGroup::identity()) seed.push_back(c);
    }
  return normal_closure(h, seed);
}

SeriesReport derived_series(const FiniteGroup& g) {
  SeriesReport r;
  r.kind = SeriesKind::Derived;
  r.terms.push_back(whole_group(g));
  while (!r.terms.back().is_trivial()) {
    SubgroupRef next = commutator_subgroup(r.terms.back());
    if (next.order() == r.terms.back().order()) break;
    r.terms.push_back(std::move(next));
  }
  r.verdict = r.terms.back().is_trivial();
  return r;
}

bool is_soluble(const FiniteGroup& g) { return derived_series(g).verdict; }

bool is_nilpotent(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  const PrimeSet ps = prime_divisors(h.order());
  std::vector<std::uint64_t> counts(ps.size(), 0);
  h.members().for_each([&](Elem e) {
    const auto o = g.elem_order(e);
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (o == 1 || is_power_of(o, ps[i])) ++counts[i];
  });
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (counts[i] != p_part(h.order(), ps[i])) return false;
  return true;
}

bool is_nilpotent(const FiniteGroup& g) { return is_nilpotent(whole_group(g)); }

SubgroupLattice subgroup_lattice(const FiniteGroup& g, std::size_t threshold) {
  if (g.order() > threshold)
    throw Error(ErrorKind::ThresholdExceeded, "subgroup lattice of " + g.name() + " (order " +
                                                  std::to_string(g.order()) + ") exceeds threshold " +
                                                  std::to_string(threshold));
  // Cyclic subgroups of prime-power order, one generator each.
  std::vector<Elem> zuppos;
  {
    std::vector<bool> done(g.order(), false);
    for (Elem e = 1; e < g.order(); ++e) {
      const auto o = g.elem_order(e);
      if (done[e] || prime_power_decomposition(o).first == 0) continue;
      zuppos.push_back(e);
      Elem x = e;
      for (std::uint32_t k = 1; k <= o; ++k, x = g.mul(x, e))
        if (std::gcd(k, o) == 1) done[x] = true;
    }
  }

  std::vector<SubgroupRef> all;
  std::vector<std::size_t> cls;
  std::vector<std::size_t> reps;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto add_class = [&](const SubgroupRef& k) {
    const std::size_t id = reps.size();
    reps.push_back(all.size());
    for (auto& c : conjugates(k)) {
      index.emplace(c.members(), all.size());
      all.push_back(std::move(c));
      cls.push_back(id);
    }
  };
  add_class(trivial_subgroup(g));
  std::vector<bool> rep_maximal;
  for (std::size_t w = 0; w < reps.size(); ++w) {
    const SubgroupRef h = all[reps[w]];
    bool maximal = !h.is_whole();
    for (Elem z : zuppos) {
      if (h.contains(z)) continue;
      Elem one[1] = {z};
      SubgroupRef k = *closure(h, one);
      if (!k.is_whole()) maximal = false;
      if (!index.count(k.members())) add_class(k);
    }
    rep_maximal.push_back(maximal);
  }

  std::vector<std::size_t> perm(all.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return lex_order(all[a], all[b]); });
  SubgroupLattice out;
  std::vector<std::size_t> class_rename(reps.size(), SIZE_MAX);
  std::size_t next_class = 0;
  for (std::size_t i : perm) {
    if (class_rename[cls[i]] == SIZE_MAX) class_rename[cls[i]] = next_class++;
    out.subgroups.push_back(all[i]);
    out.class_of.push_back(class_rename[cls[i]]);
    out.maximal.push_back(rep_maximal[cls[i]]);
  }
  return out;
}

SubgroupRef frattini_subgroup(const FiniteGroup& g, std::size_t threshold) {
  const SubgroupLattice lat = subgroup_lattice(g, threshold);
  ElementSet m = whole_group(g).members();
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    if (lat.maximal[i]) m &= lat.subgroups[i].members();
  return subgroup_from_members(g, m);
}

SubgroupRef hall_subgroup(const FiniteGroup& g, const PrimeSet& pi) {
  const PrimeSet pi0 = set_intersection(pi, g.primes());
  const std::uint64_t target = pi_part(g.order(), pi0);
  if (target == 1) return trivial_subgroup(g);
  if (target == g.order()) return whole_group(g);

  if (is_soluble(g)) {
    std::mt19937_64 rng(0x48a11ull ^ g.order());
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    SubgroupRef h = sylow_subgroup(g, pi0.front());
    for (std::size_t i = 1; i < pi0.size(); ++i) {
      const SubgroupRef s = sylow_subgroup(g, pi0[i]);
      const std::size_t want = h.order() * s.order();
      std::optional<SubgroupRef> k;
      for (unsigned r = 0; r < kHallRetries && !k; ++r) {
        const SubgroupRef c = conjugate(s, pick(rng));
        k = closure(h, c.generators(), want);
      }
      if (!k)
        for (const auto& c : conjugates(s))
          if ((k = closure(h, c.generators(), want))) break;
      if (!k) throw Error(ErrorKind::NotFound, "no Hall subgroup assembled from Sylow conjugates");
      h = std::move(*k);
    }
    return least_conjugate(h);
  }

  if (g.order() > kFrattiniThreshold)
    throw Error(ErrorKind::NotSolubleAndTooLarge,
                g.name() + " is not soluble and has order " + std::to_string(g.order()) + " > " +
                    std::to_string(kFrattiniThreshold));
  const SubgroupLattice lat = subgroup_lattice(g);
  for (const auto& h : lat.subgroups)
    if (h.order() == target) return h;
  throw Error(ErrorKind::NotFound, "no Hall subgroup of order " + std::to_string(target) + " in " + g.name());
}

std::optional<SubgroupRef> normal_hall_subgroup(const FiniteGroup& g, const PrimeSet& pi) {
  const std::uint64_t target = pi_part(g.order(), set_intersection(pi, g.primes()));
  std::vector<Elem> seed;
  for (Elem e = 1; e < g.order(); ++e)
    if (is_pi_element(g, e, pi)) seed.push_back(e);
  auto k = closure(trivial_subgroup(g), seed, target);
  if (!k || k->order() != target) return std::nullopt;
  return k;
}

std::optional<SeriesReport> sylow_tower_for(const FiniteGroup& g, const std::vector<Prime>& ordering) {
  PrimeSet sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.primes()) throw Error(ErrorKind::InvalidSpec, "ordering must list every prime divisor once");
  SeriesReport r;
  r.kind = SeriesKind::SylowTower;
  r.ordering = ordering;
  r.terms.push_back(trivial_subgroup(g));
  PrimeSet prefix;
  for (Prime p : ordering) {
    prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), p), p);
    auto n = normal_hall_subgroup(g, prefix);
    if (!n) return std::nullopt;
    r.terms.push_back(std::move(*n));
  }
  r.verdict = true;
  return r;
}

std::optional<SeriesReport> find_sylow_tower(const FiniteGroup& g) {
  const PrimeSet& ps = g.primes();
  const std::size_t k = ps.size();
  std::unordered_map<std::uint32_t, bool> has_normal_hall;
  auto ok = [&](std::uint32_t mask) {
    auto it = has_normal_hall.find(mask);
    if (it != has_normal_hall.end()) return it->second;
    PrimeSet sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) sub.push_back(ps[i]);
    return has_normal_hall[mask] = normal_hall_subgroup(g, sub).has_value();
  };
  std::vector<Prime> order;
  std::unordered_set<std::uint32_t> dead;
  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t mask) {
    if (order.size() == k) return true;
    if (dead.count(mask)) return false;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1u) continue;
      const std::uint32_t next = mask | (1u << i);
      if (!ok(next)) continue;
      order.push_back(ps[i]);
      if (dfs(next)) return true;
      order.pop_back();
    }
    dead.insert(mask);
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return sylow_tower_for(g, order);
}

}  // namespace arithgraph
