#include "arithgraph/classgraph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "arithgraph/errors.hpp"
#include "arithgraph/parallel.hpp"
#include "arithgraph/structure.hpp"

namespace arithgraph {

struct Corpus::Cache {
  std::mutex m;
  // The group is kept alive next to its graph so the address key stays unique.
  std::map<std::pair<const void*, int>, std::pair<FiniteGroup, PrimeDigraph>> graphs;
};

Corpus::Corpus() : cache_(std::make_shared<Cache>()) {}

void Corpus::add(std::string name, FiniteGroup group, std::string spec) {
  if (find(name)) throw Error(ErrorKind::InvalidSpec, "duplicate corpus name '" + name + "'");
  entries_.push_back({std::move(name), std::move(spec), std::move(group)});
}

std::optional<std::size_t> Corpus::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name) return i;
  return std::nullopt;
}

PrimeDigraph Corpus::graph(std::size_t i, GraphFn fn) const {
  const FiniteGroup& g = entries_.at(i).group;
  const std::pair<const void*, int> key{&g.data(), static_cast<int>(fn)};
  {
    std::lock_guard lock(cache_->m);
    if (auto it = cache_->graphs.find(key); it != cache_->graphs.end()) return it->second.second;
  }
  PrimeDigraph out = compute_graph(g, fn);
  std::lock_guard lock(cache_->m);
  return cache_->graphs.emplace(key, std::make_pair(g, std::move(out))).first->second.second;
}

namespace {

bool is_budget(const Error& e) {
  return e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::ThresholdExceeded;
}

std::vector<Edge> symmetric_difference(const PrimeDigraph& a, const PrimeDigraph& b) {
  std::vector<Edge> out;
  std::set_symmetric_difference(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                                std::back_inserter(out));
  return out;
}

std::vector<Permutation> perms_of(const SubgroupRef& h) {
  std::vector<Permutation> out;
  for (Elem e : h.generators()) out.push_back(h.parent().element(e));
  return out;
}

std::uint64_t name_seed(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

PrimeDigraph graph_of_subgroup(const SubgroupRef& h, GraphFn fn) {
  if (h.is_whole()) return compute_graph(h.parent(), fn);
  return compute_graph(as_group(h, h.parent().name() + "<H>"), fn);
}

PrimeDigraph graph_of_quotient(const FiniteGroup& g, const SubgroupRef& n, GraphFn fn) {
  return compute_graph(quotient_group(g, n).group, fn);
}

std::vector<SubgroupRef> sample_subgroups(const CorpusEntry& e, const SamplingPolicy& pol) {
  const FiniteGroup& g = e.group;
  if (g.order() <= pol.exhaustive_threshold) return subgroup_lattice(g, pol.exhaustive_threshold).subgroups;
  std::vector<SubgroupRef> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto keep = [&](SubgroupRef h) {
    if (seen.insert(h.members()).second) out.push_back(std::move(h));
  };
  std::mt19937_64 rng(pol.seed ^ name_seed(e.name));
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  std::uniform_int_distribution<unsigned> count(pol.min_generators, pol.max_generators);
  for (std::size_t i = 0; i < pol.random_subgroups; ++i) {
    std::vector<Elem> gens(count(rng));
    for (auto& x : gens) x = pick(rng);
    keep(subgroup_generated(g, gens));
  }
  if (pol.sylow_and_normalizers)
    for (Prime p : g.primes()) {
      SubgroupRef s = sylow_subgroup(g, p);
      keep(s);
      keep(normalizer(g, s));
    }
  std::sort(out.begin(), out.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return lex_less(a.members(), b.members());
  });
  return out;
}

constexpr std::size_t kMaxWitnessesPerGroup = 16;

struct GroupResult {
  GroupOutcome outcome;
  std::vector<ClosureWitness> witnesses;
};

void record(GroupResult& r, ClosureWitness w) {
  r.outcome.status = GroupStatus::Fails;
  if (r.witnesses.size() < kMaxWitnessesPerGroup) r.witnesses.push_back(std::move(w));
}

// Runs one comparison, turning budget errors into a skip count.
template <class F>
void attempt(GroupResult& r, std::size_t& skipped, F&& f) {
  try {
    f();
    ++r.outcome.checks;
  } catch (const Error& e) {
    if (!is_budget(e)) throw;
    ++skipped;
  }
}

GroupResult check_group(const Corpus& c, std::size_t idx, GraphFn fn, ClosureOp op, const SamplingPolicy& pol) {
  const CorpusEntry& e = c[idx];
  const FiniteGroup& g = e.group;
  GroupResult r;
  r.outcome.group = e.name;
  std::size_t skipped = 0;
  try {
    const PrimeDigraph whole = c.graph(idx, fn);
    switch (op) {
      case ClosureOp::S: {
        for (const auto& h : sample_subgroups(e, pol)) {
          if (h.is_whole() || h.is_trivial()) continue;
          attempt(r, skipped, [&] {
            const PrimeDigraph gh = graph_of_subgroup(h, fn);
            if (!is_subgraph(gh, whole))
              record(r, {e.name, {}, perms_of(h), {}, h.order(), 0, gh, whole, missing_edges(gh, whole)});
          });
        }
        break;
      }
      case ClosureOp::Q: {
        for (const auto& n : normal_subgroups(g)) {
          if (n.is_trivial()) continue;
          attempt(r, skipped, [&] {
            const PrimeDigraph gq = graph_of_quotient(g, n, fn);
            if (!is_subgraph(gq, whole))
              record(r, {e.name, {}, perms_of(n), {}, n.order(), 0, gq, whole, missing_edges(gq, whole)});
          });
        }
        break;
      }
      case ClosureOp::R0: {
        const auto normals = normal_subgroups(g);
        std::vector<std::optional<PrimeDigraph>> quot(normals.size());
        auto qgraph = [&](std::size_t i) -> const PrimeDigraph& {
          if (!quot[i]) quot[i] = graph_of_quotient(g, normals[i], fn);
          return *quot[i];
        };
        for (std::size_t i = 0; i < normals.size(); ++i)
          for (std::size_t j = i + 1; j < normals.size(); ++j) {
            if ((normals[i].members() & normals[j].members()).count() != 1) continue;
            attempt(r, skipped, [&] {
              const PrimeDigraph u = graph_union(qgraph(i), qgraph(j));
              if (u != whole)
                record(r, {e.name, {}, perms_of(normals[i]), perms_of(normals[j]), normals[i].order(),
                           normals[j].order(), u, whole, symmetric_difference(u, whole)});
            });
          }
        break;
      }
      case ClosureOp::N0: {
        const auto normals = normal_subgroups(g);
        std::vector<std::optional<PrimeDigraph>> sub(normals.size());
        auto sgraph = [&](std::size_t i) -> const PrimeDigraph& {
          if (!sub[i]) sub[i] = graph_of_subgroup(normals[i], fn);
          return *sub[i];
        };
        for (std::size_t i = 0; i < normals.size(); ++i)
          for (std::size_t j = i + 1; j < normals.size(); ++j) {
            const std::size_t meet = (normals[i].members() & normals[j].members()).count();
            if (normals[i].order() * normals[j].order() != g.order() * meet) continue;
            attempt(r, skipped, [&] {
              const PrimeDigraph u = graph_union(sgraph(i), sgraph(j));
              if (u != whole)
                record(r, {e.name, {}, perms_of(normals[i]), perms_of(normals[j]), normals[i].order(),
                           normals[j].order(), u, whole, symmetric_difference(u, whole)});
            });
          }
        break;
      }
      case ClosureOp::EPhi: {
        if (g.order() > pol.frattini_threshold) {
          r.outcome.status = GroupStatus::Skipped;
          r.outcome.note = "order above Frattini threshold";
          return r;
        }
        attempt(r, skipped, [&] {
          const SubgroupRef phi = frattini_subgroup(g, pol.frattini_threshold);
          const PrimeDigraph gq = phi.is_trivial() ? whole : graph_of_quotient(g, phi, fn);
          if (gq != whole)
            record(r, {e.name, {}, perms_of(phi), {}, phi.order(), 0, gq, whole, symmetric_difference(gq, whole)});
        });
        break;
      }
      case ClosureOp::D0: break;
    }
  } catch (const Error& err) {
    if (!is_budget(err)) throw;
    r.outcome.status = GroupStatus::Skipped;
    r.outcome.note = err.what();
    return r;
  }
  if (skipped) {
    if (r.outcome.checks == 0 && r.outcome.status != GroupStatus::Fails) r.outcome.status = GroupStatus::Skipped;
    r.outcome.note = std::to_string(skipped) + " comparisons over budget";
  }
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> d0_pairs(const Corpus& c, const SamplingPolicy& pol) {
  std::vector<std::pair<std::size_t, std::size_t>> eligible;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i; j < c.size(); ++j) {
      const std::uint64_t a = c[i].group.order(), b = c[j].group.order();
      if (a > 1 && b > 1 && a * b <= pol.d0_max_order) eligible.emplace_back(i, j);
    }
  if (eligible.size() <= pol.d0_max_pairs) return eligible;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < pol.d0_max_pairs; ++k) out.push_back(eligible[k * eligible.size() / pol.d0_max_pairs]);
  return out;
}

GroupResult check_pair(const Corpus& c, std::size_t i, std::size_t j, GraphFn fn) {
  GroupResult r;
  r.outcome.group = c[i].name + " x " + c[j].name;
  try {
    const DirectProduct dp = direct_product(c[i].group, c[j].group);
    const PrimeDigraph lhs = compute_graph(dp.group, fn);
    const PrimeDigraph rhs = graph_union(c.graph(i, fn), c.graph(j, fn));
    ++r.outcome.checks;
    if (lhs != rhs) record(r, {c[i].name, c[j].name, {}, {}, 0, 0, lhs, rhs, symmetric_difference(lhs, rhs)});
  } catch (const Error& err) {
    if (!is_budget(err)) throw;
    r.outcome.status = GroupStatus::Skipped;
    r.outcome.note = err.what();
  }
  return r;
}

}  // namespace

PrimeDigraph corpus_graph(const Corpus& c, GraphFn fn, unsigned jobs, bool skip_budget_errors,
                          std::vector<std::string>* skipped) {
  std::vector<std::optional<PrimeDigraph>> parts(c.size());
  parallel_for(c.size(), jobs, [&](std::size_t i) {
    try {
      parts[i] = c.graph(i, fn);
    } catch (const Error& e) {
      if (!skip_budget_errors || !is_budget(e)) throw;
    }
  });
  PrimeDigraph out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (parts[i])
      out = graph_union(out, *parts[i]);
    else if (skipped)
      skipped->push_back(c[i].name);
  }
  return out;
}

bool x_gamma_member(const FiniteGroup& g, const PrimeDigraph& class_graph, GraphFn fn) {
  return is_subgraph(compute_graph(g, fn), class_graph);
}

std::string_view to_string(ClosureOp op) {
  switch (op) {
    case ClosureOp::S: return "S";
    case ClosureOp::Q: return "Q";
    case ClosureOp::D0: return "D0";
    case ClosureOp::R0: return "R0";
    case ClosureOp::N0: return "N0";
    case ClosureOp::EPhi: return "EPhi";
  }
  return "?";
}

ClosureOp parse_closure_op(std::string_view text) {
  for (ClosureOp op : {ClosureOp::S, ClosureOp::Q, ClosureOp::D0, ClosureOp::R0, ClosureOp::N0, ClosureOp::EPhi})
    if (to_string(op) == text) return op;
  throw Error(ErrorKind::InvalidSpec,
              "unknown closure operator '" + std::string(text) + "' (expected S, Q, D0, R0, N0 or EPhi)");
}

std::string_view to_string(GroupStatus s) {
  switch (s) {
    case GroupStatus::Holds: return "holds";
    case GroupStatus::Fails: return "fails";
    case GroupStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string ClosureWitness::describe() const {
  auto gens = [](const std::vector<Permutation>& ps) {
    std::string s = "<";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_cycles();
    return s + ">";
  };
  std::string out = group;
  if (!partner.empty()) out += " x " + partner;
  if (first_order) out += " first=" + gens(first) + " order " + std::to_string(first_order);
  if (second_order) out += " second=" + gens(second) + " order " + std::to_string(second_order);
  out += " lhs " + lhs.to_string() + " rhs " + rhs.to_string() + " offending {";
  for (std::size_t i = 0; i < offending.size(); ++i)
    out += (i ? ",(" : "(") + std::to_string(offending[i].first) + "," + std::to_string(offending[i].second) + ")";
  return out + "}";
}

ClosureReport closure_check(const Corpus& c, GraphFn fn, ClosureOp op, const SamplingPolicy& sampling) {
  ClosureReport rep;
  rep.fn = fn;
  rep.op = op;
  std::vector<GroupResult> results;
  if (op == ClosureOp::D0) {
    const auto pairs = d0_pairs(c, sampling);
    results.resize(pairs.size());
    parallel_for(pairs.size(), sampling.jobs,
                 [&](std::size_t k) { results[k] = check_pair(c, pairs[k].first, pairs[k].second, fn); });
  } else {
    results.resize(c.size());
    parallel_for(c.size(), sampling.jobs, [&](std::size_t i) { results[i] = check_group(c, i, fn, op, sampling); });
  }
  for (auto& r : results) {
    rep.checks += r.outcome.checks;
    if (r.outcome.status == GroupStatus::Fails) rep.holds = false;
    rep.groups.push_back(std::move(r.outcome));
    for (auto& w : r.witnesses) rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

bool revalidate(const Corpus& c, GraphFn fn, ClosureOp op, const ClosureWitness& w) {
  const auto gi = c.find(w.group);
  if (!gi) return false;
  const FiniteGroup& g = c[*gi].group;
  const PrimeDigraph whole = compute_graph(g, fn);
  auto sub = [&](const std::vector<Permutation>& ps) { return subgroup_generated(g, std::span(ps)); };
  PrimeDigraph lhs, rhs = whole;
  bool violated = false;
  switch (op) {
    case ClosureOp::S: {
      const SubgroupRef h = sub(w.first);
      if (h.order() != w.first_order) return false;
      lhs = graph_of_subgroup(h, fn);
      violated = !is_subgraph(lhs, whole);
      break;
    }
    case ClosureOp::Q: {
      const SubgroupRef n = sub(w.first);
      if (n.order() != w.first_order || !is_normal(n)) return false;
      lhs = graph_of_quotient(g, n, fn);
      violated = !is_subgraph(lhs, whole);
      break;
    }
    case ClosureOp::R0:
    case ClosureOp::N0: {
      const SubgroupRef a = sub(w.first), b = sub(w.second);
      if (a.order() != w.first_order || b.order() != w.second_order || !is_normal(a) || !is_normal(b)) return false;
      const std::size_t meet = intersection(a, b).order();
      if (op == ClosureOp::R0) {
        if (meet != 1) return false;
        lhs = graph_union(graph_of_quotient(g, a, fn), graph_of_quotient(g, b, fn));
      } else {
        if (a.order() * b.order() != g.order() * meet) return false;
        lhs = graph_union(graph_of_subgroup(a, fn), graph_of_subgroup(b, fn));
      }
      violated = lhs != whole;
      break;
    }
    case ClosureOp::EPhi: {
      const SubgroupRef phi = frattini_subgroup(g);
      if (phi.order() != w.first_order) return false;
      lhs = phi.is_trivial() ? whole : graph_of_quotient(g, phi, fn);
      violated = lhs != whole;
      break;
    }
    case ClosureOp::D0: {
      const auto pi = c.find(w.partner);
      if (!pi) return false;
      lhs = compute_graph(direct_product(g, c[*pi].group).group, fn);
      rhs = graph_union(whole, compute_graph(c[*pi].group, fn));
      violated = lhs != rhs;
      break;
    }
  }
  return violated && lhs == w.lhs && rhs == w.rhs;
}

std::string_view to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Soluble: return "soluble";
    case ClassKind::Nilpotent: return "nilpotent";
    case ClassKind::PNilpotent: return "p-nilpotent";
    case ClassKind::SylowTower: return "sylow-tower";
  }
  return "?";
}

ClassPredicate parse_class_predicate(std::string_view text) {
  if (text == "soluble") return {ClassKind::Soluble, 2};
  if (text == "nilpotent") return {ClassKind::Nilpotent, 2};
  if (text == "sylow-tower") return {ClassKind::SylowTower, 2};
  constexpr std::string_view pn = "p-nilpotent:";
  if (text.substr(0, pn.size()) == pn) {
    const std::string num(text.substr(pn.size()));
    char* end = nullptr;
    const unsigned long p = std::strtoul(num.c_str(), &end, 10);
    if (!num.empty() && *end == '\0' && is_prime(p)) return {ClassKind::PNilpotent, static_cast<Prime>(p)};
  }
  throw Error(ErrorKind::InvalidSpec, "unknown class '" + std::string(text) +
                                          "' (expected soluble, nilpotent, p-nilpotent:P or sylow-tower)");
}

bool in_class(const FiniteGroup& g, const ClassPredicate& cls) {
  switch (cls.kind) {
    case ClassKind::Soluble: return is_soluble(g);
    case ClassKind::Nilpotent: return is_nilpotent(g);
    case ClassKind::PNilpotent:
      return g.order() % cls.p != 0 || normal_hall_subgroup(g, set_difference(g.primes(), {cls.p})).has_value();
    case ClassKind::SylowTower: return find_sylow_tower(g).has_value();
  }
  return false;
}

RecognitionReport recognition_probe(const Corpus& c_in, const Corpus& c_out, GraphFn fn, const ClassPredicate& cls) {
  RecognitionReport rep;
  rep.fn = fn;
  rep.cls = cls;
  std::vector<std::size_t> in_idx, out_idx;
  for (std::size_t i = 0; i < c_in.size(); ++i)
    if (in_class(c_in[i].group, cls)) {
      in_idx.push_back(i);
      rep.members.push_back(c_in[i].name);
    }
  for (std::size_t j = 0; j < c_out.size(); ++j)
    if (!in_class(c_out[j].group, cls)) {
      out_idx.push_back(j);
      rep.non_members.push_back(c_out[j].name);
    }
  for (std::size_t i : in_idx)
    for (std::size_t j : out_idx) {
      const PrimeDigraph a = c_in.graph(i, fn);
      if (a == c_out.graph(j, fn)) rep.witnesses.push_back({c_in[i].name, c_out[j].name, a});
    }
  return rep;
}

}  // namespace arithgraph
