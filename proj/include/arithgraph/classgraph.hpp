#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithgraph/digraph.hpp"
#include "arithgraph/graphs.hpp"
#include "arithgraph/group.hpp"

namespace arithgraph {

struct CorpusEntry {
  std::string name;
  std::string spec;  // text the group was built from, when known
  FiniteGroup group;
};

/// Ordered, uniquely named groups with a per-entry graph cache. Copies share
/// the cache; lookups are thread-safe.
class Corpus {
 public:
  Corpus();

  /// Throws Error(InvalidSpec) on a duplicate name.
  void add(std::string name, FiniteGroup group, std::string spec = {});

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const CorpusEntry& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<CorpusEntry>& entries() const noexcept { return entries_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Memoized fn(entry i).
  PrimeDigraph graph(std::size_t i, GraphFn fn) const;

  /// Entries i with keep(entry) true, sharing nothing with this corpus.
  template <class Pred>
  Corpus filtered(Pred&& keep) const {
    Corpus out;
    for (const auto& e : entries_)
      if (keep(e)) out.add(e.name, e.group, e.spec);
    return out;
  }

 private:
  struct Cache;
  std::vector<CorpusEntry> entries_;
  std::shared_ptr<Cache> cache_;
};

/// Union of the members' graphs. Budget errors propagate unless
/// skip_budget_errors is set, in which case skipped names are recorded.
PrimeDigraph corpus_graph(const Corpus& c, GraphFn fn, unsigned jobs = 1, bool skip_budget_errors = false,
                          std::vector<std::string>* skipped = nullptr);

/// fn(G) ⊆ class_graph.
bool x_gamma_member(const FiniteGroup& g, const PrimeDigraph& class_graph, GraphFn fn);

enum class ClosureOp { S, Q, D0, R0, N0, EPhi };

std::string_view to_string(ClosureOp op);
/// Accepts S, Q, D0, R0, N0, EPhi. Throws Error(InvalidSpec).
ClosureOp parse_closure_op(std::string_view text);

struct SamplingPolicy {
  std::size_t exhaustive_threshold = 60;  // full lattice for S at or below this order
  std::size_t random_subgroups = 200;
  unsigned min_generators = 2;
  unsigned max_generators = 3;
  bool sylow_and_normalizers = true;
  std::uint64_t seed = 0x5eedULL;
  std::uint64_t d0_max_order = 2000;
  std::size_t d0_max_pairs = 60;
  std::size_t frattini_threshold = 1000;
  unsigned jobs = 1;
};

/// Everything needed to re-run one failing comparison. For S the
/// subgroup is `first`; for Q it is the kernel; R0 and N0 use first and
/// second; D0 names the partner group in `partner`.
struct ClosureWitness {
  std::string group;
  std::string partner;
  std::vector<Permutation> first;
  std::vector<Permutation> second;
  std::size_t first_order = 0;
  std::size_t second_order = 0;
  PrimeDigraph lhs;  // the graph that must be contained in / equal rhs
  PrimeDigraph rhs;
  std::vector<Edge> offending;
  std::string describe() const;
};

enum class GroupStatus { Holds, Fails, Skipped };
std::string_view to_string(GroupStatus s);

struct GroupOutcome {
  std::string group;
  GroupStatus status = GroupStatus::Holds;
  std::size_t checks = 0;
  std::string note;  // skip reason
};

struct ClosureReport {
  GraphFn fn = GraphFn::Hawkes;
  ClosureOp op = ClosureOp::S;
  bool holds = true;  // no failing comparison anywhere
  std::vector<GroupOutcome> groups;
  std::vector<ClosureWitness> witnesses;
  std::size_t checks = 0;
};

ClosureReport closure_check(const Corpus& c, GraphFn fn, ClosureOp op, const SamplingPolicy& sampling = {});

/// Recomputes both sides from the witness; true when the violation reproduces.
bool revalidate(const Corpus& c, GraphFn fn, ClosureOp op, const ClosureWitness& w);

enum class ClassKind { Soluble, Nilpotent, PNilpotent, SylowTower };

struct ClassPredicate {
  ClassKind kind = ClassKind::Soluble;
  Prime p = 2;  // p-nilpotent only
};

std::string_view to_string(ClassKind k);
/// "soluble", "nilpotent", "p-nilpotent:P" or "sylow-tower". Throws Error(InvalidSpec).
ClassPredicate parse_class_predicate(std::string_view text);
bool in_class(const FiniteGroup& g, const ClassPredicate& cls);

struct RecognitionPair {
  std::string member;      // in the class
  std::string non_member;  // outside the class, same graph
  PrimeDigraph graph;
};

struct RecognitionReport {
  GraphFn fn = GraphFn::Hawkes;
  ClassPredicate cls;
  std::vector<std::string> members;
  std::vector<std::string> non_members;
  std::vector<RecognitionPair> witnesses;  // empty: no witness at this scale
};

/// Pairs (G1 from c_in in the class, G2 from c_out outside it) with equal graphs.
RecognitionReport recognition_probe(const Corpus& c_in, const Corpus& c_out, GraphFn fn, const ClassPredicate& cls);

}  // namespace arithgraph
