#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithgraph/digraph.hpp"
#include "arithgraph/group.hpp"

namespace arithgraph {

enum class GraphFn { Gk, Hawkes, Sylow, Schmidt };

std::string_view to_string(GraphFn fn);
/// Accepts gk, hawkes, sylow, schmidt. Throws Error(InvalidSpec).
GraphFn parse_graph_fn(std::string_view text);

PrimeDigraph gk_graph(const FiniteGroup& g);
/// Edge (p,q) iff q divides |G : O_{p',p}(G)|.
PrimeDigraph hawkes_graph(const FiniteGroup& g);
/// Edge (p,q) iff q divides |N_G(P) : P C_G(P)| for a Sylow p-subgroup P.
PrimeDigraph sylow_graph(const FiniteGroup& g);

inline constexpr std::uint64_t kSchmidtWorkCap = 200'000'000;

/// Witness for a Schmidt edge: P = <a^<x>> is a p-group not centralized by
/// the q-element x, so P<x> contains a Schmidt (p,q)-subgroup.
struct SchmidtWitness {
  Prime p = 0, q = 0;
  Elem a = 0, x = 0;
};

/// Edge (p,q) iff G has a Schmidt (p,q)-subgroup, by the pair scan.
/// Throws Error(BudgetExceeded) when the scan exceeds work_cap element operations.
PrimeDigraph schmidt_graph(const FiniteGroup& g, std::uint64_t work_cap = kSchmidtWorkCap,
                           std::vector<SchmidtWitness>* witnesses = nullptr);

PrimeDigraph compute_graph(const FiniteGroup& g, GraphFn fn);

/// Section top/bottom; for subgroup selectors bottom is trivial.
struct Section {
  SubgroupRef top;
  SubgroupRef bottom;
};

/// Order of the automorphism group induced on top/bottom by
/// N_G(top) ∩ N_G(bottom), i.e. |N : C_N(top/bottom)|.
std::uint64_t induced_automorphism_order(const FiniteGroup& g, const Section& s);

enum class SelectorKind { ChiefFactorsWithP, SylowP, AllPSubgroups, Custom };

using SectionEnumerator = std::function<std::vector<Section>(const FiniteGroup&, Prime)>;

inline constexpr std::size_t kMaxPSubgroups = 20000;

struct SectionSelector {
  SelectorKind kind = SelectorKind::SylowP;
  SectionEnumerator custom;
  std::size_t subgroup_cap = kMaxPSubgroups;  // all-p-subgroups budget
};

std::string_view to_string(SelectorKind kind);

/// Sections chosen by the selector at prime p. Subgroup selectors may return
/// one representative per conjugacy class, since conjugate sections induce
/// automorphism groups of equal order.
std::vector<Section> select_sections(const FiniteGroup& g, const SectionSelector& sel, Prime p);

/// Edge (p,q) iff q divides the induced automorphism order of some selected
/// section at p. Throws Error(SelectorUndefined) for a custom selector with
/// no enumerator.
PrimeDigraph theta_local_graph(const FiniteGroup& g, const SectionSelector& sel, bool exclude_loops);

/// Every covering pair K < H of the normal-subgroup lattice.
std::vector<Section> chief_factors(const FiniteGroup& g);

/// One representative per conjugacy class of nontrivial p-subgroups.
/// Throws Error(BudgetExceeded) past cap subgroups (counting conjugates).
std::vector<SubgroupRef> p_subgroup_classes(const FiniteGroup& g, Prime p, std::size_t cap = kMaxPSubgroups);

/// Hawkes graph through chief factors: edge (p,q) iff q divides
/// |G : C_G(H/K)| for a p-chief factor H/K.
PrimeDigraph hawkes_graph_chief(const FiniteGroup& g);

}  // namespace arithgraph
