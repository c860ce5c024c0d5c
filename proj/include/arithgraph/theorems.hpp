#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithgraph/digraph.hpp"
#include "arithgraph/graphs.hpp"
#include "arithgraph/group.hpp"

namespace arithgraph {

enum class TheoremId { SylowTower, Solubility, HallNormal, DirectDecomposition, CoprimeTriple, MinimalSimple };

std::string_view to_string(TheoremId t);

struct TheoremWitness {
  PrimeDigraph graph;                       // the graph the premise was read from
  std::optional<PrimeDigraph> expected;     // reference graph, when the conclusion compares graphs
  std::vector<Prime> ordering;              // tower ordering
  std::optional<Cycle> cycle;               // a cycle that blocks a premise
  std::vector<PrimeSet> blocks;             // prime sets of Hall subgroups / components
  std::vector<std::vector<Permutation>> subgroups;  // generators, aligned with orders
  std::vector<std::size_t> orders;
  std::vector<bool> criteria;               // solubility (a), (b), (c)
  std::string note;
};

struct TheoremVerdict {
  TheoremId theorem = TheoremId::SylowTower;
  std::string group;
  bool premise_holds = false;
  bool conclusion_holds = false;
  TheoremWitness witness;

  /// A premise that holds with a conclusion that does not.
  bool refutes() const noexcept { return premise_holds && !conclusion_holds; }
};

/// Acyclic Schmidt graph (loops count as cycles) => Sylow tower, built by
/// peeling a prime with no incoming edge and passing to the quotient by its
/// normal Sylow subgroup. Without the premise a tower is searched for
/// exhaustively and reported in the witness only.
TheoremVerdict sylow_tower_check(const FiniteGroup& g);

/// True when q divides 2^p - 1 for some prime p <= 31.
bool divides_small_mersenne(Prime q);

/// Criteria on the Schmidt graph: (a) acyclic; (b) no cycle uses an edge
/// (2,q) with q dividing a Mersenne number 2^p - 1, p prime <= 31; (c) every
/// cycle has length >= 4. Premise: any of them; conclusion: soluble.
TheoremVerdict solubility_criteria(const FiniteGroup& g);

/// No edge from pi' into pi in reference (default: the Hawkes graph of g)
/// => a normal Hall pi-subgroup exists. Throws Error(InvalidSpec) when the
/// reference does not contain the Hawkes graph.
TheoremVerdict hall_normal_check(const FiniteGroup& g, const PrimeSet& pi,
                                 const std::optional<PrimeDigraph>& reference = std::nullopt);

/// At least two weak components of fn(G) => for every grouping of the
/// components into pi1 | pi2, G = H1 x H2 with Hi the normal Hall pi_i-subgroups.
/// fn must be hawkes, schmidt or sylow; sylow additionally needs G soluble.
TheoremVerdict direct_decomposition_check(const FiniteGroup& g, GraphFn fn);

/// Soluble G with subgroups of pairwise coprime index => Γ_H(G) is the
/// union of the subgroups' Hawkes graphs.
TheoremVerdict coprime_triple_check(const FiniteGroup& g, const SubgroupRef& a, const SubgroupRef& b,
                                    const SubgroupRef& c);

/// Hall subgroups for the complements of each block, for use with
/// coprime_triple_check. Blocks must partition pi(G) into three parts.
std::vector<SubgroupRef> complement_hall_triple(const FiniteGroup& g, const std::vector<PrimeSet>& blocks);

/// Closed-form Schmidt edge sets of the minimal simple families.
PrimeDigraph expected_schmidt_psl2_2p(unsigned p);
PrimeDigraph expected_schmidt_psl2_3p(unsigned p);
PrimeDigraph expected_schmidt_sz(unsigned p);
PrimeDigraph expected_schmidt_psl3_3();

/// PSL(2,4), PSL(2,8), PSL(3,3), Sz(8), and PSL(2,27) when requested.
std::vector<TheoremVerdict> minimal_simple_graph_check(bool include_psl2_27 = false);

}  // namespace arithgraph
