#pragma once

// Slow reference implementations used only to cross-check the fast paths.

#include <vector>

#include "arithgraph/digraph.hpp"
#include "arithgraph/group.hpp"

namespace arithgraph::oracle {

/// Every subgroup, found by extending each known subgroup by every element.
/// Sorted by (order, member bitset). ThresholdExceeded above kExhaustiveThreshold.
std::vector<SubgroupRef> all_subgroups(const FiniteGroup& g);

/// Minimal non-nilpotent subgroups classified as Schmidt (p,q) when they
/// have exactly two prime divisors and a normal Sylow p-subgroup.
PrimeDigraph schmidt_graph(const FiniteGroup& g);

/// Lattice members that are normal.
std::vector<SubgroupRef> normal_subgroups(const FiniteGroup& g);

/// O_{p',p} as the largest normal N over the largest normal p'-subgroup with
/// p-power index over it, both read off the brute-force normal list.
PrimeDigraph hawkes_graph(const FiniteGroup& g);

/// Edge test N/PC by direct element scans.
PrimeDigraph sylow_graph(const FiniteGroup& g);

/// Conjugacy classes by conjugating with every element.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);

}  // namespace arithgraph::oracle
