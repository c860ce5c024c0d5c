#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arithgraph/group.hpp"
#include "arithgraph/numtheory.hpp"

namespace arithgraph {

inline constexpr std::size_t kFrattiniThreshold = 1000;
inline constexpr std::size_t kExhaustiveThreshold = 60;
inline constexpr unsigned kHallRetries = 64;

/// Sylow p-subgroup by normalizer climb; the lexicographically least of its
/// conjugates is returned. Throws Error(PrimeNotDividing).
SubgroupRef sylow_subgroup(const FiniteGroup& g, Prime p);

SubgroupRef normalizer(const FiniteGroup& g, const SubgroupRef& h);
/// Members of N_G(h) without building generators.
ElementSet normalizer_members(const FiniteGroup& g, const SubgroupRef& h);
SubgroupRef centralizer(const FiniteGroup& g, const SubgroupRef& h);
SubgroupRef center(const FiniteGroup& g);

/// Every conjugate of h, sorted by member bitset (lexicographic).
std::vector<SubgroupRef> conjugates(const SubgroupRef& h);
SubgroupRef least_conjugate(const SubgroupRef& h);

/// Intersection of all conjugates of h.
SubgroupRef core(const SubgroupRef& h);

struct CoreTriple {
  Prime p = 0;
  SubgroupRef o_p;
  SubgroupRef o_p_prime;
  SubgroupRef o_p_prime_p;
};

/// Throws Error(PrimeNotDividing).
CoreTriple cores(const FiniteGroup& g, Prime p);

/// All normal subgroups sorted by (order, member bitset); memoized per group.
/// Throws Error(BudgetExceeded) past kMaxNormalSubgroups.
inline constexpr std::size_t kMaxNormalSubgroups = 4096;
std::vector<SubgroupRef> normal_subgroups(const FiniteGroup& g);

/// Smallest normal subgroup of `within` containing seed (elements of within).
SubgroupRef normal_closure(const SubgroupRef& within, std::span<const Elem> seed);
/// [H, H] as a subgroup of H's parent.
SubgroupRef commutator_subgroup(const SubgroupRef& h);

struct SubgroupLattice {
  std::vector<SubgroupRef> subgroups;  // sorted by (order, member bitset)
  std::vector<std::size_t> class_of;   // conjugacy class id per subgroup
  std::vector<bool> maximal;
};

/// Full subgroup lattice by cyclic extension over prime-power cyclic
/// subgroups. Throws Error(ThresholdExceeded) when |G| > threshold.
SubgroupLattice subgroup_lattice(const FiniteGroup& g, std::size_t threshold = kFrattiniThreshold);

/// Throws Error(ThresholdExceeded) when |G| > threshold.
SubgroupRef frattini_subgroup(const FiniteGroup& g, std::size_t threshold = kFrattiniThreshold);

enum class SeriesKind { Derived, SylowTower };

struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<SubgroupRef> terms;
  bool verdict = false;
  std::vector<Prime> ordering;  // sylow-tower only
};

SeriesReport derived_series(const FiniteGroup& g);
bool is_soluble(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
bool is_nilpotent(const SubgroupRef& h);

/// True when the order of e is a power of p (the identity counts).
bool is_p_element(const FiniteGroup& g, Elem e, Prime p);
bool is_pi_element(const FiniteGroup& g, Elem e, const PrimeSet& pi);

/// A Hall pi-subgroup (least conjugate among those found). Soluble groups use
/// greedy joins of Sylow conjugates; others fall back to the lattice when
/// |G| <= kFrattiniThreshold. Throws Error(NotSolubleAndTooLarge) or
/// Error(NotFound).
SubgroupRef hall_subgroup(const FiniteGroup& g, const PrimeSet& pi);

/// The normal Hall pi-subgroup if one exists: the subgroup generated by all
/// pi-elements, provided its order is the pi-part of |G|.
std::optional<SubgroupRef> normal_hall_subgroup(const FiniteGroup& g, const PrimeSet& pi);

/// Tower for a fixed ordering: term i is the normal Hall subgroup for the
/// first i primes. nullopt when some term is missing.
std::optional<SeriesReport> sylow_tower_for(const FiniteGroup& g, const std::vector<Prime>& ordering);
/// Searches all orderings of pi(G); the lexicographically least successful
/// ordering is reported.
std::optional<SeriesReport> find_sylow_tower(const FiniteGroup& g);

}  // namespace arithgraph
