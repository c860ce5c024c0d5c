#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arithgraph/element_set.hpp"
#include "arithgraph/numtheory.hpp"
#include "arithgraph/permutation.hpp"

namespace arithgraph {

inline constexpr std::size_t kDefaultElementCap = 200000;

/// Element budget: ARITHGRAPH_ELEMENT_CAP when set to a positive integer,
/// kDefaultElementCap otherwise.
std::size_t element_cap();

namespace detail {
struct GroupData;
}

/// A permutation group with its full element list in canonical
/// (lexicographic image-table) order. Index 0 is always the identity.
/// Immutable and cheap to copy; copies share the same enumeration.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const std::string& name() const noexcept;

  const PrimeSet& primes() const noexcept;  // π(G)

  std::span<const Point> images(Elem e) const noexcept;
  Permutation element(Elem e) const;

  /// Index of the element with the given image row, if it belongs to the group.
  std::optional<Elem> find(std::span<const Point> images) const noexcept;
  /// Throws Error(NotAMember) when g is not an element.
  Elem index_of(const Permutation& g) const;

  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const noexcept;
  /// a^g = g^-1 a g
  Elem conj(Elem a, Elem g) const noexcept;
  Elem pow(Elem a, std::uint64_t k) const noexcept;
  bool commute(Elem a, Elem b) const noexcept;

  /// Order of element e (precomputed).
  std::uint32_t elem_order(Elem e) const noexcept;

  std::span<const Elem> generators() const noexcept;
  std::vector<Permutation> generator_permutations() const;

  /// Conjugacy class of every element, computed once per group.
  const std::vector<std::vector<Elem>>& classes() const;
  std::uint32_t class_index(Elem e) const;

  FiniteGroup renamed(std::string name) const;

  /// Same underlying enumeration (not isomorphism).
  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }
  bool valid() const noexcept { return data_ != nullptr; }

  const detail::GroupData& data() const noexcept { return *data_; }

 private:
  friend FiniteGroup make_group_from_sorted(std::size_t degree, std::vector<Point> images,
                                            std::span<const Elem> gens, std::string name);
  FiniteGroup(std::shared_ptr<const detail::GroupData> d, std::string name)
      : data_(std::move(d)), name_(std::move(name)) {}
  std::shared_ptr<const detail::GroupData> data_;
  std::string name_;
};

/// Subgroup of a parent FiniteGroup: a member bitset plus a generating set
/// of parent element indices.
class SubgroupRef {
 public:
  SubgroupRef() = default;
  SubgroupRef(FiniteGroup parent, ElementSet members, std::vector<Elem> generators)
      : parent_(std::move(parent)), members_(std::move(members)), gens_(std::move(generators)) {}

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::span<const Elem> generators() const noexcept { return gens_; }
  std::size_t order() const noexcept { return members_.count(); }
  bool contains(Elem e) const noexcept { return members_.test(e); }
  std::vector<Elem> elements() const { return members_.to_vector(); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_.order(); }

  /// Generators rendered in cycle notation, e.g. "<(1 2 3), (1 2)>".
  std::string describe() const;

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) noexcept { return a.members_ == b.members_; }

 private:
  FiniteGroup parent_;
  ElementSet members_;
  std::vector<Elem> gens_;
};

FiniteGroup group_from_generators(std::size_t degree, std::span<const Permutation> gens,
                                  std::size_t cap = element_cap(), std::string name = {});

/// Throws Error(NotAMember).
std::uint64_t element_order(const FiniteGroup& g, const Permutation& x);

SubgroupRef trivial_subgroup(const FiniteGroup& g);
SubgroupRef whole_group(const FiniteGroup& g);

/// Smallest subgroup containing seed. Elements are parent indices.
SubgroupRef subgroup_generated(const FiniteGroup& g, std::span<const Elem> seed);
/// Permutation seed; throws Error(NotAMember).
SubgroupRef subgroup_generated(const FiniteGroup& g, std::span<const Permutation> seed);

/// <base, extra> by Dimino's coset enumeration. When limit is nonzero the
/// enumeration stops and returns nullopt as soon as the order would exceed it.
/// When accept is set, any new element it rejects also aborts with nullopt.
std::optional<SubgroupRef> closure(const SubgroupRef& base, std::span<const Elem> extra, std::size_t limit = 0,
                                   const std::function<bool(Elem)>& accept = {});
SubgroupRef join(const SubgroupRef& a, const SubgroupRef& b);
SubgroupRef intersection(const SubgroupRef& a, const SubgroupRef& b);

/// Subgroup with exactly the given members; a small generating set is chosen
/// greedily in ascending index order. Members must form a subgroup.
SubgroupRef subgroup_from_members(const FiniteGroup& g, const ElementSet& members);

/// Re-enumerates a subgroup as a standalone group on the parent's points.
/// The members are already in canonical order, so no sorting is needed.
FiniteGroup as_group(const SubgroupRef& h, std::string name = {});

bool is_normal(const SubgroupRef& h);
SubgroupRef conjugate(const SubgroupRef& h, Elem g);

struct DirectProduct {
  FiniteGroup group;
  SubgroupRef first;   // G1 x 1
  SubgroupRef second;  // 1 x G2
};

DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap = element_cap(),
                             std::string name = {});

/// Partition of element indices into conjugacy classes, ordered by least member.
const std::vector<std::vector<Elem>>& conjugacy_classes(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;  // parent element -> quotient element
  SubgroupRef kernel;
};

/// G/N realized by the action of G on the right cosets of N. Throws
/// Error(NotNormal) or Error(BudgetExceeded). For N = 1 the regular action
/// would cost |G|^2 image entries; the group itself is returned instead,
/// with the identity projection.
Quotient quotient_group(const FiniteGroup& g, const SubgroupRef& n, std::size_t cap = element_cap());

/// Full preimage of a subgroup of the quotient.
SubgroupRef preimage(const Quotient& q, const SubgroupRef& in_quotient);
/// Image of a subgroup of the parent.
SubgroupRef image(const Quotient& q, const SubgroupRef& in_parent);

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::size_t order = 0;
  std::vector<Point> images;  // order * degree, canonical order
  std::vector<Elem> gens;
  std::vector<Elem> inverse;
  std::vector<std::uint32_t> orders;
  PrimeSet primes;
  std::vector<std::uint32_t> slots;  // open addressing, stores index + 1
  std::uint64_t slot_mask = 0;

  mutable std::once_flag classes_once;
  mutable std::vector<std::vector<Elem>> classes;
  mutable std::vector<std::uint32_t> class_of;

  // Memoized normal-subgroup lattice (owned by the structure module).
  struct CachedSubgroup {
    ElementSet members;
    std::vector<Elem> gens;
  };
  mutable std::once_flag normals_once;
  mutable std::vector<CachedSubgroup> normals;

  std::span<const Point> row(Elem e) const noexcept { return {images.data() + std::size_t{e} * degree, degree}; }
  std::optional<Elem> lookup(std::span<const Point> r) const noexcept;
};

std::uint64_t hash_row(std::span<const Point> r) noexcept;

}  // namespace detail

/// Builds a group from an already canonical (sorted, closed) element table.
FiniteGroup make_group_from_sorted(std::size_t degree, std::vector<Point> images, std::span<const Elem> gens,
                                   std::string name);

}  // namespace arithgraph
