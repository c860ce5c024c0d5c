#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithgraph/group.hpp"

namespace arithgraph {

enum class SpecKind { Symmetric, Alternating, Cyclic, Dihedral, Psl2, Psl3_3, Sz8, Schmidt, Product, File };

struct GroupSpec {
  SpecKind kind = SpecKind::Symmetric;
  std::vector<std::uint64_t> params;
  std::string path;                // File
  std::vector<GroupSpec> factors;  // Product, exactly two

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Canonical text of a group spec, e.g. "S:3xC:5" or "Schmidt:2,3".
std::string to_text(const GroupSpec& spec);

/// Throws Error(InvalidSpec) or Error(BudgetExceeded); the group is named by to_text(spec).
FiniteGroup build(const GroupSpec& spec, std::size_t cap = element_cap());

FiniteGroup symmetric_group(unsigned n, std::size_t cap = element_cap());
FiniteGroup alternating_group(unsigned n, std::size_t cap = element_cap());
FiniteGroup cyclic_group(unsigned n, std::size_t cap = element_cap());
/// Order 2n on n points, n >= 3.
FiniteGroup dihedral_group(unsigned n, std::size_t cap = element_cap());
/// PSL(2,q) on the q+1 points of the projective line; q a prime power >= 4.
FiniteGroup psl2(unsigned q, std::size_t cap = element_cap());
/// PSL(3,3) on the 13 points of the projective plane.
FiniteGroup psl3_3(std::size_t cap = element_cap());
/// Sz(8) from the bundled generator file; order and simplicity are checked.
FiniteGroup sz8(std::size_t cap = element_cap());
/// T ⋊ <c> with T = F_p^d, d the order of p mod q, and c the companion
/// matrix of an irreducible factor of the q-th cyclotomic polynomial.
FiniteGroup schmidt_group(unsigned p, unsigned q, std::size_t cap = element_cap());

/// Closed-form order for catalog kinds; nullopt for files and overflow.
std::optional<std::uint64_t> expected_order(const GroupSpec& spec);

struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<std::uint64_t> expected_order;
};

/// Line format: "degree: n", then one permutation per line in 1-based cycle
/// notation ("()" is the identity); '#' starts a comment, and a comment of
/// the form "# expected-order: N" records the order to verify.
/// Throws Error(ParseError) naming the line.
GroupFile parse_group_file(std::string_view text, std::string_view source = "<input>");
/// Throws Error(Io) when the file cannot be read.
GroupFile read_group_file(const std::filesystem::path& path);
/// Builds the group and checks the recorded order. Relative paths are tried
/// as given, then under data_dir().
FiniteGroup load_group_file(const std::filesystem::path& path, std::size_t cap = element_cap(),
                            std::string name = {});

/// ARITHGRAPH_DATA when set, otherwise the bundled data directory.
std::filesystem::path data_dir();

}  // namespace arithgraph
