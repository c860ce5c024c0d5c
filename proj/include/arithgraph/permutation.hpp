#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arithgraph {

/// A point of the permuted set, stored 0-based. Cycle notation is 1-based.
using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

/// Bijection on {0..degree-1} in image-table form. Products compose left to
/// right: (a * b)[x] = b[a[x]], matching the exponential notation x^(ab).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity

  /// Throws Error(InvalidSpec) unless images is a bijection on {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  /// Parses cycle notation such as "(1 2 3)(4 5)" or "()". Points may be
  /// separated by spaces or commas. Throws Error(ParseError) on bad input.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// lcm of the cycle lengths
  std::uint64_t order() const;

  /// Cycle notation with 1-based points, fixed points omitted, "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Order of the permutation given by an image row (lcm of cycle lengths).
std::uint64_t cycle_order(std::span<const Point> images);

std::string cycles_of(std::span<const Point> images);

}  // namespace arithgraph
