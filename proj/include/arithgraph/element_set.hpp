#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace arithgraph {

using Elem = std::uint32_t;

/// Fixed-size bitset over the element indices of a parent group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool test(Elem e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }

  /// Returns true when e was newly inserted.
  bool insert(Elem e) noexcept {
    std::uint64_t& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& other) const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      r.words_[i] = words_[i] & other.words_[i];
      r.count_ += static_cast<std::size_t>(std::popcount(r.words_[i]));
    }
    return r;
  }

  ElementSet& operator&=(const ElementSet& other) { return *this = *this & other; }

  /// Ascending member indices.
  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(count_);
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Elem>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.count_ == b.count_ && a.words_ == b.words_;
  }

  /// Lexicographic order of the ascending member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) {
    if (a.count_ != b.count_) {
      const auto va = a.to_vector(), vb = b.to_vector();
      return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    }
    // Equal sizes: the smallest element of the symmetric difference decides.
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      return (a.words_[i] & (diff & (~diff + 1))) != 0;
    }
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace arithgraph
