#include "arithgraph/permutation.hpp"

#include <cctype>
#include <numeric>

#include "arithgraph/errors.hpp"

namespace arithgraph {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) throw Error(ErrorKind::InvalidSpec, "degree exceeds " + std::to_string(kMaxDegree));
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.size() > kMaxDegree) throw Error(ErrorKind::InvalidSpec, "degree exceeds " + std::to_string(kMaxDegree));
  std::vector<bool> hit(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || hit[x]) throw Error(ErrorKind::InvalidSpec, "image table is not a bijection");
    hit[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::ParseError, "cycle notation at column " + std::to_string(i + 1) + ": " + what + " in \"" +
                                           std::string(text) + "\"");
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail("expected '('");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected point or ')'");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > kMaxDegree) fail("point out of range");
        ++i;
      }
      if (v < 1 || v > degree) fail("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[v - 1]) fail("point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images_[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[x] = rhs.images_[images_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const { return cycle_order(images_); }

std::string Permutation::to_cycles() const { return cycles_of(images_); }

std::uint64_t cycle_order(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string cycles_of(std::span<const Point> images) {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (seen[x] || images[x] == x) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images[y]) {
      seen[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace arithgraph
