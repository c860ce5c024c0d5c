#include "arithgraph/spec_text.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "arithgraph/errors.hpp"

namespace arithgraph {

namespace {

constexpr std::array<std::string_view, 9> kKeywords{"S", "A", "C", "D", "PSL2", "PSL3", "Sz", "Schmidt", "file"};
constexpr std::string_view kAtomExpected = "one of S:, A:, C:, D:, PSL2:, PSL3:, Sz:, Schmidt:, file:";

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    // Drop whitespace outside quotes, remembering where each kept char came from.
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (!quoted && std::isspace(static_cast<unsigned char>(c))) continue;
      s_ += c;
      pos_.push_back(i);
      if (quoted && c == '\\' && i + 1 < text.size()) {
        s_ += text[++i];
        pos_.push_back(i);
        continue;
      }
      if (c == '"') quoted = !quoted;
    }
    pos_.push_back(text.size());
  }

  GroupSpec parse() {
    GroupSpec out = atom();
    while (i_ < s_.size()) {
      if (s_[i_] != 'x') fail("'x' or end of input");
      ++i_;
      GroupSpec rhs = atom();
      GroupSpec prod;
      prod.kind = SpecKind::Product;
      prod.factors = {std::move(out), std::move(rhs)};
      out = std::move(prod);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(std::string_view expected) const {
    std::string found = i_ < s_.size() ? "'" + std::string(1, s_[i_]) + "'" : "end of input";
    throw Error(ErrorKind::ParseError, "column " + std::to_string(pos_[i_] + 1) + " in \"" + std::string(text_) +
                                           "\": expected " + std::string(expected) + ", found " + found);
  }

  // Keyword followed by ':' at position j, or npos.
  std::size_t keyword_at(std::size_t j) const {
    std::size_t k = j;
    while (k < s_.size() && is_alnum(s_[k])) ++k;
    if (k >= s_.size() || s_[k] != ':') return std::string_view::npos;
    const std::string_view word = std::string_view(s_).substr(j, k - j);
    for (std::size_t w = 0; w < kKeywords.size(); ++w)
      if (kKeywords[w] == word) return w;
    return std::string_view::npos;
  }

  std::uint64_t integer() {
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("an integer");
    std::uint64_t v = 0;
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const unsigned d = static_cast<unsigned>(s_[i_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        i_ = start;
        fail("an integer that fits in 64 bits");
      }
      v = v * 10 + d;
      ++i_;
    }
    return v;
  }

  void literal(char c) {
    if (i_ >= s_.size() || s_[i_] != c) fail("'" + std::string(1, c) + "'");
    ++i_;
  }

  void exact(std::uint64_t want) {
    const std::size_t start = i_;
    if (integer() != want) {
      i_ = start;
      fail("'" + std::to_string(want) + "'");
    }
  }

  std::string path() {
    std::string out;
    if (i_ < s_.size() && s_[i_] == '"') {
      ++i_;
      while (true) {
        if (i_ >= s_.size()) fail("closing '\"'");
        const char c = s_[i_++];
        if (c == '"') break;
        if (c == '\\' && i_ < s_.size()) {
          out += s_[i_++];
          continue;
        }
        out += c;
      }
      return out;
    }
    while (i_ < s_.size() && !(s_[i_] == 'x' && keyword_at(i_ + 1) != std::string_view::npos)) out += s_[i_++];
    if (out.empty()) fail("a path");
    return out;
  }

  GroupSpec atom() {
    const std::size_t w = i_ < s_.size() ? keyword_at(i_) : std::string_view::npos;
    if (w == std::string_view::npos) fail(kAtomExpected);
    i_ += kKeywords[w].size() + 1;
    GroupSpec out;
    switch (w) {
      case 0: out.kind = SpecKind::Symmetric; break;
      case 1: out.kind = SpecKind::Alternating; break;
      case 2: out.kind = SpecKind::Cyclic; break;
      case 3: out.kind = SpecKind::Dihedral; break;
      case 4: out.kind = SpecKind::Psl2; break;
      case 5:
        out.kind = SpecKind::Psl3_3;
        exact(3);
        out.params = {3};
        return out;
      case 6:
        out.kind = SpecKind::Sz8;
        exact(8);
        out.params = {8};
        return out;
      case 7:
        out.kind = SpecKind::Schmidt;
        out.params.push_back(integer());
        literal(',');
        out.params.push_back(integer());
        return out;
      default:
        out.kind = SpecKind::File;
        out.path = path();
        return out;
    }
    out.params.push_back(integer());
    return out;
  }

  std::string_view text_;
  std::string s_;
  std::vector<std::size_t> pos_;
  std::size_t i_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace arithgraph
