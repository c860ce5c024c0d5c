#include "arithgraph/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "arithgraph/errors.hpp"
#include "arithgraph/numtheory.hpp"
#include "arithgraph/structure.hpp"

#ifndef ARITHGRAPH_DATA_DIR
#define ARITHGRAPH_DATA_DIR "data"
#endif

namespace arithgraph {

namespace {

Permutation from_map(std::size_t n, auto&& f) {
  std::vector<Point> img(n);
  for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(f(x));
  return Permutation::from_images(std::move(img));
}

void check_budget(const GroupSpec& spec, std::size_t cap) {
  if (auto o = expected_order(spec); o && *o > cap)
    throw Error(ErrorKind::BudgetExceeded,
                to_text(spec) + " has order " + std::to_string(*o) + " > element cap " + std::to_string(cap));
}

void check_order(const FiniteGroup& g, std::uint64_t expected) {
  if (g.order() != expected)
    throw Error(ErrorKind::InvalidSpec, g.name() + " enumerated to order " + std::to_string(g.order()) +
                                            ", expected " + std::to_string(expected));
}

// GF(r^k) with elements encoded as base-r digit strings of polynomials in w.
struct Field {
  unsigned r = 0, k = 0, q = 0;
  std::vector<std::uint32_t> mul_table;
  std::uint32_t primitive = 0;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i, a /= r, b /= r, scale *= r) out += ((a % r + b % r) % r) * scale;
    return out;
  }
  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i, a /= r, scale *= r) out += ((r - a % r) % r) * scale;
    return out;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_table[std::size_t{a} * q + b]; }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
};

std::vector<unsigned> digits(std::uint32_t a, unsigned r, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i, a /= r) d[i] = a % r;
  return d;
}

// Product of a and b modulo the monic polynomial x^k + sum f[i] x^i.
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, const std::vector<unsigned>& f, unsigned r, unsigned k) {
  const auto da = digits(a, r, k), db = digits(b, r, k);
  std::vector<unsigned> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % r;
  for (unsigned d = 2 * k - 1; d >= k; --d) {
    const unsigned c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (r - c) * f[i]) % r;
  }
  std::uint32_t out = 0;
  for (unsigned i = k; i-- > 0;) out = out * r + prod[i];
  return out;
}

Field make_field(unsigned q) {
  const auto [r64, k] = prime_power_decomposition(q);
  Field F;
  F.r = static_cast<unsigned>(r64);
  F.k = k;
  F.q = q;
  // The first monic polynomial whose quotient ring has an element of order
  // q-1 is irreducible, and that element is primitive.
  for (std::uint32_t code = 0; code < q; ++code) {
    const auto f = digits(code, F.r, k);
    F.mul_table.assign(std::size_t{q} * q, 0);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) F.mul_table[std::size_t{a} * q + b] = poly_mulmod(a, b, f, F.r, k);
    for (std::uint32_t w = 2 % q; w < q; ++w) {
      std::uint32_t x = w, n = 1;
      while (x != 1 && n < q) {
        x = F.mul(x, w);
        ++n;
      }
      if (x == 1 && n == q - 1) {
        F.primitive = w;
        return F;
      }
    }
  }
  throw Error(ErrorKind::InvalidSpec, "no field of order " + std::to_string(q));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_uint(std::string_view text, std::string_view what, std::string_view where) {
  const std::string t = trim(text);
  char* end = nullptr;
  const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (t.empty() || *end != '\0' || t.front() == '-')
    throw Error(ErrorKind::ParseError, std::string(where) + ": expected " + std::string(what) + ", got '" + t + "'");
  return v;
}

}  // namespace

std::string to_text(const GroupSpec& spec) {
  auto p = [&](std::size_t i) { return std::to_string(spec.params.at(i)); };
  switch (spec.kind) {
    case SpecKind::Symmetric: return "S:" + p(0);
    case SpecKind::Alternating: return "A:" + p(0);
    case SpecKind::Cyclic: return "C:" + p(0);
    case SpecKind::Dihedral: return "D:" + p(0);
    case SpecKind::Psl2: return "PSL2:" + p(0);
    case SpecKind::Psl3_3: return "PSL3:3";
    case SpecKind::Sz8: return "Sz:8";
    case SpecKind::Schmidt: return "Schmidt:" + p(0) + "," + p(1);
    case SpecKind::Product: return to_text(spec.factors.at(0)) + "x" + to_text(spec.factors.at(1));
    case SpecKind::File: {
      if (!spec.path.empty() && spec.path.find_first_of(" \t\"\\x") == std::string::npos) return "file:" + spec.path;
      std::string out = "file:\"";
      for (char ch : spec.path) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
      }
      return out + '"';
    }
  }
  return "?";
}

std::optional<std::uint64_t> expected_order(const GroupSpec& spec) {
  auto factorial = [](std::uint64_t n) -> std::optional<std::uint64_t> {
    if (n > 20) return std::nullopt;
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (spec.kind) {
    case SpecKind::Symmetric: return factorial(spec.params.at(0));
    case SpecKind::Alternating: {
      auto f = factorial(spec.params.at(0));
      if (!f) return f;
      return spec.params[0] >= 2 ? *f / 2 : 1;
    }
    case SpecKind::Cyclic: return spec.params.at(0);
    case SpecKind::Dihedral: return 2 * spec.params.at(0);
    case SpecKind::Psl2: {
      const std::uint64_t q = spec.params.at(0);
      if (q > 100000) return std::nullopt;
      return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
    }
    case SpecKind::Psl3_3: return 5616;
    case SpecKind::Sz8: return 29120;
    case SpecKind::Schmidt: {
      const std::uint64_t p = spec.params.at(0), q = spec.params.at(1);
      if (!is_prime(p) || !is_prime(q) || p == q) return std::nullopt;
      const std::uint64_t d = multiplicative_order(p % q, q);
      if (d * std::log2(static_cast<double>(p)) > 40) return std::nullopt;
      return ipow(p, static_cast<unsigned>(d)) * q;
    }
    case SpecKind::Product: {
      auto a = expected_order(spec.factors.at(0)), b = expected_order(spec.factors.at(1));
      if (!a || !b || (*b != 0 && *a > UINT64_MAX / *b)) return std::nullopt;
      return *a * *b;
    }
    case SpecKind::File: return std::nullopt;
  }
  return std::nullopt;
}

FiniteGroup symmetric_group(unsigned n, std::size_t cap) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorKind::InvalidSpec, "S:n needs 1 <= n <= 65535");
  check_budget({SpecKind::Symmetric, {n}, {}, {}}, cap);
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(from_map(n, [](std::size_t x) { return x < 2 ? 1 - x : x; }));
    gens.push_back(from_map(n, [n](std::size_t x) { return (x + 1) % n; }));
  }
  auto g = group_from_generators(n, gens, cap, "S:" + std::to_string(n));
  if (const auto o = expected_order({SpecKind::Symmetric, {n}, {}, {}})) check_order(g, *o);
  return g;
}

FiniteGroup alternating_group(unsigned n, std::size_t cap) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorKind::InvalidSpec, "A:n needs 1 <= n <= 65535");
  check_budget({SpecKind::Alternating, {n}, {}, {}}, cap);
  std::vector<Permutation> gens;
  for (unsigned i = 0; i + 2 < n; ++i)
    gens.push_back(from_map(n, [i](std::size_t x) -> std::size_t {
      if (x == i) return i + 1;
      if (x == i + 1) return i + 2;
      if (x == i + 2) return i;
      return x;
    }));
  auto g = group_from_generators(n, gens, cap, "A:" + std::to_string(n));
  if (const auto o = expected_order({SpecKind::Alternating, {n}, {}, {}})) check_order(g, *o);
  return g;
}

FiniteGroup cyclic_group(unsigned n, std::size_t cap) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorKind::InvalidSpec, "C:n needs 1 <= n <= 65535");
  check_budget({SpecKind::Cyclic, {n}, {}, {}}, cap);
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(from_map(n, [n](std::size_t x) { return (x + 1) % n; }));
  return group_from_generators(n, gens, cap, "C:" + std::to_string(n));
}

FiniteGroup dihedral_group(unsigned n, std::size_t cap) {
  if (n < 3 || n > kMaxDegree) throw Error(ErrorKind::InvalidSpec, "D:n needs 3 <= n <= 65535 (order 2n)");
  check_budget({SpecKind::Dihedral, {n}, {}, {}}, cap);
  std::vector<Permutation> gens{from_map(n, [n](std::size_t x) { return (x + 1) % n; }),
                                from_map(n, [n](std::size_t x) { return (n - x) % n; })};
  auto g = group_from_generators(n, gens, cap, "D:" + std::to_string(n));
  check_order(g, 2u * n);
  return g;
}

FiniteGroup psl2(unsigned q, std::size_t cap) {
  if (q < 4 || q >= kMaxDegree || prime_power_decomposition(q).first == 0)
    throw Error(ErrorKind::InvalidSpec, "PSL2:q needs a prime power q >= 4, got " + std::to_string(q));
  const GroupSpec spec{SpecKind::Psl2, {q}, {}, {}};
  check_budget(spec, cap);
  const Field F = make_field(q);
  const std::size_t inf = q;
  std::vector<Permutation> gens;
  std::uint32_t basis = 1;
  for (unsigned i = 0; i < F.k; ++i, basis = F.mul(basis, F.primitive)) {
    gens.push_back(from_map(q + 1, [&](std::size_t z) -> std::size_t {
      return z == inf ? inf : F.add(static_cast<std::uint32_t>(z), basis);
    }));
  }
  const std::uint32_t s = F.mul(F.primitive, F.primitive);
  gens.push_back(from_map(q + 1, [&](std::size_t z) -> std::size_t {
    return z == inf ? inf : F.mul(static_cast<std::uint32_t>(z), s);
  }));
  gens.push_back(from_map(q + 1, [&](std::size_t z) -> std::size_t {
    if (z == inf) return 0;
    if (z == 0) return inf;
    return F.neg(F.inv(static_cast<std::uint32_t>(z)));
  }));
  auto g = group_from_generators(q + 1, gens, cap, to_text(spec));
  check_order(g, *expected_order(spec));
  return g;
}

FiniteGroup psl3_3(std::size_t cap) {
  const GroupSpec spec{SpecKind::Psl3_3, {3}, {}, {}};
  check_budget(spec, cap);
  using Vec = std::array<unsigned, 3>;
  std::vector<Vec> points;
  for (unsigned a = 0; a < 27; ++a) {
    const Vec v{a % 3, a / 3 % 3, a / 9};
    const auto lead = std::find_if(v.begin(), v.end(), [](unsigned c) { return c != 0; });
    if (lead != v.end() && *lead == 1) points.push_back(v);
  }
  auto normalize = [](Vec v) {
    const auto lead = *std::find_if(v.begin(), v.end(), [](unsigned c) { return c != 0; });
    for (auto& c : v) c = c * lead % 3;  // lead is its own inverse mod 3
    return v;
  };
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      gens.push_back(from_map(points.size(), [&](std::size_t x) {
        Vec v = points[x];
        v[j] = (v[j] + v[i]) % 3;
        v = normalize(v);
        return static_cast<std::size_t>(std::find(points.begin(), points.end(), v) - points.begin());
      }));
    }
  auto g = group_from_generators(points.size(), gens, cap, to_text(spec));
  check_order(g, 5616);
  return g;
}

FiniteGroup sz8(std::size_t cap) {
  const GroupSpec spec{SpecKind::Sz8, {8}, {}, {}};
  check_budget(spec, cap);
  auto g = load_group_file("sz8.grp", cap, to_text(spec));
  check_order(g, 29120);
  if (normal_subgroups(g).size() != 2) throw Error(ErrorKind::InvalidSpec, "bundled Sz(8) generators are not simple");
  return g;
}

FiniteGroup schmidt_group(unsigned p, unsigned q, std::size_t cap) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw Error(ErrorKind::InvalidSpec, "Schmidt:p,q needs distinct primes, got " + std::to_string(p) + "," +
                                            std::to_string(q));
  const GroupSpec spec{SpecKind::Schmidt, {p, q}, {}, {}};
  auto expected = expected_order(spec);
  if (!expected) throw Error(ErrorKind::BudgetExceeded, to_text(spec) + " is too large");
  check_budget(spec, cap);
  const unsigned d = static_cast<unsigned>(multiplicative_order(p % q, q));
  const std::uint64_t npts = ipow(p, d);
  if (npts > kMaxDegree) throw Error(ErrorKind::BudgetExceeded, to_text(spec) + " needs more than 65535 points");

  // Monic degree-d factor f of 1 + x + ... + x^(q-1) over F_p; coefficients low to high, f[d] = 1.
  auto divides_cyclotomic = [&](const std::vector<unsigned>& f) {
    std::vector<unsigned> rem(q, 1);
    for (unsigned top = q - 1; top >= d; --top) {
      const unsigned c = rem[top];
      if (c != 0)
        for (unsigned i = 0; i <= d; ++i) rem[top - d + i] = (rem[top - d + i] + (p - c) * f[i]) % p;
      if (top == d) break;
    }
    return std::all_of(rem.begin(), rem.begin() + d, [](unsigned c) { return c == 0; });
  };
  std::vector<unsigned> f;
  for (std::uint64_t code = 0; code < npts && f.empty(); ++code) {
    std::vector<unsigned> cand(d + 1, 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < d; ++i, c /= p) cand[i] = static_cast<unsigned>(c % p);
    if (divides_cyclotomic(cand)) f = std::move(cand);
  }
  if (f.empty()) throw Error(ErrorKind::InvalidSpec, "no cyclotomic factor found for " + to_text(spec));

  auto digit = [&](std::uint64_t v, unsigned i) { return static_cast<unsigned>(v / ipow(p, i) % p); };
  std::vector<Permutation> gens;
  for (unsigned j = 0; j < d; ++j) {
    const std::uint64_t step = ipow(p, j);
    gens.push_back(from_map(npts, [&](std::size_t v) {
      return digit(v, j) == p - 1 ? v - (p - 1) * step : v + step;
    }));
  }
  // Multiplication by x on F_p[x]/(f).
  gens.push_back(from_map(npts, [&](std::size_t v) {
    const unsigned top = digit(v, d - 1);
    std::uint64_t out = 0;
    for (unsigned i = d; i-- > 0;) {
      const unsigned shifted = i == 0 ? 0 : digit(v, i - 1);
      out = out * p + (shifted + (p - top) % p * f[i]) % p;
    }
    return out;
  }));
  auto g = group_from_generators(npts, gens, cap, to_text(spec));
  check_order(g, *expected);
  return g;
}

FiniteGroup build(const GroupSpec& spec, std::size_t cap) {
  auto param = [&](std::size_t i) -> unsigned {
    if (spec.params.size() <= i || spec.params[i] > kMaxDegree)
      throw Error(ErrorKind::InvalidSpec, "parameter out of range in " + to_text(spec));
    return static_cast<unsigned>(spec.params[i]);
  };
  switch (spec.kind) {
    case SpecKind::Symmetric: return symmetric_group(param(0), cap);
    case SpecKind::Alternating: return alternating_group(param(0), cap);
    case SpecKind::Cyclic: return cyclic_group(param(0), cap);
    case SpecKind::Dihedral: return dihedral_group(param(0), cap);
    case SpecKind::Psl2: return psl2(param(0), cap);
    case SpecKind::Psl3_3:
      if (!spec.params.empty() && spec.params[0] != 3) throw Error(ErrorKind::InvalidSpec, "only PSL3:3 is bundled");
      return psl3_3(cap);
    case SpecKind::Sz8:
      if (!spec.params.empty() && spec.params[0] != 8) throw Error(ErrorKind::InvalidSpec, "only Sz:8 is bundled");
      return sz8(cap);
    case SpecKind::Schmidt: return schmidt_group(param(0), param(1), cap);
    case SpecKind::Product: {
      if (spec.factors.size() != 2) throw Error(ErrorKind::InvalidSpec, "product needs two factors");
      check_budget(spec, cap);
      const FiniteGroup a = build(spec.factors[0], cap), b = build(spec.factors[1], cap);
      return direct_product(a, b, cap, to_text(spec)).group;
    }
    case SpecKind::File: return load_group_file(spec.path, cap, to_text(spec));
  }
  throw Error(ErrorKind::InvalidSpec, "unknown group kind");
}

GroupFile parse_group_file(std::string_view text, std::string_view source) {
  GroupFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = std::string(source) + ":" + std::to_string(lineno);
    std::string body = line;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      const std::string comment = trim(std::string_view(line).substr(hash + 1));
      constexpr std::string_view key = "expected-order:";
      if (comment.rfind(key, 0) == 0) out.expected_order = parse_uint(comment.substr(key.size()), "an order", where);
      body = line.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    if (body.rfind("degree:", 0) == 0) {
      if (have_degree) throw Error(ErrorKind::ParseError, where + ": duplicate degree line");
      out.degree = parse_uint(std::string_view(body).substr(7), "a point count", where);
      if (out.degree < 1 || out.degree > kMaxDegree)
        throw Error(ErrorKind::ParseError, where + ": degree must lie in 1..65535");
      have_degree = true;
      continue;
    }
    if (!have_degree) throw Error(ErrorKind::ParseError, where + ": expected 'degree: n' before permutations");
    try {
      out.generators.push_back(Permutation::from_cycles(out.degree, body));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, where + ": " + e.what());
    }
  }
  if (!have_degree) throw Error(ErrorKind::ParseError, std::string(source) + ": missing 'degree: n' line");
  return out;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open group file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str(), path.string());
}

FiniteGroup load_group_file(const std::filesystem::path& path, std::size_t cap, std::string name) {
  std::filesystem::path resolved = path;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(resolved, ec) && path.is_relative()) {
    const auto alt = data_dir() / path;
    if (std::filesystem::is_regular_file(alt, ec)) resolved = alt;
  }
  const GroupFile f = read_group_file(resolved);
  if (f.expected_order && *f.expected_order > cap)
    throw Error(ErrorKind::BudgetExceeded, path.string() + " declares order " + std::to_string(*f.expected_order) +
                                               " > element cap " + std::to_string(cap));
  if (name.empty()) name = "file:" + path.string();
  FiniteGroup g = group_from_generators(f.degree, f.generators, cap, std::move(name));
  if (f.expected_order && g.order() != *f.expected_order)
    throw Error(ErrorKind::InvalidSpec, path.string() + " generates order " + std::to_string(g.order()) +
                                            ", file declares " + std::to_string(*f.expected_order));
  return g;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("ARITHGRAPH_DATA"); env && *env) return env;
  return ARITHGRAPH_DATA_DIR;
}

}  // namespace arithgraph
