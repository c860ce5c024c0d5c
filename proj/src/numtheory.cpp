#include "arithgraph/numtheory.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace arithgraph {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeSet prime_divisors(std::uint64_t n) {
  PrimeSet out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(static_cast<Prime>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<Prime>(n));
  return out;
}

std::uint64_t p_part(std::uint64_t n, Prime p) {
  std::uint64_t r = 1;
  if (n == 0 || p < 2) return r;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::uint64_t pi_part(std::uint64_t n, const PrimeSet& primes) {
  std::uint64_t r = 1;
  for (Prime p : primes) r *= p_part(n, p);
  return r;
}

bool is_power_of(std::uint64_t n, Prime p) {
  if (n < 2 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_pi_number(std::uint64_t n, const PrimeSet& primes) {
  return pi_part(n, primes) == n;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2 || std::gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: need gcd(a,m)=1, m>=2");
  a %= m;
  std::uint64_t x = a, k = 1;
  while (x != 1) {
    x = (x * a) % m;
    ++k;
  }
  return k;
}

std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t n) {
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return {0, 0};
  unsigned k = 0;
  while (n > 1) {
    n /= ps[0];
    ++k;
  }
  return {ps[0], k};
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

PrimeSet set_union(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

PrimeSet set_intersection(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

PrimeSet set_difference(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace arithgraph
