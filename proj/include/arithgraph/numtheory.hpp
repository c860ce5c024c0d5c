#pragma once

#include <cstdint>
#include <vector>

namespace arithgraph {

using Prime = std::uint32_t;
/// Sorted, duplicate-free list of primes.
using PrimeSet = std::vector<Prime>;

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in ascending order; empty for n <= 1.
PrimeSet prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, Prime p);

/// Product of the p-parts of n over p in primes.
std::uint64_t pi_part(std::uint64_t n, const PrimeSet& primes);

/// True when n = p^k for some k >= 1.
bool is_power_of(std::uint64_t n, Prime p);

/// True when every prime divisor of n lies in primes (n = 1 qualifies).
bool is_pi_number(std::uint64_t n, const PrimeSet& primes);

/// Least k >= 1 with a^k = 1 (mod m); requires gcd(a, m) = 1 and m >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Returns (p, k) when n = p^k with k >= 1, or (0, 0) otherwise.
std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

PrimeSet set_union(const PrimeSet& a, const PrimeSet& b);
PrimeSet set_intersection(const PrimeSet& a, const PrimeSet& b);
PrimeSet set_difference(const PrimeSet& a, const PrimeSet& b);

}  // namespace arithgraph
