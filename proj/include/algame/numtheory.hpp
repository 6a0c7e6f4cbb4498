#ifndef ALGAME_NUMTHEORY_HPP
#define ALGAME_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace algame::nt {

/// Prime factorization of n >= 1 by trial division, (prime, exponent) pairs
/// in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);

/// Number of prime factors counted with multiplicity; Omega(1) = 0.
int omega(std::int64_t n);

/// Multiplicity of the prime p in n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

bool is_prime(std::int64_t n);

/// All divisors of n >= 1, sorted ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Triangular number k(k+1)/2.
std::int64_t triangular(std::int64_t k);

/// p^e with overflow check.
std::int64_t ipow(std::int64_t p, int e);

} // namespace algame::nt

#endif
