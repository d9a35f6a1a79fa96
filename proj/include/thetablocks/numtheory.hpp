#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace thetablocks::nt {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Largest power of p dividing n (n_p in the usual notation).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// Exponent of p in n.
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// Smallest k >= 1 with a^k = 1 mod m; requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod(std::int64_t a, std::uint64_t m);

std::int64_t mod(std::int64_t a, std::int64_t m);

/// Smallest primitive root modulo the prime q.
std::uint64_t primitive_root(std::uint64_t q);

}  // namespace thetablocks::nt
