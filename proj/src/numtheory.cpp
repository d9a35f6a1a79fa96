#include "thetablocks/numtheory.hpp"

#include <numeric>
#include <tuple>

#include "thetablocks/error.hpp"

namespace thetablocks::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [q, e] : factorize(n)) r = r / q * (q - 1);
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 r = 1 % m, b = base % m;
  while (exp) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1)
    throw Error(ErrorKind::MalformedInput, "multiplicative order of a non-unit");
  std::uint64_t k = 1, x = a % m;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % m);
    ++k;
  }
  return k;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t invmod(std::int64_t a, std::uint64_t m) {
  std::int64_t g = static_cast<std::int64_t>(m), x = 0, x1 = 1;
  std::int64_t b = mod(a, static_cast<std::int64_t>(m));
  std::int64_t r0 = g, r1 = b;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (r0 != 1) throw Error(ErrorKind::MalformedInput, "inverse of a non-unit");
  return static_cast<std::uint64_t>(mod(x, static_cast<std::int64_t>(m)));
}

std::uint64_t primitive_root(std::uint64_t q) {
  if (q == 2) return 1;
  auto fac = factorize(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto [r, e] : fac)
      if (powmod(g, (q - 1) / r, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error(ErrorKind::MalformedInput, "no primitive root");
}

}  // namespace thetablocks::nt
