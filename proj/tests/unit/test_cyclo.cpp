#include <doctest.h>

#include <numeric>
#include <random>

#include "thetablocks/cyclo.hpp"
#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

using namespace thetablocks;

namespace {

CycNum z(std::uint64_t n, std::int64_t e) { return CycNum::root_of_unity(n, e); }

// Norm of a over Q computed as the product of all Galois conjugates.
Rational galois_norm(const CycNum& a) {
  std::uint64_t n = a.conductor();
  CycNum prod(1);
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) prod *= a.galois(static_cast<std::int64_t>(k));
  auto r = prod.to_rational();
  REQUIRE(r.has_value());
  return *r;
}

int moebius_oracle(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  return mu;
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(z(1, 0) == CycNum(1));
  CHECK(z(2, 1) == CycNum(-1));
  CHECK(z(4, 1) * z(4, 1) == CycNum(-1));
  CHECK(z(3, 1) + z(3, 2) == CycNum(-1));
  // zeta_6 = -zeta_3^2
  CHECK(z(6, 1) == -z(3, 2));
  CHECK(z(6, 1).minimized().conductor() == 3);
  CHECK(z(12, 4) == z(3, 1));
  CHECK(z(5, 7) == z(5, 2));
  CHECK(z(8, 1).pow(8) == CycNum(1));
}

TEST_CASE("Moebius sums of primitive roots") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    CycNum s;
    for (std::uint64_t e = 0; e < n; ++e)
      if (std::gcd(e, n) == 1) s += z(n, static_cast<std::int64_t>(e));
    CHECK_MESSAGE(s == CycNum(moebius_oracle(n)), "n = " << n);
  }
}

TEST_CASE("inverse checked through the norm") {
  CycNum a = CycNum(1) + z(5, 1) + z(5, 4);
  CycNum v = a.inverse();
  CHECK(v * a == CycNum(1));
  CHECK(galois_norm(v) * galois_norm(a) == 1);
  CHECK_THROWS_AS(CycNum().inverse(), Error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::uint64_t conductors[] = {1, 3, 4, 5, 8, 12, 15, 24};
  auto sample = [&] {
    std::uint64_t n = conductors[rng() % 8];
    std::map<std::int64_t, Rational> t;
    for (std::uint64_t e = 0; e < n; ++e) t[static_cast<std::int64_t>(e)] = Rational(coef(rng), 1 + rng() % 3);
    return CycNum::from_exponents(n, t);
  };
  for (int i = 0; i < 60; ++i) {
    CycNum a = sample(), b = sample(), c = sample();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CycNum());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("complex conjugation inverts roots") {
  CHECK(z(7, 3).conj() == z(7, 4));
  CHECK((z(12, 1) * z(12, 1).conj()) == CycNum(1));
}

TEST_CASE("square roots and cyclotomic roots") {
  for (long r : {2, 3, 5, 6, 7, 12}) {
    CycNum s = cyclo::sqrt_rational(Rational(r));
    CHECK(s * s == CycNum(r));
    CHECK(s.approx().real() > 0);
  }
  auto cube = cyclo::cyclotomic_root(z(3, 1), 3);
  REQUIRE(cube.has_value());
  CHECK(cube->pow(3) == z(3, 1));
  auto sq = cyclo::cyclotomic_root(CycNum(-2), 2);
  REQUIRE(sq.has_value());
  CHECK(*sq * *sq == CycNum(-2));
  CHECK_FALSE(cyclo::cyclotomic_root(CycNum(2), 3).has_value());
}

TEST_CASE("root-of-unity detection and rendering") {
  auto r = (-z(3, 1)).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(r->order == 6);
  CHECK_FALSE(CycNum(2).as_root_of_unity().has_value());
  CHECK(CycNum(-1).str() == "-1");
  CHECK((z(3, 1) + z(3, 2)).str() == "-1");
}
