#include <doctest.h>

#include <random>

#include "thetablocks/error.hpp"
#include "thetablocks/finite_field.hpp"

using namespace thetablocks;

TEST_CASE("prime and extension fields") {
  auto f7 = FiniteField::prime_field(7);
  CHECK(f7.size() == 7);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.add(4, 5) == 2);
  CHECK(f7.neg(2) == 5);

  FiniteField f9(3, FiniteField::smallest_irreducible(3, 2));
  CHECK(f9.size() == 9);
  for (FiniteField::Elem a = 1; a < 9; ++a) {
    CHECK(f9.mul(a, f9.inv(a)) == 1);
    CHECK(f9.pow(a, 8) == 1);
    CHECK(f9.add(a, f9.neg(a)) == 0);
  }
  CHECK_THROWS_AS(FiniteField(2, {1, 0, 1}), Error);  // x^2+1 = (x+1)^2 over F_2
}

TEST_CASE("distributivity in GF(16) and GF(25)") {
  for (auto [p, f] : {std::pair{2u, 4u}, std::pair{5u, 2u}}) {
    FiniteField F(p, FiniteField::smallest_irreducible(p, f));
    std::mt19937 rng(1);
    for (int i = 0; i < 200; ++i) {
      FiniteField::Elem a = rng() % F.size(), b = rng() % F.size(), c = rng() % F.size();
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
  }
}

TEST_CASE("reduction modulo an ideal above p") {
  SUBCASE("integers and p-power roots") {
    IdealReduction red(3, 12);
    CHECK(red.reduce(CycNum(7)) == 1);
    CHECK(red.reduce(CycNum::root_of_unity(3, 1)) == 1);
    CHECK_THROWS_AS(red.reduce(CycNum(Rational(1, 2))), Error);
  }
  SUBCASE("p = 2, cube roots land in F_4") {
    IdealReduction red(2, 3);
    CHECK(red.field().size() == 4);
    auto w = red.reduce(CycNum::root_of_unity(3, 1));
    CHECK(w == red.root());
    CHECK(red.field().pow(w, 3) == 1);
    CHECK(w != 1);
    CHECK(red.reduce(CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2)) == red.reduce(CycNum(-1)));
    CHECK(red.reduce(CycNum(-1)) == 1);
    CHECK(red.lift_exponent(w) == 1);
  }
  SUBCASE("homomorphism on random integral samples for every choice") {
    std::mt19937_64 rng(3);
    for (auto [p, n] : {std::pair{2u, 24ull}, std::pair{3u, 12ull}, std::pair{5u, 60ull}, std::pair{7u, 21ull}}) {
      for (auto choice : IdealReduction::all_choices(p, n)) {
        IdealReduction red(p, n, choice);
        const auto& F = red.field();
        for (int i = 0; i < 25; ++i) {
          std::map<std::int64_t, Rational> ta, tb;
          for (std::uint64_t e = 0; e < n; e += 1 + rng() % 4) {
            ta[static_cast<std::int64_t>(e)] = static_cast<long>(rng() % 7) - 3;
            tb[static_cast<std::int64_t>(e)] = static_cast<long>(rng() % 5) - 2;
          }
          CycNum a = CycNum::from_exponents(n, ta), b = CycNum::from_exponents(n, tb);
          CHECK(red.reduce(a + b) == F.add(red.reduce(a), red.reduce(b)));
          CHECK(red.reduce(a * b) == F.mul(red.reduce(a), red.reduce(b)));
        }
      }
    }
  }
  SUBCASE("conductor mismatch") {
    IdealReduction red(2, 3);
    CHECK_THROWS_AS(red.reduce(CycNum::root_of_unity(5, 1)), Error);
  }
}
