#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thetablocks {

using Rational = mpq_class;
using Integer = mpz_class;

/// A root of unity written as zeta_order^exponent with gcd(exponent, order) = 1
/// (order 1 means the number 1).
struct RootOfUnity {
  std::uint64_t order = 1;
  std::uint64_t exponent = 0;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Exact element of a cyclotomic field Q(zeta_n).
///
/// Stored in the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n) reduced
/// modulo the n-th cyclotomic polynomial. The stored conductor is any n whose
/// field contains the value; rationals are always kept at conductor 1. Values
/// at different conductors are compared and combined in Q(zeta_lcm).
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^e.
  static CycNum root_of_unity(std::uint64_t n, std::int64_t e);

  /// sum of coefficient * zeta_n^exponent over the map (exponents taken mod n).
  static CycNum from_exponents(std::uint64_t n, const std::map<std::int64_t, Rational>& terms);

  /// Directly from power-basis coefficients at conductor n (length phi(n)).
  static CycNum from_power_basis(std::uint64_t n, std::vector<Rational> coeffs);

  std::uint64_t conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> to_rational() const;
  /// True iff the number is an algebraic integer (integral power-basis coordinates).
  bool is_integral() const;

  /// Power-basis coordinates of the same number inside Q(zeta_m); m must be a
  /// multiple of the conductor.
  std::vector<Rational> coeffs_at(std::uint64_t m) const;
  /// Same number at the smallest conductor whose field contains it.
  CycNum minimized() const;

  CycNum conj() const;
  /// The Galois automorphism zeta -> zeta^k (k coprime to the conductor).
  CycNum galois(std::int64_t k) const;
  CycNum inverse() const;
  CycNum pow(std::int64_t k) const;

  std::optional<RootOfUnity> as_root_of_unity() const;

  std::complex<double> approx() const;
  /// Exact rendering, e.g. "-1 - 2*z3", after conductor minimization.
  std::string str() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Total order on numbers written at a fixed common conductor; used only
  /// for deterministic sorting.
  static int compare_at(const CycNum& a, const CycNum& b, std::uint64_t n);

 private:
  CycNum(std::uint64_t n, std::vector<Rational> c);
  void normalize();
  CycNum raw_at(std::uint64_t m) const;

  std::uint64_t n_ = 1;
  std::vector<Rational> c_;
};

namespace cyclo {

/// Integer coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(std::uint64_t n);

/// Power-basis coordinates of zeta_n^k, 0 <= k < n.
const std::vector<long>& power_of_zeta(std::uint64_t n, std::uint64_t k);

/// Square root of a positive rational as a cyclotomic number (Gauss sums).
CycNum sqrt_rational(const Rational& r);

/// The f-th root of x when x = (positive rational) * (root of unity) and the
/// rational part has a cyclotomic f-th root; std::nullopt otherwise.
std::optional<CycNum> cyclotomic_root(const CycNum& x, unsigned f);

}  // namespace cyclo
}  // namespace thetablocks
