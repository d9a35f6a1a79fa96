#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "thetablocks/cyclo.hpp"

namespace thetablocks {

/// GF(p^f) realized as F_p[x]/(modulus). Elements are encoded as integers
/// sum c_i p^i of their coefficient vectors, so 0 and 1 encode themselves and
/// the class of x encodes as p (when f > 1).
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// modulus: monic irreducible polynomial over F_p, coefficients low to high.
  FiniteField(unsigned p, std::vector<unsigned> modulus);

  static FiniteField prime_field(unsigned p);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  std::uint32_t size() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t k) const;
  Elem from_int(long v) const;
  /// Class of the polynomial variable x.
  Elem generator_x() const;
  /// A fixed primitive element (multiplicative generator).
  Elem primitive() const { return exp_[1]; }
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  std::vector<unsigned> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<unsigned>& c) const;
  std::string str(Elem a) const;

  /// Smallest (by encoding) monic irreducible polynomial of degree f over F_p.
  static std::vector<unsigned> smallest_irreducible(unsigned p, unsigned f);

 private:
  unsigned p_;
  unsigned f_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> exp_;           // length 2(q-1)
  std::vector<std::uint32_t> log_;  // length q
  Elem minus_one_ = 0;
  std::vector<Elem> add_table_;  // q*q sums for small odd extension fields
};

/// The fixed choice of maximal ideal above p used for every reduction in a
/// run: zeta_m maps to a chosen root of a chosen irreducible factor of the
/// m-th cyclotomic polynomial mod p, and p-power roots of unity map to 1.
struct IdealChoice {
  unsigned factor = 0;
  unsigned root = 0;

  friend bool operator==(const IdealChoice&, const IdealChoice&) = default;
};

class IdealReduction {
 public:
  /// n is the conductor of the numbers to be reduced (e.g. the group exponent).
  IdealReduction(unsigned p, std::uint64_t n, IdealChoice choice = {});

  unsigned p() const { return p_; }
  std::uint64_t conductor() const { return n_; }
  /// The p'-part m of the conductor.
  std::uint64_t m() const { return m_; }
  IdealChoice choice() const { return choice_; }
  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  /// Image of zeta_m: a primitive m-th root of unity in the field.
  FiniteField::Elem root() const { return root_; }
  /// All irreducible factors of Phi_m mod p, sorted; factors()[choice.factor] is the modulus.
  const std::vector<std::vector<unsigned>>& factors() const { return factors_; }

  /// Image of an algebraic integer under the fixed ring homomorphism.
  FiniteField::Elem reduce(const CycNum& a) const;

  /// Inverse of zeta_m^k -> root^k on the m-th roots of unity in the field.
  /// Returns k, or -1 if x is not an m-th root of unity.
  long lift_exponent(FiniteField::Elem x) const;

  /// Every (factor, root) choice available for (p, n).
  static std::vector<IdealChoice> all_choices(unsigned p, std::uint64_t n);

 private:
  unsigned p_;
  std::uint64_t n_, m_;
  unsigned a_;  // p-adic valuation of n
  IdealChoice choice_;
  std::vector<std::vector<unsigned>> factors_;
  std::shared_ptr<const FiniteField> field_;
  FiniteField::Elem root_ = 1;
  FiniteField::Elem zeta_n_image_ = 1;
  std::vector<long> root_log_;  // encoding -> k with root^k = x, or -1
};

}  // namespace thetablocks
