#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thetablocks/cyclo.hpp"
#include "thetablocks/groups.hpp"

namespace thetablocks {

/// Values of a class function, one per conjugacy class of its group.
using ClassFunction = std::vector<CycNum>;

/// The ordinary character table. Rows are irreducible characters (trivial
/// first, then by degree, then by values); columns follow group->classes().
class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> chars, std::uint64_t dixon_prime);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return chars_.size(); }
  const ClassFunction& row(std::size_t i) const { return chars_[i]; }
  const std::vector<ClassFunction>& rows() const { return chars_; }
  const CycNum& value(std::size_t i, std::size_t k) const { return chars_[i][k]; }
  /// chi_i evaluated at an element.
  const CycNum& at(std::size_t i, Elem x) const { return chars_[i][group_->class_of(x)]; }
  std::uint64_t degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  /// Conductor of the table (the group exponent).
  std::uint64_t conductor() const { return group_->exponent(); }
  /// The prime used for the modular eigenvector computation.
  std::uint64_t dixon_prime() const { return q_; }
  std::optional<std::size_t> find_row(const ClassFunction& f) const;
  bool is_linear(std::size_t i) const { return degrees_[i] == 1; }

 private:
  GroupPtr group_;
  std::vector<ClassFunction> chars_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t q_;
};

/// Dixon-Schneider: simultaneous eigenvectors of the class matrices over F_q,
/// lifted to cyclotomic values through eigenvalue multiplicities.
CharacterTable character_table(const GroupPtr& G, std::size_t cap = kDefaultOrderCap);

/// omega_chi(K) = |K| chi(x_K) / chi(1), per class.
ClassFunction central_character(const CharacterTable& T, std::size_t row);

/// (1/|G|) sum_K |K| a(K) conj(b(K)).
CycNum inner_product(const FiniteGroup& G, const ClassFunction& a, const ClassFunction& b);
ClassFunction product(const ClassFunction& a, const ClassFunction& b);
ClassFunction conj(const ClassFunction& a);

/// chi restricted to a subgroup, as a class function on H.group.
ClassFunction restrict_character(const FiniteGroup& G, const ClassFunction& chi, const SubgroupGroup& H);
ClassFunction restrict_character(const CharacterTable& T, std::size_t row, const SubgroupGroup& H);

/// Multiplicities <chi_N, theta> for every row of T.
std::vector<Rational> restriction_multiplicities(const CharacterTable& TG, const SubgroupGroup& N, const ClassFunction& theta);

/// Rows chi of T_G with <chi_N, theta> != 0. N must be normal.
std::vector<std::size_t> irr_over(const CharacterTable& TG, const SubgroupGroup& N, const ClassFunction& theta);

/// theta(x^g) = theta(x) for all x in N and g in G.
bool is_invariant(const FiniteGroup& G, const SubgroupGroup& N, const ClassFunction& theta);

/// Lift a class function of a quotient G/N to G.
ClassFunction inflate(const FiniteGroup& G, const Quotient& Q, const ClassFunction& f);

}  // namespace thetablocks
