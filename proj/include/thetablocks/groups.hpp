#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace thetablocks {

using Elem = std::uint32_t;
using Perm = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 2000;

/// Where a group came from; kept for reports and error payloads.
struct GroupOrigin {
  enum class Kind { Permutations, Cayley, TwistedExtension, Quotient, Subgroup };
  Kind kind = Kind::Cayley;
  std::string detail;
};

struct ConjClass {
  Elem representative = 0;
  std::vector<Elem> members;  // sorted
  std::size_t size() const { return members.size(); }
};

/// A finite group stored as its full multiplication table. Element 0 is the
/// identity. Immutable once built; share it through GroupPtr.
class FiniteGroup {
 public:
  /// Build from 0-indexed image lists; (xy)[i] = y[x[i]] (apply x first).
  static std::shared_ptr<const FiniteGroup> from_permutations(std::string name, const std::vector<Perm>& generators,
                                                              std::size_t cap = kDefaultOrderCap);
  /// Build from a Cayley table; row/column 0 must be the identity.
  static std::shared_ptr<const FiniteGroup> from_cayley(std::string name, std::vector<std::vector<Elem>> table,
                                                        GroupOrigin origin = {}, std::size_t cap = kDefaultOrderCap,
                                                        std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  std::size_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// g^-1 x g.
  Elem conj(Elem x, Elem g) const { return mul(inv_[g], mul(x, g)); }
  Elem pow(Elem x, std::int64_t k) const;
  std::uint64_t element_order(Elem x) const { return orders_[x]; }
  std::uint64_t exponent() const { return exponent_; }

  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t class_of(Elem x) const { return class_of_[x]; }
  /// Class containing x^-1.
  std::size_t inverse_class(std::size_t k) const { return class_of_[inv_[classes_[k].representative]]; }

  /// A small deterministic generating set (never contains the identity unless the group is trivial).
  const std::vector<Elem>& generators() const { return gens_; }
  /// For each element x != 1: x = mul(tree_parent(x), generators()[tree_gen(x)]), with
  /// parents visited before children in bfs_order().
  Elem tree_parent(Elem x) const { return tree_parent_[x]; }
  std::size_t tree_gen(Elem x) const { return tree_gen_[x]; }
  const std::vector<Elem>& bfs_order() const { return bfs_order_; }

  const GroupOrigin& origin() const { return origin_; }
  std::string label(Elem x) const;
  const std::vector<Perm>& permutations() const { return perms_; }

  /// Associativity on all triples (exhaustive) or on a seeded random sample.
  bool check_associativity(bool exhaustive, std::uint64_t seed = 1) const;

 private:
  FiniteGroup() = default;
  void finish(std::vector<Elem> preferred_gens);

  std::string name_;
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<Elem> gens_;
  std::vector<Elem> tree_parent_;
  std::vector<std::size_t> tree_gen_;
  std::vector<Elem> bfs_order_;
  GroupOrigin origin_;
  std::vector<std::string> labels_;
  std::vector<Perm> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup of a parent group, stored as its sorted member list.
class Subgroup {
 public:
  Subgroup() = default;
  /// members must be closed under multiplication; they are sorted here.
  Subgroup(GroupPtr parent, std::vector<Elem> members);

  static Subgroup trivial(GroupPtr parent) { return Subgroup(parent, {0}); }
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem x) const { return mask_[x]; }
  /// Position of x in members(), or -1.
  long index_of(Elem x) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

/// The subgroup as a group in its own right; element i of group is members()[i].
struct SubgroupGroup {
  GroupPtr group;
  std::vector<Elem> embed;
};

struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;   // element of G -> coset index
  std::vector<Elem> coset_rep;    // coset index -> smallest element of the coset
};

const std::vector<ConjClass>& conjugacy_classes(const FiniteGroup& G);
Subgroup generated_subgroup(const GroupPtr& G, const std::vector<Elem>& gens);
Subgroup centralizer(const GroupPtr& G, Elem x);
Subgroup normalizer(const GroupPtr& G, const Subgroup& H);
Subgroup center(const GroupPtr& G);
Subgroup derived_subgroup(const GroupPtr& G);
Subgroup normal_closure(const GroupPtr& G, const std::vector<Elem>& gens);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
bool is_abelian(const Subgroup& H);
/// Generators of H (greedy, deterministic).
std::vector<Elem> subgroup_generators(const Subgroup& H);
/// H^g = g^-1 H g.
Subgroup conjugate_subgroup(const Subgroup& H, Elem g);

Quotient quotient(const GroupPtr& G, const Subgroup& N);
SubgroupGroup subgroup_as_group(const Subgroup& H);
/// Preimage in G of a subgroup of the quotient given by its coset indices.
Subgroup preimage(const GroupPtr& G, const Quotient& Q, const std::vector<Elem>& cosets);
/// Image in the quotient of a subgroup of G, as a subgroup of Q.group.
Subgroup image(const Quotient& Q, const Subgroup& H);

/// Sylow p-subgroup by extension inside normalizers; trivial when p does not divide |G|.
Subgroup sylow_subgroup(const GroupPtr& G, std::uint64_t p);
Subgroup sylow_subgroup(const Subgroup& H, std::uint64_t p);
/// True iff H1^g = H2 for some g in G.
bool subgroups_conjugate(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2);
/// Some g with H1^g = H2, if any.
std::optional<Elem> conjugating_element(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2);
/// Every subgroup of G, ordered by order then member list.
std::vector<Subgroup> all_subgroups(const GroupPtr& G);

/// The p-part x_p of an element: the power of x whose order is the p-part of o(x).
Elem p_part(const FiniteGroup& G, Elem x, std::uint64_t p);
/// (gN)_p as an element (coset index) of Q.group.
Elem p_part_of_coset(const GroupPtr& G, const Subgroup& N, Elem g, std::uint64_t p);
Elem p_part_of_coset(const Quotient& Q, Elem g, std::uint64_t p);
bool is_p_regular(const FiniteGroup& G, Elem x, std::uint64_t p);

/// Built-in groups given by permutation generators.
GroupPtr builtin_group(const std::string& name, std::size_t cap = kDefaultOrderCap);
const std::vector<std::string>& builtin_group_names();
/// Permutation generators of a built-in group.
const std::vector<Perm>& builtin_generators(const std::string& name);

}  // namespace thetablocks
