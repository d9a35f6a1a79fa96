#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "thetablocks/error.hpp"
#include "thetablocks/groups.hpp"

using namespace thetablocks;

namespace {

// Test-side oracle: permutation arithmetic independent of the Cayley tables.
Perm compose(const Perm& x, const Perm& y) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}
Perm inverse(const Perm& x) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[x[i]] = static_cast<std::uint32_t>(i);
  return r;
}
std::set<Perm> closure(const std::vector<Perm>& gens) {
  Perm id(gens[0].size());
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm y = compose(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}
std::multiset<std::size_t> class_sizes_oracle(const std::vector<Perm>& gens) {
  auto all = closure(gens);
  std::set<Perm> done;
  std::multiset<std::size_t> sizes;
  for (const auto& x : all) {
    if (done.count(x)) continue;
    std::set<Perm> cls;
    for (const auto& g : all) cls.insert(compose(compose(inverse(g), x), g));
    done.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

Subgroup from_perms(const GroupPtr& G, const std::vector<Perm>& gens) {
  std::vector<Elem> idx;
  for (const auto& g : gens)
    for (Elem e = 0; e < G->order(); ++e)
      if (G->permutations()[e] == g) idx.push_back(e);
  return generated_subgroup(G, idx);
}

}  // namespace

TEST_CASE("closure from permutations") {
  CHECK(FiniteGroup::from_permutations("C2", {{1, 0}})->order() == 2);
  auto S3 = FiniteGroup::from_permutations("S3", {{1, 2, 0}, {1, 0, 2}});
  CHECK(S3->order() == closure({{1, 2, 0}, {1, 0, 2}}).size());
  CHECK(S3->order() == 6);
  CHECK_THROWS_AS(FiniteGroup::from_permutations("E", {}), Error);
  try {
    FiniteGroup::from_permutations("bad", {{0, 0, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedPermutation);
  }
  try {
    builtin_group("S5", 100);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
}

TEST_CASE("built-in orders match brute-force closure") {
  for (const auto& name : builtin_group_names()) {
    auto G = builtin_group(name);
    CHECK_MESSAGE(G->order() == closure(builtin_generators(name)).size(), name);
    CHECK(G->check_associativity(G->order() <= 24));
  }
}

TEST_CASE("Cayley table validation") {
  CHECK_THROWS_AS(FiniteGroup::from_cayley("x", {{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_cayley("x", {{1, 0}, {0, 1}}), Error);
  // a Latin square with identity that is not associative (order 5 loop)
  std::vector<std::vector<Elem>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_cayley("loop", loop), Error);
  auto C3 = FiniteGroup::from_cayley("C3", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(C3->order() == 3);
  CHECK(C3->inv(1) == 2);
}

TEST_CASE("conjugacy classes") {
  auto T = FiniteGroup::from_cayley("1", {{0}});
  CHECK(T->classes().size() == 1);
  for (const auto& name : builtin_group_names()) {
    auto G = builtin_group(name);
    std::multiset<std::size_t> sizes;
    std::size_t total = 0;
    for (const auto& c : G->classes()) {
      sizes.insert(c.size());
      total += c.size();
      CHECK(G->order() % c.size() == 0);
      CHECK(c.representative == c.members.front());
    }
    CHECK(total == G->order());
    CHECK(G->classes().front().members == std::vector<Elem>{0});
    CHECK_MESSAGE(sizes == class_sizes_oracle(builtin_generators(name)), name);
  }
  auto S3 = builtin_group("S3");
  std::vector<std::size_t> s3;
  for (const auto& c : S3->classes()) s3.push_back(c.size());
  std::sort(s3.begin(), s3.end());
  CHECK(s3 == std::vector<std::size_t>{1, 2, 3});
  auto A4 = builtin_group("A4");
  std::vector<std::size_t> a4;
  for (const auto& c : A4->classes()) a4.push_back(c.size());
  std::sort(a4.begin(), a4.end());
  CHECK(a4 == std::vector<std::size_t>{1, 3, 4, 4});
}

TEST_CASE("centralizers") {
  auto S3 = builtin_group("S3");
  Subgroup t = from_perms(S3, {{1, 0, 2}});
  Elem tr = t.members()[1];
  CHECK(centralizer(S3, 0).order() == 6);
  CHECK(centralizer(S3, tr).order() == 2);
  auto Q8 = builtin_group("Q8");
  for (Elem x = 0; x < Q8->order(); ++x) {
    if (Q8->element_order(x) == 4) CHECK(centralizer(Q8, x).order() == 4);
    CHECK(centralizer(Q8, x).order() * Q8->classes()[Q8->class_of(x)].size() == 8);
  }
}

TEST_CASE("quotients") {
  auto A4 = builtin_group("A4");
  auto Q = quotient(A4, Subgroup::trivial(A4));
  CHECK(Q.group->order() == 12);
  auto V4 = from_perms(A4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  CHECK(V4.order() == 4);
  auto QV = quotient(A4, V4);
  CHECK(QV.group->order() == 3);
  for (Elem a = 0; a < 12; ++a)
    for (Elem b = 0; b < 12; ++b)
      CHECK(QV.projection[A4->mul(a, b)] == QV.group->mul(QV.projection[a], QV.projection[b]));
  for (Elem a = 0; a < 12; ++a) CHECK((QV.projection[a] == 0) == V4.contains(a));
  auto S3 = builtin_group("S3");
  CHECK(quotient(S3, derived_subgroup(S3)).group->order() == 2);
  auto notnormal = from_perms(S3, {{1, 0, 2}});
  try {
    quotient(S3, notnormal);
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
}

TEST_CASE("center and derived subgroup") {
  CHECK(center(builtin_group("Q8")).order() == 2);
  CHECK(center(builtin_group("SL23")).order() == 2);
  CHECK(center(builtin_group("S4")).order() == 1);
  CHECK(derived_subgroup(builtin_group("S4")).order() == 12);
  CHECK(derived_subgroup(builtin_group("A4")).order() == 4);
  CHECK(derived_subgroup(builtin_group("SL23")).order() == 8);
  CHECK(derived_subgroup(builtin_group("A5")).order() == 60);
}

TEST_CASE("Sylow subgroups") {
  auto A4 = builtin_group("A4");
  CHECK(sylow_subgroup(A4, 5).order() == 1);
  auto P = sylow_subgroup(A4, 2);
  CHECK(P == from_perms(A4, {{1, 0, 3, 2}, {2, 3, 0, 1}}));
  auto S4 = builtin_group("S4");
  auto P2 = sylow_subgroup(S4, 2);
  CHECK(P2.order() == 8);
  CHECK_FALSE(is_abelian(P2));
  for (const auto& name : builtin_group_names()) {
    auto G = builtin_group(name);
    if (G->order() > 60) continue;
    auto subs = all_subgroups(G);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      auto S = sylow_subgroup(G, p);
      std::uint64_t pp = 1;
      for (std::size_t n = G->order(); n % p == 0; n /= p) pp *= p;
      CHECK(S.order() == pp);
      // every subgroup of that order is conjugate to S
      for (const auto& H : subs)
        if (H.order() == pp) CHECK_MESSAGE(subgroups_conjugate(*G, H, S), name << " p=" << p);
    }
  }
}

TEST_CASE("subgroup conjugacy") {
  auto S3 = builtin_group("S3");
  auto a = from_perms(S3, {{1, 0, 2}}), b = from_perms(S3, {{0, 2, 1}});
  CHECK(subgroups_conjugate(*S3, a, a));
  CHECK(a != b);
  CHECK(subgroups_conjugate(*S3, a, b));
  auto S4 = builtin_group("S4");
  auto V = from_perms(S4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  auto K = from_perms(S4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  CHECK(V.order() == 4);
  CHECK(K.order() == 4);
  CHECK(is_normal(*S4, V));
  CHECK_FALSE(is_normal(*S4, K));
  CHECK_FALSE(subgroups_conjugate(*S4, V, K));
}

TEST_CASE("p-parts of cosets") {
  auto S4 = builtin_group("S4");
  auto V = from_perms(S4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  auto Q = quotient(S4, V);
  for (Elem v : V.members()) CHECK(p_part_of_coset(Q, v, 2) == 0);
  Elem four = 0;
  for (Elem x = 0; x < 24; ++x)
    if (S4->element_order(x) == 4) four = x;
  Elem c = p_part_of_coset(S4, V, four, 2);
  CHECK(Q.group->element_order(c) == 2);
  CHECK(c == Q.projection[four]);
  auto C6 = builtin_group("C6");
  Elem g = 0;
  for (Elem x = 0; x < 6; ++x)
    if (C6->element_order(x) == 6) g = x;
  Elem g2 = p_part(*C6, g, 2);
  CHECK(C6->element_order(g2) == 2);
  CHECK(g2 == C6->pow(g, 3));
  CHECK(C6->element_order(p_part(*C6, g, 3)) == 3);
}
