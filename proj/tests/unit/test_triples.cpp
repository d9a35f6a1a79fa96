#include <doctest.h>

#include <algorithm>
#include <random>

#include "thetablocks/error.hpp"
#include "thetablocks/triples.hpp"

using namespace thetablocks;

namespace {

std::size_t row_of_degree(const CharacterTable& T, std::uint64_t d) {
  for (std::size_t r = 0; r < T.size(); ++r)
    if (T.degree(r) == d) return r;
  FAIL("no row of degree " << d);
  return 0;
}

// Row 1 of a center of prime order is faithful.
CharacterTriple center_triple(const std::string& name) {
  auto G = builtin_group(name);
  return make_triple(G, center(G), 1);
}

Subgroup subgroup_by_order(const GroupPtr& G, std::size_t order, bool normal = true) {
  for (auto& H : all_subgroups(G))
    if (H.order() == order && (!normal || is_normal(*G, H))) return H;
  FAIL("no subgroup of order " << order);
  return {};
}

CharacterTriple s4_a4_chi3() {
  auto G = builtin_group("S4");
  auto A4 = subgroup_by_order(G, 12);
  auto TN = character_table(subgroup_as_group(A4).group);
  return make_triple(G, A4, row_of_degree(TN, 3));
}

CharacterTriple q8_triple(const std::string& name) {
  auto G = builtin_group(name);
  auto Q = subgroup_by_order(G, 8);
  auto TN = character_table(subgroup_as_group(Q).group);
  return make_triple(G, Q, row_of_degree(TN, 2));
}

}  // namespace

TEST_CASE("triple construction errors") {
  auto S3 = builtin_group("S3");
  Subgroup C2(S3, {0, S3->classes()[1].members[0]});
  if (C2.order() == 2) CHECK_THROWS_AS(make_triple(S3, C2, 0), Error);
  auto A4 = builtin_group("A4");
  auto V4 = subgroup_by_order(A4, 4);
  try {
    make_triple(A4, V4, 1);
    FAIL("a nontrivial character of V4 is not A4-invariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedInput);
  }
  CHECK(invariant_rows(A4, V4) == std::vector<std::size_t>{0});
  CHECK(named_normal_subgroup(A4, "auto:derived").order() == 4);
  CHECK_THROWS_AS(named_normal_subgroup(A4, "auto:nope"), Error);
}

TEST_CASE("trivial character over a normal subgroup gives a trivial factor set") {
  auto G = builtin_group("S4");
  auto T = make_triple(G, subgroup_by_order(G, 4), 0);
  auto P = build_projective_rep(T);
  CHECK(projrep_violations(T, P).empty());
  for (const auto& a : P.factor_set) CHECK(a.is_one());
  auto R = representation_group(T, P);
  CHECK(R.k == 1);
  CHECK(R.Ghat->order() == 24);
}

TEST_CASE("D8 over its center") {
  auto T = center_triple("D8");
  auto P = build_projective_rep(T);
  CHECK(P.construction == "linear");
  CHECK(projrep_violations(T, P).empty());
  bool nontrivial = false;
  for (const auto& a : P.factor_set) {
    CHECK((a == CycNum(1) || a == CycNum(-1)));
    nontrivial |= a == CycNum(-1);
  }
  CHECK(nontrivial);
  auto R = representation_group(T, P);
  CHECK(R.Ghat->order() == 16);
  CHECK(R.nhat_central);
  for (Elem n : T.N.members()) CHECK(R.tau[R.Ghat->class_of(R.pair(n, 0))] == T.theta_at(n));
}

TEST_CASE("factor set of a nontrivial coset-constant twist") {
  auto T = center_triple("Q8");
  auto P = build_projective_rep(T);
  const auto& G = *T.G;

  std::vector<CycNum> one(G.order(), CycNum(1));
  auto P1 = twist_projective_rep(T, P, one);
  CHECK(P1.factor_set == P.factor_set);

  std::mt19937 rng(7);
  std::vector<CycNum> per_coset(P.Q.group->order());
  for (auto& v : per_coset) v = CycNum::root_of_unity(4, rng() % 4);
  per_coset[P.Q.projection[0]] = CycNum(1);
  std::vector<CycNum> xi(G.order());
  for (Elem g = 0; g < G.order(); ++g) xi[g] = per_coset[P.Q.projection[g]];
  auto Px = twist_projective_rep(T, P, xi);
  CHECK(projrep_violations(T, Px).empty());
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem y = 0; y < G.order(); ++y)
      CHECK(Px.alpha(x, y) == P.alpha(x, y) * xi[x] * xi[y] * xi[G.mul(x, y)].inverse());

  // a lifted linear character of G/N is a homomorphism: same factor set
  auto TQ = character_table(P.Q.group);
  std::vector<CycNum> lin(G.order());
  for (Elem g = 0; g < G.order(); ++g) lin[g] = TQ.at(1, P.Q.projection[g]);
  CHECK(twist_projective_rep(T, P, lin).factor_set == P.factor_set);

  std::vector<CycNum> bad = one;
  bad[T.N.members().back()] = CycNum(-1);
  try {
    twist_projective_rep(T, P, bad);
    FAIL("expected NotCosetConstant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCosetConstant);
  }
}

TEST_CASE("nonlinear theta through the monomial search") {
  for (const char* name : {"SL23", "GL23"}) {
    CAPTURE(name);
    auto T = q8_triple(name);
    auto P = build_projective_rep(T);
    CHECK(P.construction.rfind("monomial", 0) == 0);
    CHECK(projrep_violations(T, P).empty());
    for (Elem t : P.transversal) CHECK(cycla::det(P.matrices[t]).is_one());
    auto R = representation_group(T, P);
    CHECK(R.Ghat->order() == T.G->order() * R.k);
    for (Elem n : T.N.members()) CHECK(R.tau[R.Ghat->class_of(R.pair(n, 0))] == T.theta_at(n));
    auto S = standard_bijection(T, R);
    CHECK(S.over_theta.size() == S.over_lambda.size());
  }
}

TEST_CASE("alternate transversal") {
  auto T = q8_triple("GL23");
  ProjRepOptions opt;
  auto Q = quotient(T.G, T.N);
  opt.transversal.assign(Q.group->order(), 0);
  for (Elem g = 0; g < T.G->order(); ++g)
    if (Q.projection[g] != Q.projection[0]) opt.transversal[Q.projection[g]] = g;  // largest element
  auto P = build_projective_rep(T, opt);
  CHECK(projrep_violations(T, P).empty());
  opt.transversal[Q.projection[0]] = T.N.members().back();
  CHECK_THROWS_AS(build_projective_rep(T, opt), Error);
}

TEST_CASE("supplied matrices") {
  auto T = center_triple("Q8");
  std::vector<CycMat> mats;
  for (Elem n : T.N.members()) mats.push_back({{T.theta_at(n)}});
  ProjRepOptions opt;
  opt.theta_matrices = mats;
  auto P = build_projective_rep(T, opt);
  CHECK(P.construction == "supplied");
  CHECK(projrep_violations(T, P).empty());
  (*opt.theta_matrices)[1] = {{CycNum(1)}};
  CHECK_THROWS_AS(build_projective_rep(T, opt), Error);
}

TEST_CASE("standard bijection for (S4, A4, chi3)") {
  auto T = s4_a4_chi3();
  auto P = build_projective_rep(T);
  auto R = representation_group(T, P);
  auto S = standard_bijection(T, R);
  REQUIRE(S.over_theta.size() == 2);
  for (auto r : S.over_theta) CHECK(T.TG->degree(r) == 3);
  CHECK(S.image[0] != S.image[1]);
  for (auto b : S.image) CHECK(S.TQ->degree(b) == 1);
}

TEST_CASE("theta blocks with N = 1 are the ordinary blocks") {
  for (const char* name : {"S4", "A5", "SL23"})
    for (unsigned p : {2u, 3u}) {
      CAPTURE(name);
      CAPTURE(p);
      auto G = builtin_group(name);
      auto T = make_triple(G, Subgroup::trivial(G), 0);
      auto rep = theta_blocks(T, p);
      auto P = p_blocks(*T.TG, p);
      REQUIRE(rep.blocks.size() == P.blocks.size());
      for (std::size_t b = 0; b < P.blocks.size(); ++b) {
        CHECK(rep.blocks[b].rows == P.blocks[b].rows);
        CHECK(subgroups_conjugate(*G, rep.blocks[b].defect_group, P.blocks[b].defect_group));
      }
    }
}

TEST_CASE("theta blocks: worked cases") {
  {
    auto T = s4_a4_chi3();
    auto rep = theta_blocks(T, 2);
    REQUIRE(rep.blocks.size() == 1);
    CHECK(rep.blocks[0].rows.size() == 2);
    CHECK(rep.blocks[0].defect_group.order() == 24);
    CHECK(rep.blocks[0].defect == 1);
  }
  {
    auto T = center_triple("D8");
    auto rep = theta_blocks(T, 2);
    REQUIRE(rep.blocks.size() == 1);
    CHECK(rep.blocks[0].rows == irr_over(*T.TG, T.Ngroup, T.theta));
    CHECK(rep.blocks[0].defect_group.order() == 8);
  }
  {
    auto T = s4_a4_chi3();
    auto rep = theta_blocks(T, 3);
    CHECK(rep.blocks.size() == 2);
    for (const auto& b : rep.blocks) CHECK(b.defect == 0);
  }
}

TEST_CASE("theta-good elements") {
  auto T = s4_a4_chi3();
  for (Elem n : T.N.members()) CHECK(is_theta_good(T, n));
  for (const char* name : {"Q8", "SL23", "D8", "Dic12"}) {
    auto Tz = center_triple(name);
    for (Elem x = 0; x < Tz.G->order(); ++x)
      if (Tz.G->element_order(x) % 2 != 0) CHECK(is_theta_good(Tz, x));
  }
  // Gallagher count: |Irr(G|theta)| = number of theta-good classes of G/N
  auto check_count = [](const CharacterTriple& Tr) {
    auto Q = quotient(Tr.G, Tr.N);
    std::size_t good = 0;
    for (const auto& cls : Q.group->classes())
      if (is_theta_good(Tr, Q.coset_rep[cls.representative])) ++good;
    CHECK(good == irr_over(*Tr.TG, Tr.Ngroup, Tr.theta).size());
  };
  check_count(T);
  check_count(center_triple("Q8"));
  check_count(center_triple("D8"));
  check_count(center_triple("SL23"));
  check_count(q8_triple("GL23"));
}

TEST_CASE("extensions of theta") {
  auto T = s4_a4_chi3();
  CHECK(theta_extends_to(T, T.N));
  auto w = theta_extensions(T, Subgroup::whole(T.G));
  CHECK(w.rows.size() == 2);
  auto Tq = center_triple("Q8");
  CHECK_FALSE(theta_extends_to(Tq, Subgroup::whole(Tq.G)));
  CHECK(theta_extends_to(Tq, Tq.N));
}
