#include <doctest.h>

#include <algorithm>

#include "thetablocks/blocks.hpp"
#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

using namespace thetablocks;

namespace {

std::vector<std::vector<std::uint64_t>> degree_partition(const CharacterTable& T, const BlockPartition& P) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& b : P.blocks) {
    std::vector<std::uint64_t> d;
    for (auto r : b.rows) d.push_back(T.degree(r));
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool p_singular(const FiniteGroup& G, Elem x, unsigned p) { return G.element_order(x) % p == 0; }

}  // namespace

TEST_CASE("coprime characteristic gives singleton blocks of defect zero") {
  auto T = character_table(builtin_group("S3"));
  auto P = p_blocks(T, 5);
  CHECK(P.blocks.size() == 3);
  for (const auto& b : P.blocks) {
    CHECK(b.rows.size() == 1);
    CHECK(b.defect == 0);
    CHECK(b.defect_group.order() == 1);
  }
}

TEST_CASE("A4 blocks") {
  auto A4 = builtin_group("A4");
  auto T = character_table(A4);
  auto P2 = p_blocks(T, 2);
  REQUIRE(P2.blocks.size() == 1);
  CHECK(P2.blocks[0].defect == 2);
  CHECK(P2.blocks[0].defect_group == sylow_subgroup(A4, 2));
  auto P3 = p_blocks(T, 3);
  REQUIRE(P3.blocks.size() == 2);
  CHECK(P3.blocks[0].rows == std::vector<std::size_t>{0, 1, 2});
  CHECK(P3.blocks[0].defect == 1);
  CHECK(P3.blocks[1].rows == std::vector<std::size_t>{3});
  CHECK(P3.blocks[1].defect == 0);
}

TEST_CASE("known block partitions") {
  using V = std::vector<std::vector<std::uint64_t>>;
  auto check = [](const char* name, unsigned p, const V& expect) {
    auto T = character_table(builtin_group(name));
    CHECK_MESSAGE(degree_partition(T, p_blocks(T, p)) == expect, name << " p=" << p);
  };
  check("S3", 2, V{{1, 1}, {2}});
  check("S3", 3, V{{1, 1, 2}});
  check("S4", 2, V{{1, 1, 2, 3, 3}});
  check("S4", 3, V{{1, 1, 2}, {3}, {3}});
  check("A5", 2, V{{1, 3, 3, 5}, {4}});
  check("A5", 3, V{{1, 4, 5}, {3}, {3}});
  check("A5", 5, V{{1, 3, 3, 4}, {5}});
}

TEST_CASE("block invariants on every built-in group") {
  for (const auto& name : builtin_group_names()) {
    auto G = builtin_group(name);
    auto T = character_table(G);
    const auto& cls = G->classes();
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      auto P = p_blocks(T, p);
      std::size_t total = 0;
      for (const auto& b : P.blocks) {
        total += b.rows.size();
        std::uint64_t pd = 1;
        for (unsigned i = 0; i < b.defect; ++i) pd *= p;
        CHECK(b.defect_group.order() == pd);
        // weak block orthogonality: p-regular against p-singular columns
        for (std::size_t a = 0; a < cls.size(); ++a) {
          if (p_singular(*G, cls[a].representative, p)) continue;
          for (std::size_t c = 0; c < cls.size(); ++c) {
            if (!p_singular(*G, cls[c].representative, p)) continue;
            CycNum s;
            for (auto r : b.rows) s += T.value(r, a) * T.value(r, c).conj();
            CHECK_MESSAGE(s.is_zero(), name << " p=" << p);
          }
        }
      }
      CHECK(total == T.size());
      CHECK(P.blocks[P.principal].defect_group.order() == nt::p_part(G->order(), p));
      for (std::size_t r = 0; r < T.size(); ++r)
        if (nt::p_part(T.degree(r), p) == nt::p_part(G->order(), p))
          CHECK(P.blocks[P.block_of[r]].rows.size() == 1);
      // independent of the maximal ideal
      if (G->order() <= 60)
        for (auto ch : IdealReduction::all_choices(p, T.conductor())) {
          auto Q = p_blocks(T, p, ch);
          CHECK(Q.block_of == P.block_of);
        }
    }
  }
}

TEST_CASE("linear twists") {
  auto T = character_table(builtin_group("A4"));
  auto P = p_blocks(T, 3);
  CHECK(mu_twist_block(T, P, 0, 0) == 0);
  CHECK(mu_twist_block(T, P, 0, 1) == 0);
  CHECK_THROWS_AS(mu_twist_block(T, P, 0, 3), Error);
  auto TS = character_table(builtin_group("SL23"));
  auto PS = p_blocks(TS, 3);
  for (std::size_t b = 0; b < PS.blocks.size(); ++b) {
    if (PS.blocks[b].defect != 0) continue;
    for (std::size_t mu = 0; mu < TS.size(); ++mu) {
      if (!TS.is_linear(mu)) continue;
      CHECK(PS.blocks[mu_twist_block(TS, PS, b, mu)].defect == 0);
    }
  }
}

TEST_CASE("blocks dominated by a central quotient") {
  for (auto [name, p] : {std::pair{"Q8", 2u}, std::pair{"SL23", 2u}, std::pair{"SL23", 3u}, std::pair{"Dic12", 3u}}) {
    auto G = builtin_group(name);
    auto rep = dominated_block_data(G, center(G), p);
    CHECK_MESSAGE(rep.partition_match, name);
    CHECK_MESSAGE(rep.defect_match, name);
    CHECK(rep.pairs_checked > 0);
  }
  auto G = builtin_group("A4");
  auto triv = dominated_block_data(G, Subgroup::trivial(G), 2);
  CHECK(triv.partition_match);
  CHECK(triv.defect_match);
  auto S3 = builtin_group("S3");
  try {
    dominated_block_data(S3, derived_subgroup(S3), 3);
    FAIL("expected ShapeViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeViolation);
  }
}
