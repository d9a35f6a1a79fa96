#include <doctest.h>

#include <algorithm>

#include "thetablocks/error.hpp"
#include "thetablocks/modrep.hpp"
#include "thetablocks/numtheory.hpp"

using namespace thetablocks;

namespace {

struct Modular {
  CharacterTable T;
  IdealReduction red;
  BrauerTable BT;
  BlockPartition P;
  DecompositionMatrix D;
};

Modular modular(const std::string& name, unsigned p) {
  auto G = builtin_group(name);
  auto T = character_table(G);
  auto red = reduction_for(T, p);
  auto BT = brauer_table(G, red);
  auto P = p_blocks(T, p, red);
  auto D = decomposition_matrix(T, BT, P);
  return {std::move(T), std::move(red), std::move(BT), std::move(P), std::move(D)};
}

std::vector<std::vector<long>> sorted_rows(IntMatrix m) {
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_CASE("matrix layer") {
  auto F = FiniteField::prime_field(5);
  FMat a(3, 3);
  long vals[3][3] = {{2, 1, 0}, {0, 2, 0}, {1, 4, 3}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = F.from_int(vals[i][j]);
  // det(xI - a) = (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
  auto cp = ffla::charpoly(F, a);
  CHECK(cp == std::vector<FiniteField::Elem>{F.from_int(-12), F.from_int(16), F.from_int(-7), 1});
  CHECK(ffla::rank(F, a) == 3);

  FMat b = a;
  for (int i = 0; i < 3; ++i) b.at(i, i) = F.sub(b.at(i, i), 2);
  auto K = ffla::left_nullspace(F, b);
  REQUIRE(K.rows() == 1);
  auto img = ffla::vec_mul(F, K.row_vector(0), b);
  CHECK(std::all_of(img.begin(), img.end(), [](auto v) { return v == 0; }));
  auto R = ffla::nullspace(F, b);
  REQUIRE(R.rows() == 1);
  auto col = ffla::vec_mul(F, R.row_vector(0), ffla::transpose(b));
  CHECK(std::all_of(col.begin(), col.end(), [](auto v) { return v == 0; }));

  // rows act on the right: <e2> and <e1, e2> are invariant
  CHECK(ffla::spin(F, {{0, 1, 0}}, {a}).rows() == 1);
  CHECK(ffla::spin(F, {{1, 0, 0}}, {a}).rows() == 2);
  CHECK(ffla::spin(F, {{0, 0, 1}}, {a}).rows() == 3);
}

TEST_CASE("p-groups have only the trivial module") {
  for (auto [name, p] : {std::pair{"Q8", 2u}, {"D8", 2u}, {"C3", 3u}, {"C2xC2xC2", 2u}}) {
    auto G = builtin_group(name);
    auto red = reduction_for(character_table(G), p);
    auto mods = modular_irreducibles(G, red);
    REQUIRE(mods.size() == 1);
    CHECK(mods[0].dim == 1);
  }
}

TEST_CASE("A4 mod 2: three linear modules over F4") {
  auto M = modular("A4", 2);
  CHECK(M.red.field().size() == 4);
  CHECK(M.BT.degrees == std::vector<std::uint64_t>{1, 1, 1});
  for (const auto& phi : M.BT.ibr)
    for (const auto& v : phi) CHECK(v.as_root_of_unity().has_value());
  // decomposition rows: three unit rows and (1,1,1)
  IntMatrix expect = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
  CHECK(sorted_rows(M.D.d) == expect);
  CHECK_FALSE(is_block_diagonal_splittable(M.D.d));
}

TEST_CASE("S3 mod 3") {
  auto M = modular("S3", 3);
  CHECK(M.BT.degrees == std::vector<std::uint64_t>{1, 1});
  for (std::size_t r = 0; r < M.T.size(); ++r) {
    long s = M.D.d[r][0] + M.D.d[r][1];
    CHECK(s == static_cast<long>(M.T.degree(r)));
    if (M.T.degree(r) == 2) CHECK(M.D.d[r] == std::vector<long>{1, 1});
  }
}

TEST_CASE("Q8 mod 2 faithful row is (2)") {
  auto M = modular("Q8", 2);
  auto deg2 = std::find(M.T.degrees().begin(), M.T.degrees().end(), 2u) - M.T.degrees().begin();
  auto sub = submatrix_over(M.D, 0, {static_cast<std::size_t>(deg2)});
  CHECK(sub == IntMatrix{{2}});
  CHECK_FALSE(is_block_diagonal_splittable(sub));
}

TEST_CASE("splittability") {
  CHECK_FALSE(is_block_diagonal_splittable({{2}}));
  CHECK(is_block_diagonal_splittable({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_FALSE(is_block_diagonal_splittable({{1, 0}, {1, 1}}));
  CHECK(is_block_diagonal_splittable({{1, 0, 0}, {0, 0, 0}, {0, 2, 1}}));
  CHECK_FALSE(is_block_diagonal_splittable({{0, 0}, {0, 3}}));
}

TEST_CASE("row outside block") {
  auto M = modular("S3", 2);
  std::size_t other = M.P.block_of[0] == 0 ? 1 : 0;
  std::size_t r = 0;
  while (M.P.block_of[r] == other) ++r;
  CHECK_THROWS_AS(submatrix_over(M.D, other, {r}), Error);
}

TEST_CASE("coprime decomposition matrix is a permutation matrix") {
  auto M = modular("S4", 5);
  for (const auto& row : M.D.d) {
    CHECK(std::count(row.begin(), row.end(), 1) == 1);
    CHECK(std::count(row.begin(), row.end(), 0) == static_cast<long>(row.size()) - 1);
  }
}

TEST_CASE("modular invariants on built-in groups") {
  for (const auto& name : builtin_group_names()) {
    auto G = builtin_group(name);
    if (G->order() > kModularCap) continue;
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      if (G->order() % p != 0) continue;
      CAPTURE(name);
      CAPTURE(p);
      auto M = modular(name, p);
      const auto& d = M.D.d;
      // identity value equals the dimension
      for (std::size_t i = 0; i < M.BT.ibr.size(); ++i)
        CHECK(M.BT.ibr[i][0] == CycNum(static_cast<long>(M.BT.degrees[i])));
      // exact restriction equations
      for (std::size_t r = 0; r < M.T.size(); ++r)
        for (std::size_t c = 0; c < M.BT.pregular_classes.size(); ++c) {
          CycNum s;
          for (std::size_t i = 0; i < M.BT.ibr.size(); ++i) s += CycNum(d[r][i]) * M.BT.ibr[i][c];
          CHECK(s == M.T.value(r, M.BT.pregular_classes[c]));
        }
      // block consistency, projective degree sanity, Cartan connectivity per block
      for (std::size_t i = 0; i < M.BT.ibr.size(); ++i) {
        std::uint64_t pdeg = 0;
        for (std::size_t r = 0; r < d.size(); ++r) {
          if (d[r][i]) CHECK(M.P.block_of[r] == M.D.brauer_blocks[i]);
          pdeg += d[r][i] * M.T.degree(r);
        }
        CHECK(pdeg >= M.BT.degrees[i]);
        CHECK(pdeg % nt::p_part(G->order(), p) == 0);
      }
      auto C = cartan_matrix(M.D);
      for (std::size_t b = 0; b < M.P.blocks.size(); ++b) {
        IntMatrix Cb;
        for (std::size_t i = 0; i < C.size(); ++i) {
          if (M.D.brauer_blocks[i] != b) continue;
          std::vector<long> row;
          for (std::size_t j = 0; j < C.size(); ++j)
            if (M.D.brauer_blocks[j] == b) row.push_back(C[i][j]);
          Cb.push_back(row);
        }
        CHECK_FALSE(Cb.empty());
        CHECK_FALSE(is_block_diagonal_splittable(Cb));
        CHECK_FALSE(is_block_diagonal_splittable(submatrix_over(M.D, b, M.P.blocks[b].rows)));
      }
    }
  }
}

TEST_CASE("modular cap") {
  auto G = builtin_group("S5");
  auto red = reduction_for(character_table(G), 2);
  CHECK_THROWS_AS(modular_irreducibles(G, red, kDefaultSeed, 100), Error);
}
