#include "thetablocks/modrep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

namespace thetablocks {

using FE = FiniteField::Elem;

namespace {

constexpr int kMaxAttempts = 400;

FMat matrix_of(const FiniteGroup& G, const FiniteField& F, const Module& M, Elem x) {
  std::vector<std::size_t> path;
  while (x != 0) {
    path.push_back(G.tree_gen(x));
    x = G.tree_parent(x);
  }
  FMat r = FMat::identity(M.dim);
  for (auto it = path.rbegin(); it != path.rend(); ++it) r = ffla::mul(F, r, M.gens[*it]);
  return r;
}

// v reduced modulo the RREF basis S.
std::vector<FE> reduce_mod(const FiniteField& F, const FMat& S, const std::vector<std::size_t>& piv,
                           std::vector<FE> v) {
  for (std::size_t i = 0; i < piv.size(); ++i) {
    FE c = v[piv[i]];
    if (c == 0) continue;
    FE nc = F.neg(c);
    const FE* s = S.row(i);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (s[j]) v[j] = F.add(v[j], F.mul(nc, s[j]));
  }
  return v;
}

// Submodule and quotient of M by the invariant subspace spanned by the rows of S.
std::pair<Module, Module> split(const FiniteField& F, const Module& M, FMat S) {
  auto piv = ffla::rref(F, S);
  std::vector<bool> is_piv(M.dim, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < M.dim; ++j)
    if (!is_piv[j]) rest.push_back(j);

  Module sub{piv.size(), {}}, quo{rest.size(), {}};
  for (const auto& g : M.gens) {
    FMat a(piv.size(), piv.size());
    for (std::size_t i = 0; i < piv.size(); ++i) {
      auto img = ffla::vec_mul(F, S.row_vector(i), g);
      for (std::size_t k = 0; k < piv.size(); ++k) a.at(i, k) = img[piv[k]];
    }
    sub.gens.push_back(std::move(a));
    FMat b(rest.size(), rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      auto img = reduce_mod(F, S, piv, g.row_vector(rest[i]));
      for (std::size_t k = 0; k < rest.size(); ++k) b.at(i, k) = img[rest[k]];
    }
    quo.gens.push_back(std::move(b));
  }
  return {std::move(sub), std::move(quo)};
}

FE poly_eval(const FiniteField& F, const std::vector<FE>& c, FE x) {
  FE r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

// Divides c by (x - r) in place when r is a root.
bool divide_root(const FiniteField& F, std::vector<FE>& c, FE r) {
  if (c.size() < 2 || poly_eval(F, c, r) != 0) return false;
  std::vector<FE> q(c.size() - 1);
  FE carry = 0;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = F.add(c[i], F.mul(carry, r));
    q[i - 1] = carry;
  }
  c = std::move(q);
  return true;
}

class Chopper {
 public:
  Chopper(const FiniteField& F, std::uint64_t seed) : F_(F), rng_(seed) {}

  // Random element of the algebra generated by M.gens.
  FMat random_element(const Module& M) {
    std::uniform_int_distribution<std::size_t> pick(0, M.gens.size() - 1);
    std::uniform_int_distribution<FE> coef(1, F_.size() - 1);
    FMat a(M.dim, M.dim);
    FMat word = M.gens[pick(rng_)];
    int terms = 2 + static_cast<int>(rng_() % 3);
    for (int t = 0; t < terms; ++t) {
      a = ffla::add(F_, a, ffla::scale(F_, word, coef(rng_)));
      word = ffla::mul(F_, word, M.gens[pick(rng_)]);
    }
    return a;
  }

  // Returns an invariant proper nonzero subspace, or an empty matrix when M is
  // proved simple.
  FMat find_submodule(const Module& M) {
    std::vector<FMat> tgens;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      FMat A = random_element(M);
      auto cp = ffla::charpoly(F_, A);
      for (FE lam = 0; lam < F_.size(); ++lam) {
        if (poly_eval(F_, cp, lam) != 0) continue;
        FMat B = A;
        for (std::size_t i = 0; i < M.dim; ++i) B.at(i, i) = F_.sub(B.at(i, i), lam);
        FMat K = ffla::left_nullspace(F_, B);
        FMat S = ffla::spin(F_, {K.row_vector(0)}, M.gens);
        if (S.rows() < M.dim) return S;
        if (K.rows() != 1) continue;
        if (tgens.empty())
          for (const auto& g : M.gens) tgens.push_back(ffla::transpose(g));
        FMat W = ffla::nullspace(F_, B);
        FMat U = ffla::spin(F_, {W.row_vector(0)}, tgens);
        if (U.rows() == M.dim) return FMat(0, M.dim);
        return ffla::nullspace(F_, U);
      }
    }
    throw Error(ErrorKind::SplitFailure,
                "no splitting element found for a module of dimension " + std::to_string(M.dim));
  }

 private:
  const FiniteField& F_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<FMat> element_matrices(const FiniteGroup& G, const FiniteField& F, const Module& M) {
  std::vector<FMat> out(G.order());
  out[0] = FMat::identity(M.dim);
  for (Elem x : G.bfs_order()) {
    if (x == 0) continue;
    out[x] = ffla::mul(F, out[G.tree_parent(x)], M.gens[G.tree_gen(x)]);
  }
  return out;
}

Module regular_module(const FiniteGroup& G) {
  Module M{G.order(), {}};
  for (Elem g : G.generators()) {
    FMat a(G.order(), G.order());
    for (Elem h = 0; h < G.order(); ++h) a.at(h, G.mul(h, g)) = 1;
    M.gens.push_back(std::move(a));
  }
  return M;
}

std::vector<std::size_t> p_regular_classes(const FiniteGroup& G, unsigned p) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < G.classes().size(); ++k)
    if (G.element_order(G.classes()[k].representative) % p != 0) out.push_back(k);
  return out;
}

ClassFunction brauer_character(const FiniteGroup& G, const IdealReduction& red, const Module& M,
                               const std::vector<std::size_t>& classes) {
  const FiniteField& F = red.field();
  const std::uint64_t m = red.m();
  ClassFunction out;
  for (auto k : classes) {
    Elem x = G.classes()[k].representative;
    auto cp = ffla::charpoly(F, matrix_of(G, F, M, x));
    std::map<std::int64_t, Rational> terms;
    std::size_t found = 0;
    for (std::uint64_t e = 0; e < m && cp.size() > 1; ++e) {
      FE r = F.pow(red.root(), static_cast<std::int64_t>(e));
      while (divide_root(F, cp, r)) {
        terms[static_cast<std::int64_t>(e)] += 1;
        ++found;
      }
    }
    if (found != M.dim)
      throw Error(ErrorKind::EigenvalueOutsideField,
                  "class " + std::to_string(k) + " has eigenvalues that are not m-th roots of unity in the field");
    out.push_back(CycNum::from_exponents(m, terms));
  }
  return out;
}

std::vector<Module> modular_irreducibles(const GroupPtr& G, const IdealReduction& red, std::uint64_t seed,
                                         std::size_t cap) {
  if (G->order() > cap)
    throw Error(ErrorKind::OrderCapExceeded,
                "modular computations are limited to |G| <= " + std::to_string(cap));
  const FiniteField& F = red.field();
  const auto classes = p_regular_classes(*G, red.p());
  Chopper chop(F, seed);

  std::vector<Module> simples;
  std::vector<ClassFunction> chars;
  auto by_dim = [](const Module& a, const Module& b) { return a.dim > b.dim; };
  std::vector<Module> work{regular_module(*G)};
  while (!work.empty() && simples.size() < classes.size()) {
    std::pop_heap(work.begin(), work.end(), by_dim);
    Module M = std::move(work.back());
    work.pop_back();
    FMat S = M.dim == 1 ? FMat(0, 1) : chop.find_submodule(M);
    if (S.rows() == 0) {
      auto phi = brauer_character(*G, red, M, classes);
      if (std::find(chars.begin(), chars.end(), phi) == chars.end()) {
        chars.push_back(std::move(phi));
        simples.push_back(std::move(M));
      }
      continue;
    }
    auto [sub, quo] = split(F, M, std::move(S));
    work.push_back(std::move(sub));
    std::push_heap(work.begin(), work.end(), by_dim);
    work.push_back(std::move(quo));
    std::push_heap(work.begin(), work.end(), by_dim);
  }
  if (simples.size() != classes.size())
    throw Error(ErrorKind::SplitFailure, "found " + std::to_string(simples.size()) + " simple modules, expected " +
                                             std::to_string(classes.size()));

  // canonical order, matching the ordinary table: trivial first, then degree, then values
  std::vector<std::size_t> order(simples.size());
  std::iota(order.begin(), order.end(), 0);
  const std::uint64_t e = G->exponent();
  auto trivial = [&](std::size_t i) {
    return std::all_of(chars[i].begin(), chars[i].end(), [](const CycNum& v) { return v.is_one(); });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (trivial(a) != trivial(b)) return trivial(a);
    if (simples[a].dim != simples[b].dim) return simples[a].dim < simples[b].dim;
    for (std::size_t c = 0; c < chars[a].size(); ++c) {
      int r = CycNum::compare_at(chars[a][c], chars[b][c], e);
      if (r != 0) return r < 0;
    }
    return false;
  });
  std::vector<Module> out;
  for (auto i : order) out.push_back(std::move(simples[i]));
  return out;
}

BrauerTable brauer_characters(const GroupPtr& G, const std::vector<Module>& mods, const IdealReduction& red) {
  BrauerTable BT;
  BT.group = G;
  BT.p = red.p();
  BT.pregular_classes = p_regular_classes(*G, red.p());
  if (mods.size() != BT.pregular_classes.size())
    throw Error(ErrorKind::MalformedInput, "module list is not complete");
  for (const auto& M : mods) {
    BT.ibr.push_back(brauer_character(*G, red, M, BT.pregular_classes));
    BT.degrees.push_back(M.dim);
  }
  return BT;
}

BrauerTable brauer_table(const GroupPtr& G, const IdealReduction& red, std::uint64_t seed, std::size_t cap) {
  return brauer_characters(G, modular_irreducibles(G, red, seed, cap), red);
}

DecompositionMatrix decomposition_matrix(const CharacterTable& T, const BrauerTable& BT, const BlockPartition& P) {
  if (T.group() != BT.group) throw Error(ErrorKind::MalformedInput, "tables belong to different groups");
  if (P.p != BT.p) throw Error(ErrorKind::MalformedInput, "block partition and Brauer table use different primes");
  const std::size_t l = BT.ibr.size(), k = T.size();
  // Solve Y^t D^t = X^t, Y = ibr (l x l), X = ordinary rows on p-regular classes.
  std::vector<std::vector<CycNum>> a(l, std::vector<CycNum>(l + k));
  for (std::size_t c = 0; c < l; ++c) {
    for (std::size_t i = 0; i < l; ++i) a[c][i] = BT.ibr[i][c];
    for (std::size_t r = 0; r < k; ++r) a[c][l + r] = T.value(r, BT.pregular_classes[c]);
  }
  for (std::size_t col = 0; col < l; ++col) {
    std::size_t piv = col;
    while (piv < l && a[piv][col].is_zero()) ++piv;
    if (piv == l) throw Error(ErrorKind::NonIntegralSolution, "Brauer table is singular");
    std::swap(a[piv], a[col]);
    CycNum s = a[col][col].inverse();
    for (auto& v : a[col]) v *= s;
    for (std::size_t i = 0; i < l; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      CycNum f = a[i][col];
      for (std::size_t j = col; j < l + k; ++j) a[i][j] -= f * a[col][j];
    }
  }
  DecompositionMatrix D;
  D.d.assign(k, std::vector<long>(l, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < l; ++i) {
      auto q = a[i][l + r].to_rational();
      if (!q || q->get_den() != 1 || *q < 0 || !q->get_num().fits_slong_p())
        throw Error(ErrorKind::NonIntegralSolution, "decomposition number d(" + std::to_string(r) + "," +
                                                        std::to_string(i) + ") = " + a[i][l + r].str());
      D.d[r][i] = q->get_num().get_si();
    }
  D.block_labels = P.block_of;
  D.brauer_blocks.assign(l, 0);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t r = 0; r < k; ++r)
      if (D.d[r][i] != 0) {
        D.brauer_blocks[i] = P.block_of[r];
        break;
      }
  return D;
}

IntMatrix cartan_matrix(const DecompositionMatrix& D) {
  const std::size_t l = D.d.empty() ? 0 : D.d[0].size();
  IntMatrix C(l, std::vector<long>(l, 0));
  for (const auto& row : D.d)
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) C[i][j] += row[i] * row[j];
  return C;
}

IntMatrix submatrix_over(const DecompositionMatrix& D, std::size_t block, const std::vector<std::size_t>& rows_filter) {
  IntMatrix out;
  for (auto r : rows_filter) {
    if (r >= D.d.size() || D.block_labels[r] != block)
      throw Error(ErrorKind::RowOutsideBlock, "row " + std::to_string(r) + " is not in block " + std::to_string(block));
    std::vector<long> row;
    for (std::size_t i = 0; i < D.brauer_blocks.size(); ++i)
      if (D.brauer_blocks[i] == block) row.push_back(D.d[r][i]);
    out.push_back(std::move(row));
  }
  return out;
}

bool is_block_diagonal_splittable(const IntMatrix& M) {
  std::vector<std::size_t> rows, cols;
  const std::size_t nc = M.empty() ? 0 : M[0].size();
  for (std::size_t i = 0; i < M.size(); ++i)
    if (std::any_of(M[i].begin(), M[i].end(), [](long v) { return v != 0; })) rows.push_back(i);
  for (std::size_t j = 0; j < nc; ++j)
    if (std::any_of(M.begin(), M.end(), [&](const auto& r) { return r[j] != 0; })) cols.push_back(j);
  if (rows.empty()) return false;
  // union-find over rows (0..nr) and columns (nr..)
  const std::size_t nr = M.size();
  std::vector<std::size_t> parent(nr + nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto i : rows)
    for (auto j : cols)
      if (M[i][j] != 0) parent[find(i)] = find(nr + j);
  std::size_t root = find(rows[0]);
  for (auto i : rows)
    if (find(i) != root) return true;
  for (auto j : cols)
    if (find(nr + j) != root) return true;
  return false;
}

}  // namespace thetablocks
