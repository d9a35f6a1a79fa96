#include "thetablocks/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

namespace thetablocks {
namespace {

using u64 = std::uint64_t;
using Row = std::vector<u64>;

struct ModQ {
  u64 q;
  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 mul(u64 a, u64 b) const { return a * b % q; }
  u64 inv(u64 a) const { return nt::powmod(a, q - 2, q); }
  u64 pow(u64 a, u64 k) const { return nt::powmod(a, k, q); }
};

u64 dixon_prime(u64 order, u64 exponent) {
  double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 q = exponent + 1;; q += exponent)
    if (static_cast<double>(q) > bound && nt::is_prime(q)) return q;
}

// Row-reduce in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& m, const ModQ& F) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    u64 s = F.inv(m[r][c]);
    for (auto& v : m[r]) v = F.mul(v, s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis of {x : A x = 0} for a square matrix A.
std::vector<Row> nullspace(std::vector<Row> a, const ModQ& F) {
  std::size_t n = a.size();
  auto piv = rref(a, F);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Row> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.sub(0, a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (low to high, monic) via reduction to Hessenberg form.
std::vector<u64> charpoly(std::vector<Row> h, const ModQ& F) {
  std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 t = F.inv(h[m][m - 1]);
    for (std::size_t k = m + 1; k < n; ++k) {
      u64 u = F.mul(h[k][m - 1], t);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[k][j] = F.sub(h[k][j], F.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = F.add(h[j][m], F.mul(u, h[j][k]));
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] * prod(h[j][j-1]) p_{i-1}
    std::vector<u64> r(m + 1, 0);
    for (std::size_t j = 0; j < p[m - 1].size(); ++j) {
      r[j + 1] = F.add(r[j + 1], p[m - 1][j]);
      r[j] = F.sub(r[j], F.mul(h[m - 1][m - 1], p[m - 1][j]));
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = F.mul(t, h[i][i - 1]);
      u64 c = F.mul(t, h[i - 1][m - 1]);
      for (std::size_t j = 0; j < p[i - 1].size(); ++j) r[j] = F.sub(r[j], F.mul(c, p[i - 1][j]));
    }
    p[m] = std::move(r);
  }
  return p[n];
}

struct Splitter {
  const FiniteGroup& G;
  ModQ F;
  std::size_t k;
  std::map<std::size_t, std::vector<Row>> cache;

  // M[j][c] = #{x in K_i : class(x^-1 z_c) = j}, z_c the representative of class c.
  const std::vector<Row>& class_matrix(std::size_t i) {
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
    std::vector<Row> m(k, Row(k, 0));
    const auto& cls = G.classes();
    for (std::size_t c = 0; c < k; ++c) {
      Elem z = cls[c].representative;
      for (Elem x : cls[i].members) ++m[G.class_of(G.mul(G.inv(x), z))][c];
    }
    for (auto& row : m)
      for (auto& v : row) v %= F.q;
    return cache.emplace(i, std::move(m)).first->second;
  }

  // Split the invariant subspace spanned by the (RREF) rows of W under class matrix i.
  std::vector<std::vector<Row>> split(const std::vector<Row>& W, const std::vector<std::size_t>& piv, std::size_t i) {
    const auto& M = class_matrix(i);
    std::size_t r = W.size();
    // image of basis vector w under M (acting on column vectors), in W-coordinates
    std::vector<Row> R(r, Row(r, 0));  // R[a][b]: coefficient of W[b] in M W[a]
    for (std::size_t a = 0; a < r; ++a) {
      Row img(k, 0);
      for (std::size_t j = 0; j < k; ++j) {
        u64 s = 0;
        for (std::size_t c = 0; c < k; ++c) s = (s + M[j][c] * W[a][c]) % F.q;
        img[j] = s;
      }
      for (std::size_t b = 0; b < r; ++b) R[a][b] = img[piv[b]];
    }
    // eigenvectors v of the action: v R = lambda v (row-vector convention on coordinates)
    std::vector<Row> Rt(r, Row(r, 0));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) Rt[b][a] = R[a][b];
    auto cp = charpoly(Rt, F);
    std::vector<std::vector<Row>> parts;
    std::size_t total = 0;
    for (u64 lam = 0; lam < F.q && total < r; ++lam) {
      u64 val = 0;
      for (std::size_t d = cp.size(); d-- > 0;) val = F.add(F.mul(val, lam), cp[d]);
      if (val != 0) continue;
      auto A = Rt;
      for (std::size_t a = 0; a < r; ++a) A[a][a] = F.sub(A[a][a], lam);
      auto ns = nullspace(A, F);
      std::vector<Row> part;
      for (const auto& coord : ns) {
        Row v(k, 0);
        for (std::size_t b = 0; b < r; ++b)
          if (coord[b])
            for (std::size_t c = 0; c < k; ++c) v[c] = F.add(v[c], F.mul(coord[b], W[b][c]));
        part.push_back(std::move(v));
      }
      total += part.size();
      parts.push_back(std::move(part));
    }
    if (total != r) throw Error(ErrorKind::MalformedInput, "class matrix not diagonalizable over the Dixon prime");
    return parts;
  }
};

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> chars, std::uint64_t dixon_prime)
    : group_(std::move(group)), chars_(std::move(chars)), q_(dixon_prime) {
  for (const auto& row : chars_) {
    auto d = row[0].to_rational();
    if (!d || d->get_den() != 1 || *d <= 0) throw Error(ErrorKind::MalformedInput, "character degree is not a positive integer");
    degrees_.push_back(d->get_num().get_ui());
  }
}

std::optional<std::size_t> CharacterTable::find_row(const ClassFunction& f) const {
  for (std::size_t i = 0; i < chars_.size(); ++i)
    if (chars_[i] == f) return i;
  return std::nullopt;
}

CharacterTable character_table(const GroupPtr& G, std::size_t cap) {
  if (G->order() > cap) throw Error(ErrorKind::OrderCapExceeded, "group " + G->name() + " exceeds the order cap");
  const auto& cls = G->classes();
  const std::size_t k = cls.size();
  const u64 order = G->order(), e = G->exponent();
  const u64 q = dixon_prime(order, e);
  ModQ F{q};

  Splitter S{*G, F, k, {}};
  struct Pending {
    std::vector<Row> basis;
    std::size_t next_class;
  };
  std::vector<Row> full(k, Row(k, 0));
  for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
  std::vector<Pending> todo{{full, 1}};
  std::vector<Row> eigvecs;
  while (!todo.empty()) {
    Pending cur = std::move(todo.back());
    todo.pop_back();
    if (cur.basis.size() == 1) {
      eigvecs.push_back(cur.basis[0]);
      continue;
    }
    if (cur.next_class >= k) throw Error(ErrorKind::MalformedInput, "class matrices failed to separate characters");
    auto piv = rref(cur.basis, F);
    auto parts = S.split(cur.basis, piv, cur.next_class);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) todo.push_back({std::move(*it), cur.next_class + 1});
  }
  if (eigvecs.size() != k) throw Error(ErrorKind::MalformedInput, "wrong number of irreducible characters");

  const u64 g = nt::primitive_root(q);
  const u64 z = F.pow(g, (q - 1) / e);  // corresponds to zeta_e
  std::vector<ClassFunction> chars;
  for (auto& v : eigvecs) {
    // scale so omega(identity class) = 1
    u64 s = F.inv(v[0]);
    for (auto& x : v) x = F.mul(x, s);
    u64 denom = 0;
    for (std::size_t c = 0; c < k; ++c)
      denom = F.add(denom, F.mul(F.mul(v[c], v[G->inverse_class(c)]), F.inv(cls[c].size() % q)));
    u64 d2 = F.mul(order % q, F.inv(denom));
    u64 deg = 0;
    while (deg * deg % q != d2) {
      ++deg;
      if (deg > q / 2) throw Error(ErrorKind::MalformedInput, "degree recovery failed");
    }
    // chi(x_K) mod q
    Row chi(k);
    for (std::size_t c = 0; c < k; ++c) chi[c] = F.mul(F.mul(v[c], deg % q), F.inv(cls[c].size() % q));
    ClassFunction row(k);
    for (std::size_t c = 0; c < k; ++c) {
      Elem x = cls[c].representative;
      u64 o = G->element_order(x);
      u64 zo = F.pow(z, e / o);
      u64 zo_inv = F.inv(zo);
      u64 o_inv = F.inv(o % q);
      std::vector<u64> chi_pow(o);
      Elem y = 0;
      for (u64 l = 0; l < o; ++l) {
        chi_pow[l] = chi[G->class_of(y)];
        y = G->mul(y, x);
      }
      std::map<std::int64_t, Rational> terms;
      u64 total = 0;
      for (u64 j = 0; j < o; ++j) {
        u64 s = 0, w = F.pow(zo_inv, j), wl = 1;
        for (u64 l = 0; l < o; ++l) {
          s = F.add(s, F.mul(chi_pow[l], wl));
          wl = F.mul(wl, w);
        }
        u64 m = F.mul(s, o_inv);
        if (m > deg) throw Error(ErrorKind::MalformedInput, "eigenvalue multiplicity out of range");
        if (m) terms[static_cast<std::int64_t>(j)] = Rational(static_cast<long>(m));
        total += m;
      }
      if (total != deg) throw Error(ErrorKind::MalformedInput, "eigenvalue multiplicities do not sum to the degree");
      row[c] = CycNum::from_exponents(o, terms);
    }
    chars.push_back(std::move(row));
  }

  std::sort(chars.begin(), chars.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    auto triv = [](const ClassFunction& r) {
      return std::all_of(r.begin(), r.end(), [](const CycNum& x) { return x.is_one(); });
    };
    bool ta = triv(a), tb = triv(b);
    if (ta != tb) return ta;
    auto da = *a[0].to_rational(), db = *b[0].to_rational();
    if (da != db) return da < db;
    for (std::size_t c = 0; c < a.size(); ++c) {
      int r = CycNum::compare_at(a[c], b[c], e);
      if (r != 0) return r < 0;
    }
    return false;
  });

  CharacterTable T(G, std::move(chars), q);
  // exact orthogonality; a failure here is an internal error
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      CycNum ip = inner_product(*G, T.row(i), T.row(j));
      if (ip != CycNum(i == j ? 1 : 0)) throw Error(ErrorKind::MalformedInput, "computed table fails orthogonality");
    }
  return T;
}

ClassFunction central_character(const CharacterTable& T, std::size_t row) {
  const auto& cls = T.group()->classes();
  ClassFunction out(cls.size());
  Rational deg(static_cast<long>(T.degree(row)));
  for (std::size_t c = 0; c < cls.size(); ++c)
    out[c] = T.value(row, c) * CycNum(Rational(static_cast<long>(cls[c].size())) / deg);
  return out;
}

CycNum inner_product(const FiniteGroup& G, const ClassFunction& a, const ClassFunction& b) {
  const auto& cls = G.classes();
  CycNum s;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    s += CycNum(static_cast<long>(cls[c].size())) * a[c] * b[c].conj();
  }
  return s * CycNum(Rational(1, static_cast<long>(G.order())));
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] * b[c];
  return out;
}

ClassFunction conj(const ClassFunction& a) {
  ClassFunction out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c].conj();
  return out;
}

ClassFunction restrict_character(const FiniteGroup& G, const ClassFunction& chi, const SubgroupGroup& H) {
  const auto& hc = H.group->classes();
  ClassFunction out(hc.size());
  for (std::size_t c = 0; c < hc.size(); ++c) out[c] = chi[G.class_of(H.embed[hc[c].representative])];
  return out;
}

ClassFunction restrict_character(const CharacterTable& T, std::size_t row, const SubgroupGroup& H) {
  return restrict_character(*T.group(), T.row(row), H);
}

std::vector<Rational> restriction_multiplicities(const CharacterTable& TG, const SubgroupGroup& N, const ClassFunction& theta) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < TG.size(); ++i) {
    auto ip = inner_product(*N.group, restrict_character(TG, i, N), theta).to_rational();
    if (!ip) throw Error(ErrorKind::MalformedInput, "inner product is not rational");
    out.push_back(*ip);
  }
  return out;
}

std::vector<std::size_t> irr_over(const CharacterTable& TG, const SubgroupGroup& N, const ClassFunction& theta) {
  Subgroup sub(TG.group(), N.embed);
  if (!is_normal(*TG.group(), sub)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  auto mult = restriction_multiplicities(TG, N, theta);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] != 0) rows.push_back(i);
  return rows;
}

bool is_invariant(const FiniteGroup& G, const SubgroupGroup& N, const ClassFunction& theta) {
  const FiniteGroup& H = *N.group;
  std::vector<long> local(G.order(), -1);
  for (std::size_t i = 0; i < N.embed.size(); ++i) local[N.embed[i]] = static_cast<long>(i);
  for (Elem g : G.generators())
    for (std::size_t i = 0; i < N.embed.size(); ++i) {
      long y = local[G.conj(N.embed[i], g)];
      if (y < 0) return false;
      if (theta[H.class_of(static_cast<Elem>(i))] != theta[H.class_of(static_cast<Elem>(y))]) return false;
    }
  return true;
}

ClassFunction inflate(const FiniteGroup& G, const Quotient& Q, const ClassFunction& f) {
  const auto& cls = G.classes();
  ClassFunction out(cls.size());
  for (std::size_t c = 0; c < cls.size(); ++c) out[c] = f[Q.group->class_of(Q.projection[cls[c].representative])];
  return out;
}

}  // namespace thetablocks
