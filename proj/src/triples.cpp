#include "thetablocks/triples.hpp"

#include <algorithm>
#include <numeric>

#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

namespace thetablocks {

const CycNum& CharacterTriple::theta_at(Elem n) const { return theta[Ngroup.group->class_of(local(n))]; }

CharacterTriple make_triple(const GroupPtr& G, const Subgroup& N, std::size_t theta_row) {
  if (!is_normal(*G, N)) throw Error(ErrorKind::NotNormal, "N is not normal in " + G->name());
  CharacterTriple T;
  T.G = G;
  T.N = N;
  T.Ngroup = subgroup_as_group(N);
  T.TG = std::make_shared<const CharacterTable>(character_table(G));
  T.TN = std::make_shared<const CharacterTable>(character_table(T.Ngroup.group));
  if (theta_row >= T.TN->size())
    throw Error(ErrorKind::MalformedInput, "theta row " + std::to_string(theta_row) + " out of range (N has " +
                                               std::to_string(T.TN->size()) + " characters)");
  T.theta_row = theta_row;
  T.theta = T.TN->row(theta_row);
  if (!is_invariant(*G, T.Ngroup, T.theta))
    throw Error(ErrorKind::MalformedInput, "theta row " + std::to_string(theta_row) + " is not G-invariant");
  return T;
}

std::vector<std::size_t> invariant_rows(const GroupPtr& G, const Subgroup& N) {
  auto Ng = subgroup_as_group(N);
  auto TN = character_table(Ng.group);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < TN.size(); ++r)
    if (is_invariant(*G, Ng, TN.row(r))) out.push_back(r);
  return out;
}

Subgroup named_normal_subgroup(const GroupPtr& G, const std::string& name) {
  std::string n = name.rfind("auto:", 0) == 0 ? name.substr(5) : name;
  if (n == "trivial") return Subgroup::trivial(G);
  if (n == "center") return center(G);
  if (n == "derived") return derived_subgroup(G);
  if (n == "derived2") {
    auto D = derived_subgroup(G);
    auto DD = derived_subgroup(subgroup_as_group(D).group);
    std::vector<Elem> m;
    for (Elem x : DD.members()) m.push_back(D.members()[x]);
    return Subgroup(G, m);
  }
  if (n == "whole") return Subgroup::whole(G);
  throw Error(ErrorKind::MalformedInput, "unknown normal subgroup name '" + name + "'");
}

namespace {

bool same(const CycMat& a, const CycMat& b) { return a == b; }

// D(m) for every element m of N (internal indices), from the supplied matrices.
std::vector<CycMat> supplied_rep(const CharacterTriple& T, const std::vector<CycMat>& mats) {
  const FiniteGroup& Ng = *T.Ngroup.group;
  const std::size_t d = T.degree();
  if (mats.size() != Ng.order()) throw Error(ErrorKind::MalformedInput, "need one matrix per element of N");
  for (const auto& m : mats) {
    if (m.size() != d) throw Error(ErrorKind::MalformedInput, "matrix size differs from theta(1)");
    for (const auto& row : m)
      if (row.size() != d) throw Error(ErrorKind::MalformedInput, "matrix is not square");
  }
  for (Elem a = 0; a < Ng.order(); ++a) {
    if (cycla::trace(mats[a]) != T.theta[Ng.class_of(a)])
      throw Error(ErrorKind::MalformedInput, "supplied matrices do not afford theta");
    for (Elem b = 0; b < Ng.order(); ++b)
      if (!same(cycla::mul(mats[a], mats[b]), mats[Ng.mul(a, b)]))
        throw Error(ErrorKind::MalformedInput, "supplied matrices are not a representation");
  }
  return mats;
}

// Induced from a linear character of a subgroup U of index theta(1), when one affords theta.
std::optional<std::vector<CycMat>> monomial_rep(const CharacterTriple& T, std::string& how) {
  const GroupPtr& Ngp = T.Ngroup.group;
  const FiniteGroup& Ng = *Ngp;
  const std::size_t d = T.degree();
  std::vector<Subgroup> cands;
  for (auto& U : all_subgroups(Ngp))
    if (U.order() * d == Ng.order()) cands.push_back(std::move(U));
  auto normal_in_G = [&](const Subgroup& U) {
    std::vector<Elem> m;
    for (Elem u : U.members()) m.push_back(T.Ngroup.embed[u]);
    return is_normal(*T.G, Subgroup(T.G, m));
  };
  std::stable_partition(cands.begin(), cands.end(), normal_in_G);

  for (const auto& U : cands) {
    auto Ug = subgroup_as_group(U);
    auto TU = character_table(Ug.group);
    std::vector<Elem> reps;
    std::vector<bool> covered(Ng.order(), false);
    for (Elem r = 0; r < Ng.order(); ++r) {
      if (covered[r]) continue;
      reps.push_back(r);
      for (Elem u : U.members()) covered[Ng.mul(u, r)] = true;
    }
    for (std::size_t lam = 0; lam < TU.size(); ++lam) {
      if (!TU.is_linear(lam)) continue;
      std::vector<CycMat> D(Ng.order(), CycMat(d, std::vector<CycNum>(d)));
      bool ok = true;
      for (Elem m = 0; m < Ng.order() && ok; ++m) {
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            Elem x = Ng.mul(Ng.mul(reps[i], m), Ng.inv(reps[j]));
            if (U.contains(x)) D[m][i][j] = TU.at(lam, static_cast<Elem>(U.index_of(x)));
          }
        ok = cycla::trace(D[m]) == T.theta[Ng.class_of(m)];
      }
      if (!ok) continue;
      how = "monomial: induced from a linear character of a subgroup of order " + std::to_string(U.order()) +
            (normal_in_G(U) ? " normal in G" : "");
      return D;
    }
  }
  return std::nullopt;
}

// Intertwiner X with D(m) X = X D(t^-1 m t), scaled to determinant 1.
CycMat intertwiner(const CharacterTriple& T, const std::vector<CycMat>& D, Elem t) {
  const FiniteGroup& G = *T.G;
  const std::size_t d = T.degree();
  if (d == 1) return cycla::identity(1);
  CycMat eqs;
  for (Elem mloc : T.Ngroup.group->generators()) {
    Elem m = T.Ngroup.embed[mloc];
    Elem mt = G.mul(G.mul(G.inv(t), m), t);
    const CycMat& A = D[mloc];
    const CycMat& B = D[T.local(mt)];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<CycNum> row(d * d);
        for (std::size_t a = 0; a < d; ++a) row[a * d + j] += A[i][a];
        for (std::size_t b = 0; b < d; ++b) row[i * d + b] -= B[b][j];
        eqs.push_back(std::move(row));
      }
  }
  auto ns = cycla::nullspace(eqs);
  if (ns.size() != 1)
    throw Error(ErrorKind::IntertwinerRankError,
                "intertwiner space has dimension " + std::to_string(ns.size()) + " for " + G.label(t));
  CycMat X(d, std::vector<CycNum>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) X[a][b] = ns[0][a * d + b];
  // Normalize by each nonzero entry in turn until the determinant has a cyclotomic d-th root.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (X[a][b].is_zero()) continue;
      CycMat Y = cycla::scale(X, X[a][b].inverse());
      auto r = cyclo::cyclotomic_root(cycla::det(Y).inverse(), static_cast<unsigned>(d));
      if (r) return cycla::scale(Y, *r);
    }
  throw Error(ErrorKind::NotRealizable, "no determinant-one normalization of the intertwiner for " + G.label(t));
}

std::vector<CycNum> compute_factor_set(const ProjRep& P, const FiniteGroup& G) {
  const std::size_t q = P.Q.group->order();
  std::vector<CycNum> fs(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Elem x = P.transversal[a], y = P.transversal[b];
      CycMat M = cycla::mul(P.matrices[x], P.matrices[y]);
      const CycMat& R = P.matrices[G.mul(x, y)];
      CycNum alpha;
      for (std::size_t i = 0; i < P.degree && alpha.is_zero(); ++i)
        for (std::size_t j = 0; j < P.degree; ++j)
          if (!R[i][j].is_zero()) {
            alpha = M[i][j] * R[i][j].inverse();
            break;
          }
      if (alpha.is_zero() || !same(M, cycla::scale(R, alpha)))
        throw Error(ErrorKind::IntertwinerRankError, "matrices are not projectively multiplicative");
      fs[a * q + b] = alpha;
    }
  return fs;
}

}  // namespace

ProjRep build_projective_rep(const CharacterTriple& T, const ProjRepOptions& options) {
  const FiniteGroup& G = *T.G;
  ProjRep P;
  P.degree = T.degree();
  P.Q = quotient(T.G, T.N);
  const std::size_t q = P.Q.group->order();

  if (options.transversal.empty()) {
    P.transversal = P.Q.coset_rep;
  } else {
    if (options.transversal.size() != q) throw Error(ErrorKind::MalformedInput, "transversal has the wrong size");
    for (std::size_t c = 0; c < q; ++c)
      if (options.transversal[c] >= G.order() || P.Q.projection[options.transversal[c]] != c)
        throw Error(ErrorKind::MalformedInput, "transversal element " + std::to_string(c) + " is in the wrong coset");
    P.transversal = options.transversal;
  }
  if (P.transversal[P.Q.projection[0]] != 0)
    throw Error(ErrorKind::MalformedInput, "the trivial coset must be represented by the identity");

  std::vector<CycMat> D;
  if (options.theta_matrices) {
    D = supplied_rep(T, *options.theta_matrices);
    P.construction = "supplied";
  } else if (P.degree == 1) {
    for (Elem m = 0; m < T.Ngroup.group->order(); ++m) D.push_back({{T.theta[T.Ngroup.group->class_of(m)]}});
    P.construction = "linear";
  } else {
    auto mono = monomial_rep(T, P.construction);
    if (!mono)
      throw Error(ErrorKind::NotRealizable, "theta is not monomial; supply a matrix representation of N");
    D = std::move(*mono);
  }

  std::vector<CycMat> X(q);
  for (std::size_t c = 0; c < q; ++c) X[c] = intertwiner(T, D, P.transversal[c]);
  P.matrices.resize(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    std::size_t c = P.Q.projection[g];
    Elem n = G.mul(g, G.inv(P.transversal[c]));
    P.matrices[g] = cycla::mul(D[T.local(n)], X[c]);
  }
  P.factor_set = compute_factor_set(P, G);
  return P;
}

ProjRep twist_projective_rep(const CharacterTriple& T, const ProjRep& P, const std::vector<CycNum>& xi) {
  const FiniteGroup& G = *T.G;
  if (xi.size() != G.order()) throw Error(ErrorKind::MalformedInput, "xi needs one value per element of G");
  if (!xi[0].is_one()) throw Error(ErrorKind::MalformedInput, "xi(1) must be 1");
  for (Elem g = 0; g < G.order(); ++g) {
    if (xi[g] != xi[P.transversal[P.Q.projection[g]]])
      throw Error(ErrorKind::NotCosetConstant, "xi is not constant on the coset of " + G.label(g));
    if (!xi[g].as_root_of_unity()) throw Error(ErrorKind::MalformedInput, "xi values must be roots of unity");
  }
  ProjRep R = P;
  for (Elem g = 0; g < G.order(); ++g) R.matrices[g] = cycla::scale(P.matrices[g], xi[g]);
  R.factor_set = compute_factor_set(R, G);
  R.construction = P.construction + ", twisted";
  return R;
}

std::vector<std::string> projrep_violations(const CharacterTriple& T, const ProjRep& P) {
  const FiniteGroup& G = *T.G;
  std::vector<std::string> bad;
  for (Elem n : T.N.members())
    if (cycla::trace(P.matrices[n]) != T.theta_at(n)) bad.push_back("trace of P(" + G.label(n) + ") is not theta");
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem y = 0; y < G.order(); ++y)
      if (!same(cycla::mul(P.matrices[x], P.matrices[y]), cycla::scale(P.matrices[G.mul(x, y)], P.alpha(x, y)))) {
        bad.push_back("P(x)P(y) != alpha(x,y) P(xy) for x=" + G.label(x) + ", y=" + G.label(y));
        break;
      }
  const std::size_t q = P.Q.group->order(), one = P.Q.projection[0];
  for (std::size_t a = 0; a < q; ++a)
    if (!P.factor_set[a * q + one].is_one() || !P.factor_set[one * q + a].is_one())
      bad.push_back("alpha is not 1 against N for coset " + std::to_string(a));
  const auto e = static_cast<std::int64_t>(G.order() * P.degree);
  for (const auto& v : P.factor_set)
    if (!v.pow(e).is_one()) {
      bad.push_back("alpha value " + v.str() + " is not a |G|theta(1)-th root of unity");
      break;
    }
  return bad;
}

CycNum RepGroup::lambda_hat(Elem x) const {
  return CycNum::root_of_unity(k, -static_cast<std::int64_t>(z(x)));
}

RepGroup representation_group(const CharacterTriple& T, const ProjRep& P, std::size_t cap) {
  const FiniteGroup& G = *T.G;
  RepGroup R;
  std::vector<RootOfUnity> roots;
  for (const auto& v : P.factor_set) {
    auto r = v.as_root_of_unity();
    if (!r) throw Error(ErrorKind::MalformedInput, "factor set value " + v.str() + " is not a root of unity");
    roots.push_back(*r);
    R.k = std::lcm(R.k, r->order);
  }
  for (const auto& r : roots) R.alpha_exponent.push_back(r.exponent * (R.k / r.order));
  const std::size_t n = G.order() * R.k;
  if (n > cap)
    throw Error(ErrorKind::OrderCapExceeded, "representation group would have order " + std::to_string(n));

  const std::size_t q = P.Q.group->order();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem g = R.pi(x), h = R.pi(y);
      std::uint64_t a = R.z(x) + R.z(y) + R.alpha_exponent[P.Q.projection[g] * q + P.Q.projection[h]];
      table[x][y] = R.pair(G.mul(g, h), a);
    }
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) labels[x] = "(" + G.label(R.pi(x)) + "," + std::to_string(R.z(x)) + ")";
  R.Ghat = FiniteGroup::from_cayley(
      G.name() + "^", std::move(table),
      {GroupOrigin::Kind::TwistedExtension, "representation group of " + G.name() + " over N of order " +
                                                std::to_string(T.N.order()) + ", |Z| = " + std::to_string(R.k)},
      cap, std::move(labels));
  const GroupPtr& H = R.Ghat;

  std::vector<Elem> n1, zs, nh;
  for (Elem m : T.N.members()) {
    n1.push_back(R.pair(m, 0));
    for (std::uint64_t a = 0; a < R.k; ++a) nh.push_back(R.pair(m, a));
  }
  for (std::uint64_t a = 0; a < R.k; ++a) zs.push_back(R.pair(0, a));
  R.N1 = Subgroup(H, n1);
  R.Z = Subgroup(H, zs);
  R.Nhat = Subgroup(H, nh);

  for (const auto& cls : H->classes()) {
    Elem x = cls.representative;
    R.tau.push_back(CycNum::root_of_unity(R.k, static_cast<std::int64_t>(R.z(x))) *
                    cycla::trace(P.matrices[R.pi(x)]));
  }
  if (!inner_product(*H, R.tau, R.tau).is_one())
    throw Error(ErrorKind::MalformedInput, "tau is not irreducible");
  R.nhat_central = true;
  for (Elem x : R.Nhat.members())
    for (Elem g : H->generators()) {
      Elem c = H->conj(x, g);
      if (!R.Nhat.contains(c) || R.z(c) != R.z(x))
        throw Error(ErrorKind::MalformedInput, "lambda-hat is not invariant");
      if (c != x) R.nhat_central = false;
    }
  return R;
}

StandardBijection standard_bijection(const CharacterTriple& T, const RepGroup& R) {
  const FiniteGroup& H = *R.Ghat;
  StandardBijection S;
  S.Qhat = quotient(R.Ghat, R.N1);
  S.TQ = std::make_shared<const CharacterTable>(character_table(S.Qhat.group));
  const CharacterTable& TQ = *S.TQ;
  S.over_theta = irr_over(*T.TG, T.Ngroup, T.theta);

  Elem zbar = S.Qhat.projection[R.pair(0, 1)];
  CycNum lam = CycNum::root_of_unity(R.k, -1);
  for (std::size_t b = 0; b < TQ.size(); ++b)
    if (TQ.at(b, zbar) == CycNum(static_cast<long>(TQ.degree(b))) * lam) S.over_lambda.push_back(b);

  const auto& cls = H.classes();
  for (auto chi : S.over_theta) {
    std::vector<std::size_t> hits;
    for (auto b : S.over_lambda) {
      bool ok = true;
      for (std::size_t c = 0; c < cls.size() && ok; ++c) {
        Elem x = cls[c].representative;
        ok = TQ.at(b, S.Qhat.projection[x]) * R.tau[c] == T.TG->at(chi, R.pi(x));
      }
      if (ok) hits.push_back(b);
    }
    if (hits.size() != 1)
      throw Error(ErrorKind::BijectionFailure,
                  "row " + std::to_string(chi) + " has " + std::to_string(hits.size()) + " candidates for chi*");
    if (TQ.degree(hits[0]) * T.degree() != T.TG->degree(chi))
      throw Error(ErrorKind::BijectionFailure, "degree ratio is not preserved for row " + std::to_string(chi));
    S.image.push_back(hits[0]);
  }
  auto img = S.image;
  std::sort(img.begin(), img.end());
  if (img != S.over_lambda) throw Error(ErrorKind::BijectionFailure, "the map is not onto Irr(Ghat/N | lambda-hat)");
  return S;
}

ThetaBlockReport theta_blocks(const CharacterTriple& T, const ProjRep& P, unsigned p, IdealChoice choice) {
  ThetaBlockReport rep;
  rep.p = p;
  rep.P = P;
  rep.R = representation_group(T, P);
  rep.S = standard_bijection(T, rep.R);
  rep.hat_blocks = p_blocks(*rep.S.TQ, p, choice);

  for (std::size_t b = 0; b < rep.hat_blocks.blocks.size(); ++b) {
    ThetaBlock tb;
    tb.hat_block = b;
    for (std::size_t i = 0; i < rep.S.over_theta.size(); ++i)
      if (rep.hat_blocks.block_of[rep.S.image[i]] == b) tb.rows.push_back(rep.S.over_theta[i]);
    if (tb.rows.empty()) continue;
    std::sort(tb.rows.begin(), tb.rows.end());
    const Subgroup& Dstar = rep.hat_blocks.blocks[b].defect_group;
    Subgroup Dhat = preimage(rep.R.Ghat, rep.S.Qhat, Dstar.members());
    std::vector<Elem> img;
    for (Elem x : Dhat.members()) img.push_back(rep.R.pi(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    tb.defect_group = Subgroup(T.G, std::move(img));
    tb.defect = nt::valuation(tb.defect_group.order() / T.N.order(), p);
    rep.blocks.push_back(std::move(tb));
  }
  std::sort(rep.blocks.begin(), rep.blocks.end(),
            [](const ThetaBlock& a, const ThetaBlock& b) { return a.rows.front() < b.rows.front(); });
  return rep;
}

ThetaBlockReport theta_blocks(const CharacterTriple& T, unsigned p, IdealChoice choice,
                              const ProjRepOptions& options) {
  return theta_blocks(T, build_projective_rep(T, options), p, choice);
}

ExtensionWitness theta_extensions(const CharacterTriple& T, const Subgroup& H) {
  for (Elem n : T.N.members())
    if (!H.contains(n)) throw Error(ErrorKind::MalformedInput, "H does not contain N");
  ExtensionWitness w;
  w.H = subgroup_as_group(H);
  w.table = std::make_shared<const CharacterTable>(character_table(w.H.group));
  for (std::size_t r = 0; r < w.table->size(); ++r) {
    if (w.table->degree(r) != T.degree()) continue;
    bool ok = true;
    for (Elem n : T.N.members())
      if (w.table->at(r, static_cast<Elem>(H.index_of(n))) != T.theta_at(n)) {
        ok = false;
        break;
      }
    if (ok) w.rows.push_back(r);
  }
  return w;
}

bool theta_extends_to(const CharacterTriple& T, const Subgroup& H) { return !theta_extensions(T, H).rows.empty(); }

bool is_theta_good(const CharacterTriple& T, Elem x) {
  const FiniteGroup& G = *T.G;
  auto gens = subgroup_generators(T.N);
  gens.push_back(x);
  Subgroup H = generated_subgroup(T.G, gens);
  auto w = theta_extensions(T, H);
  if (w.rows.empty()) return false;
  std::vector<Elem> dm;
  Elem xinv = G.inv(x);
  for (Elem g = 0; g < G.order(); ++g)
    if (T.N.contains(G.mul(xinv, G.conj(x, g)))) dm.push_back(g);
  auto dgens = subgroup_generators(Subgroup(T.G, dm));
  const FiniteGroup& Hg = *w.H.group;
  for (auto r : w.rows) {
    bool inv = true;
    for (const auto& cls : Hg.classes()) {
      Elem h = w.H.embed[cls.representative];
      for (Elem g : dgens)
        if (w.table->at(r, static_cast<Elem>(H.index_of(G.conj(h, g)))) != w.table->value(r, Hg.class_of(cls.representative))) {
          inv = false;
          break;
        }
      if (!inv) break;
    }
    if (inv) return true;
  }
  return false;
}

}  // namespace thetablocks
