#include "thetablocks/blocks.hpp"

#include <algorithm>
#include <map>

#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

namespace thetablocks {

IdealReduction reduction_for(const CharacterTable& T, unsigned p, IdealChoice choice) {
  return IdealReduction(p, T.conductor(), choice);
}

unsigned block_defect(const CharacterTable& T, unsigned p, const std::vector<std::size_t>& rows) {
  unsigned d = 0;
  for (auto r : rows) d = std::max(d, nt::valuation(T.group()->order() / T.degree(r), p));
  return d;
}

FiniteField::Elem idempotent_coefficient(const CharacterTable& T, const IdealReduction& red,
                                         const std::vector<std::size_t>& rows, std::size_t k) {
  const FiniteGroup& G = *T.group();
  std::size_t kinv = G.inverse_class(k);
  CycNum s;
  for (auto r : rows) s += CycNum(static_cast<long>(T.degree(r))) * T.value(r, kinv);
  s *= CycNum(Rational(1, static_cast<long>(nt::p_part(G.order(), red.p()))));
  if (!s.is_integral()) return 0;
  return red.reduce(s);
}

DefectData defect_group(const CharacterTable& T, const IdealReduction& red, const std::vector<std::size_t>& rows,
                        const std::vector<FiniteField::Elem>& lambda, unsigned defect) {
  const GroupPtr& G = T.group();
  const auto& cls = G->classes();
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (lambda[k] == 0) continue;
    if (idempotent_coefficient(T, red, rows, k) == 0) continue;
    Subgroup D = sylow_subgroup(centralizer(G, cls[k].representative), red.p());
    std::uint64_t expect = 1;
    for (unsigned i = 0; i < defect; ++i) expect *= red.p();
    if (D.order() != expect)
      throw Error(ErrorKind::DefectMismatch, "defect class " + std::to_string(k) + " gives a defect group of order " +
                                                 std::to_string(D.order()) + ", expected " + std::to_string(expect));
    return {k, std::move(D)};
  }
  throw Error(ErrorKind::NoDefectClass, "block has no defect class");
}

BlockPartition p_blocks(const CharacterTable& T, unsigned p, const IdealReduction& red) {
  if (red.p() != p) throw Error(ErrorKind::MalformedInput, "reduction prime does not match p");
  if (red.conductor() % T.conductor() != 0)
    throw Error(ErrorKind::ConductorMismatch, "reduction conductor does not cover the table conductor");
  const std::size_t k = T.group()->classes().size();
  std::map<std::vector<FiniteField::Elem>, std::size_t> index;
  BlockPartition P;
  P.p = p;
  P.choice = red.choice();
  P.block_of.assign(T.size(), 0);
  for (std::size_t r = 0; r < T.size(); ++r) {
    ClassFunction w = central_character(T, r);
    std::vector<FiniteField::Elem> lam(k);
    for (std::size_t c = 0; c < k; ++c) lam[c] = red.reduce(w[c]);
    auto [it, fresh] = index.emplace(lam, P.blocks.size());
    if (fresh) {
      Block b;
      b.p = p;
      b.lambda = lam;
      P.blocks.push_back(std::move(b));
    }
    P.blocks[it->second].rows.push_back(r);
    P.block_of[r] = it->second;
  }
  for (auto& b : P.blocks) {
    b.defect = block_defect(T, p, b.rows);
    auto dd = defect_group(T, red, b.rows, b.lambda, b.defect);
    b.defect_class = dd.defect_class;
    b.defect_group = std::move(dd.defect_group);
  }
  P.principal = P.block_of[0];
  return P;
}

BlockPartition p_blocks(const CharacterTable& T, unsigned p, IdealChoice choice) {
  return p_blocks(T, p, reduction_for(T, p, choice));
}

std::size_t mu_twist_block(const CharacterTable& T, const BlockPartition& P, std::size_t block, std::size_t mu) {
  if (!T.is_linear(mu)) throw Error(ErrorKind::NotLinear, "row " + std::to_string(mu) + " is not a linear character");
  const Block& B = P.blocks.at(block);
  std::vector<std::size_t> image;
  for (auto r : B.rows) {
    auto row = T.find_row(product(T.row(mu), T.row(r)));
    if (!row) throw Error(ErrorKind::MalformedInput, "product with a linear character is not irreducible");
    image.push_back(*row);
  }
  std::sort(image.begin(), image.end());
  std::size_t target = P.block_of[image.front()];
  if (P.blocks[target].rows != image)
    throw Error(ErrorKind::MalformedInput, "twisted rows do not form a block");
  if (!subgroups_conjugate(*T.group(), B.defect_group, P.blocks[target].defect_group))
    throw Error(ErrorKind::DefectMismatch, "twisted block has non-conjugate defect groups");
  return target;
}

DominatedBlockReport dominated_block_data(const GroupPtr& G, const Subgroup& Z, unsigned p) {
  std::vector<Elem> zp, kp;
  for (Elem z : Z.members()) {
    std::uint64_t o = G->element_order(z);
    if (nt::p_part(o, p) == o) zp.push_back(z);
    if (o % p != 0) kp.push_back(z);
  }
  Subgroup Zp(G, zp), K(G, kp);
  if (generated_subgroup(G, zp).order() != zp.size() || generated_subgroup(G, kp).order() != kp.size() ||
      zp.size() * kp.size() != Z.order())
    throw Error(ErrorKind::ShapeViolation, "Z is not the direct product of its p-part and p'-part");
  for (Elem z : zp)
    for (Elem g : G->generators())
      if (G->mul(z, g) != G->mul(g, z)) throw Error(ErrorKind::ShapeViolation, "the p-part of Z is not central");
  if (!is_normal(*G, K)) throw Error(ErrorKind::ShapeViolation, "the p'-part of Z is not normal");

  auto T = character_table(G);
  auto Q = quotient(G, Z);
  auto TQ = character_table(Q.group);
  auto PG = p_blocks(T, p);
  auto PQ = p_blocks(TQ, p);

  // rows of G containing Z in the kernel, matched with rows of G/Z
  std::vector<std::pair<std::size_t, std::size_t>> lifted;
  for (std::size_t j = 0; j < TQ.size(); ++j) {
    auto row = T.find_row(inflate(*G, Q, TQ.row(j)));
    if (!row) throw Error(ErrorKind::MalformedInput, "inflated character not found");
    lifted.emplace_back(*row, j);
  }
  DominatedBlockReport rep;
  rep.quotient_blocks = PQ.blocks.size();
  for (auto [a, abar] : lifted) {
    for (auto [b, bbar] : lifted) {
      ++rep.pairs_checked;
      bool same_g = PG.block_of[a] == PG.block_of[b];
      bool same_q = PQ.block_of[abar] == PQ.block_of[bbar];
      if (same_g != same_q) rep.partition_match = false;
    }
    Subgroup img = image(Q, PG.blocks[PG.block_of[a]].defect_group);
    if (!subgroups_conjugate(*Q.group, img, PQ.blocks[PQ.block_of[abar]].defect_group)) rep.defect_match = false;
  }
  return rep;
}

}  // namespace thetablocks
