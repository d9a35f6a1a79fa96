#include "thetablocks/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

namespace thetablocks {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "FAIL";
    case Status::Vacuous: return "vacuous";
    case Status::HypothesisNotMet: return "hypothesis-not-met";
  }
  return "?";
}

io::json to_json(const Outcome& o) {
  io::json j{{"check", o.check}, {"instance", o.instance}, {"status", to_string(o.status)}, {"assertions", o.assertions}};
  if (!o.detail.empty()) j["detail"] = o.detail;
  if (!o.data.is_null()) j["data"] = o.data;
  return j;
}

namespace {

Outcome start(std::string check, std::string instance) {
  Outcome o;
  o.check = std::move(check);
  o.instance = std::move(instance);
  return o;
}

void fail(Outcome& o, const std::string& why) {
  if (o.status != Status::Fail) o.detail = why;
  o.status = Status::Fail;
}

void finish(Outcome& o, std::size_t tested) {
  if (o.status == Status::Pass && tested == 0) o.status = Status::Vacuous;
}

bool is_central(const CharacterTriple& T) {
  for (Elem n : T.N.members())
    for (Elem g : T.G->generators())
      if (T.G->mul(n, g) != T.G->mul(g, n)) return false;
  return true;
}

// Elements of G conjugate into H.
std::vector<bool> conjugates_of(const FiniteGroup& G, const Subgroup& H) {
  std::vector<bool> mark(G.order(), false);
  for (Elem h : H.members())
    if (!mark[h])
      for (Elem x : G.classes()[G.class_of(h)].members) mark[x] = true;
  return mark;
}

// Some conjugate of A lies inside B.
bool conjugate_into(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  for (Elem g = 0; g < G.order(); ++g) {
    bool inside = true;
    for (Elem a : A.members())
      if (!B.contains(G.conj(a, g))) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

Subgroup product_with_normal(const GroupPtr& G, const Subgroup& D, const Subgroup& N) {
  auto gens = subgroup_generators(D);
  auto ng = subgroup_generators(N);
  gens.insert(gens.end(), ng.begin(), ng.end());
  return generated_subgroup(G, gens);
}

std::uint64_t ppart(std::uint64_t n, unsigned p) { return nt::p_part(n, p); }

bool is_p_power(std::uint64_t n, unsigned p) { return ppart(n, p) == n; }

std::string triple_name(const CharacterTriple& T) {
  return T.G->name() + " N" + std::to_string(T.N.order()) + " theta" + std::to_string(T.theta_row);
}

std::vector<std::vector<std::size_t>> partition_of(const ThetaBlockReport& R) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : R.blocks) out.push_back(b.rows);
  return out;
}

}  // namespace

Instance make_instance(const CharacterTriple& T, unsigned p, IdealChoice choice, std::string name, io::json reproduce) {
  Instance I;
  I.triple = T;
  I.p = p;
  I.choice = choice;
  I.name = (name.empty() ? triple_name(T) : name) + " p=" + std::to_string(p);
  I.reproduce = std::move(reproduce);
  I.report = theta_blocks(T, p, choice);
  return I;
}

Outcome check_vanishing(const Instance& I) {
  const CharacterTriple& T = I.triple;
  const FiniteGroup& G = *T.G;
  const Quotient& Q = I.report.P.Q;
  Outcome o = start("vanishing", I.name);
  std::size_t tested = 0;
  for (const auto& b : I.report.blocks) {
    auto inside = conjugates_of(*Q.group, image(Q, b.defect_group));
    for (std::size_t k = 0; k < G.classes().size(); ++k) {
      Elem g = G.classes()[k].representative;
      if (inside[p_part_of_coset(Q, g, I.p)]) continue;
      for (auto chi : b.rows) {
        ++tested;
        if (!T.TG->value(chi, k).is_zero())
          fail(o, "row " + std::to_string(chi) + " is nonzero at " + G.label(g));
      }
    }
  }
  o.assertions = tested;
  finish(o, tested);
  return o;
}

Outcome check_orthogonality(const CharacterTriple& T, const std::string& name) {
  Outcome o = start("orthogonality", name.empty() ? triple_name(T) : name);
  if (!is_central(T)) {
    o.status = Status::HypothesisNotMet;
    o.detail = "N is not central";
    return o;
  }
  const FiniteGroup& G = *T.G;
  const auto rows = irr_over(*T.TG, T.Ngroup, T.theta);
  auto Q = quotient(T.G, T.N);
  const auto& cls = G.classes();
  std::size_t tested = 0;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j) {
      Elem g = cls[i].representative, h = cls[j].representative;
      if (Q.group->class_of(Q.projection[g]) == Q.group->class_of(Q.projection[h])) continue;
      CycNum s;
      for (auto chi : rows) s += T.TG->value(chi, i) * T.TG->value(chi, G.inverse_class(j));
      ++tested;
      if (!s.is_zero()) fail(o, "sum over " + G.label(g) + ", " + G.label(h) + " is " + s.str());
    }
  std::size_t good = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    Elem g = cls[i].representative;
    if (!is_theta_good(T, g)) continue;
    ++good;
    CycNum s;
    for (auto chi : rows) s += T.TG->value(chi, i) * T.TG->value(chi, i).conj();
    const auto& qc = Q.group->classes()[Q.group->class_of(Q.projection[g])];
    long cent = static_cast<long>(Q.group->order() / qc.members.size());
    ++tested;
    if (s != CycNum(cent)) fail(o, "norm sum at " + G.label(g) + " is " + s.str() + ", expected " + std::to_string(cent));
  }
  o.assertions = tested;
  o.data = {{"rows", rows}, {"theta_good_classes", good}};
  finish(o, tested);
  return o;
}

Outcome check_decomposition(const CharacterTriple& T, unsigned p, bool counterexample, std::uint64_t seed,
                            const std::string& name) {
  Outcome o = start(counterexample ? "decomposition-counterexample" : "decomposition",
                    (name.empty() ? triple_name(T) : name) + " p=" + std::to_string(p));
  if (!counterexample && !is_central(T)) {
    o.status = Status::HypothesisNotMet;
    o.detail = "N is not central";
    return o;
  }
  const auto& TG = *T.TG;
  auto red = reduction_for(TG, p);
  auto BT = brauer_table(T.G, red, seed);
  auto P = p_blocks(TG, p, red);
  auto D = decomposition_matrix(TG, BT, P);
  const auto over = irr_over(TG, T.Ngroup, T.theta);
  io::json mats = io::json::array();
  std::size_t tested = 0, split = 0;
  for (std::size_t b = 0; b < P.blocks.size(); ++b) {
    std::vector<std::size_t> rows;
    for (auto r : P.blocks[b].rows)
      if (std::binary_search(over.begin(), over.end(), r)) rows.push_back(r);
    if (rows.empty()) continue;
    auto M = submatrix_over(D, b, rows);
    bool s = is_block_diagonal_splittable(M);
    ++tested;
    split += s;
    mats.push_back({{"block", b}, {"rows", rows}, {"matrix", io::to_json(M)}, {"splittable", s}});
    if (s && !counterexample) fail(o, "block " + std::to_string(b) + " gives a splittable matrix");
  }
  o.assertions = tested;
  o.data = {{"blocks", P.blocks.size()}, {"matrices", mats}};
  // in counterexample mode the check succeeds when some matrix does split
  if (counterexample && split == 0) fail(o, "no splittable matrix found");
  finish(o, tested);
  return o;
}

Outcome check_height_abelian(const Instance& I) {
  const CharacterTriple& T = I.triple;
  const Quotient& Q = I.report.P.Q;
  Outcome o = start("height", I.name);
  std::size_t met = 0;
  io::json per = io::json::array();
  for (const auto& b : I.report.blocks) {
    bool ext = theta_extends_to(T, b.defect_group);
    io::json e{{"rows", b.rows}, {"defect_order", b.defect_group.order() / T.N.order()}, {"extends", ext}};
    if (ext) {
      ++met;
      std::uint64_t index_p = ppart(T.G->order() / b.defect_group.order(), I.p);
      bool heights = std::all_of(b.rows.begin(), b.rows.end(), [&](std::size_t chi) {
        return ppart(T.TG->degree(chi) / T.degree(), I.p) == index_p;
      });
      bool abelian = is_abelian(image(Q, b.defect_group));
      e["height_zero"] = heights;
      e["abelian"] = abelian;
      if (heights != abelian)
        fail(o, "block with rows starting " + std::to_string(b.rows.front()) + ": heights " +
                    (heights ? "zero" : "nonzero") + " but defect quotient " + (abelian ? "abelian" : "nonabelian"));
    }
    per.push_back(e);
  }
  o.assertions = met;
  o.data = {{"blocks", per}};
  if (o.status == Status::Pass && met == 0) o.status = Status::HypothesisNotMet;
  return o;
}

Outcome check_kB_theta(const Instance& I) {
  Outcome o = start("kb", I.name);
  for (const auto& b : I.report.blocks) {
    std::size_t bound = b.defect_group.order() / I.triple.N.order();
    ++o.assertions;
    if (b.rows.size() > bound)
      fail(o, std::to_string(b.rows.size()) + " characters exceed |D/N| = " + std::to_string(bound));
  }
  finish(o, o.assertions);
  return o;
}

Outcome check_gwnt_direction(const Instance& I) {
  const CharacterTriple& T = I.triple;
  Outcome o = start("gwnt", I.name);
  for (auto chi : I.report.S.over_theta)
    if ((T.TG->degree(chi) / T.degree()) % I.p == 0) {
      o.status = Status::Vacuous;
      o.detail = "p divides chi(1)/theta(1) for row " + std::to_string(chi);
      return o;
    }
  const Quotient& Q = I.report.P.Q;
  o.assertions = 1;
  if (!is_abelian(sylow_subgroup(Q.group, I.p))) fail(o, "Sylow subgroup of G/N is not abelian");
  return o;
}

std::vector<Outcome> check_block_properties(const Instance& I) {
  const CharacterTriple& T = I.triple;
  const FiniteGroup& G = *T.G;
  const auto& R = I.report;
  const Quotient& Q = R.P.Q;
  auto PG = p_blocks(*T.TG, I.p, I.choice);
  const auto over = R.S.over_theta;

  Outcome a = start("containment", I.name);
  std::vector<std::size_t> ordinary(R.blocks.size());
  for (std::size_t i = 0; i < R.blocks.size(); ++i) {
    const auto& b = R.blocks[i];
    std::size_t B = PG.block_of[b.rows.front()];
    ordinary[i] = B;
    for (auto r : b.rows) {
      ++a.assertions;
      if (PG.block_of[r] != B) fail(a, "rows of one theta-block lie in different blocks");
    }
    ++a.assertions;
    Subgroup DN = product_with_normal(T.G, PG.blocks[B].defect_group, T.N);
    if (!conjugate_into(G, b.defect_group, DN)) fail(a, "D_theta is not contained in a conjugate of DN");
  }
  finish(a, a.assertions);

  Outcome c = start("central", I.name);
  if (is_central(T)) {
    for (std::size_t i = 0; i < R.blocks.size(); ++i) {
      const auto& b = R.blocks[i];
      std::vector<std::size_t> in_B;
      for (auto r : PG.blocks[ordinary[i]].rows)
        if (std::binary_search(over.begin(), over.end(), r)) in_B.push_back(r);
      c.assertions += 2;
      if (in_B != b.rows) fail(c, "theta-block differs from Irr(B|theta)");
      Subgroup DN = product_with_normal(T.G, PG.blocks[ordinary[i]].defect_group, T.N);
      if (!subgroups_conjugate(G, b.defect_group, DN)) fail(c, "D_theta is not conjugate to DN");
    }
  }
  finish(c, c.assertions);

  Outcome e = start("extendible", I.name);
  auto ext = theta_extensions(T, Subgroup::whole(T.G));
  if (!ext.rows.empty()) {
    ClassFunction chi0;
    for (const auto& cls : G.classes())
      chi0.push_back(ext.table->at(ext.rows[0], static_cast<Elem>(cls.representative)));
    auto chi_row = T.TG->find_row(chi0);
    auto TQ = character_table(Q.group);
    auto PQ = p_blocks(TQ, I.p, I.choice);
    for (const auto& Bbar : PQ.blocks) {
      std::vector<std::size_t> rows;
      for (auto g : Bbar.rows) {
        auto r = T.TG->find_row(product(inflate(G, Q, TQ.row(g)), T.TG->row(*chi_row)));
        if (r) rows.push_back(*r);
      }
      std::sort(rows.begin(), rows.end());
      ++e.assertions;
      auto it = std::find_if(R.blocks.begin(), R.blocks.end(), [&](const ThetaBlock& b) { return b.rows == rows; });
      if (it == R.blocks.end()) {
        fail(e, "Gallagher image of a block of G/N is not a theta-block");
        continue;
      }
      ++e.assertions;
      if (!subgroups_conjugate(*Q.group, image(Q, it->defect_group), Bbar.defect_group))
        fail(e, "D_theta/N is not conjugate to the defect group of the block of G/N");
    }
  }
  finish(e, e.assertions);

  Outcome d = start("p-quotient", I.name);
  if (is_p_power(Q.group->order(), I.p)) {
    d.assertions = 2;
    if (R.blocks.size() != 1 || R.blocks[0].rows != over) fail(d, "Irr(G|theta) is not a single theta-block");
    else if (R.blocks[0].defect_group.order() != G.order()) fail(d, "D_theta is not G");
  }
  finish(d, d.assertions);

  Outcome s = start("singletons", I.name);
  if (Q.group->order() % I.p != 0 && !ext.rows.empty()) {
    for (const auto& b : R.blocks) {
      ++s.assertions;
      if (b.rows.size() != 1) fail(s, "theta-block of size " + std::to_string(b.rows.size()));
    }
  }
  finish(s, s.assertions);
  return {a, c, e, d, s};
}

Outcome check_well_defined(const CharacterTriple& T, unsigned p, std::uint64_t seed, const std::string& name) {
  const FiniteGroup& G = *T.G;
  Outcome o = start("well-defined", (name.empty() ? triple_name(T) : name) + " p=" + std::to_string(p));
  std::mt19937_64 rng(seed);

  auto P0 = build_projective_rep(T);
  auto R0 = theta_blocks(T, P0, p);
  const Quotient& Q = P0.Q;
  const std::size_t q = Q.group->order();

  std::uint64_t k0 = representation_group(T, P0).k;
  std::uint64_t ord = G.order() * std::lcm(k0, std::uint64_t{4}) <= kDefaultOrderCap ? 4 : 2;
  std::vector<CycNum> per(q);
  for (auto& v : per) v = CycNum::root_of_unity(ord, static_cast<std::int64_t>(rng() % ord));
  per[Q.projection[0]] = CycNum(1);
  std::vector<CycNum> xi(G.order());
  for (Elem g = 0; g < G.order(); ++g) xi[g] = per[Q.projection[g]];
  auto P1 = twist_projective_rep(T, P0, xi);

  ProjRepOptions alt;
  alt.transversal.assign(q, 0);
  std::vector<std::vector<Elem>> cosets(q);
  for (Elem g = 0; g < G.order(); ++g) cosets[Q.projection[g]].push_back(g);
  for (std::size_t c = 0; c < q; ++c)
    if (c != Q.projection[0]) alt.transversal[c] = cosets[c][rng() % cosets[c].size()];
  auto P2 = build_projective_rep(T, alt);

  io::json ks = io::json::array({R0.R.k});
  for (const ProjRep* P : {&P1, &P2}) {
    auto R = theta_blocks(T, *P, p);
    ks.push_back(R.R.k);
    ++o.assertions;
    if (partition_of(R) != partition_of(R0)) {
      fail(o, "partition differs for the " + P->construction + " representation");
      continue;
    }
    for (std::size_t i = 0; i < R.blocks.size(); ++i) {
      ++o.assertions;
      if (!subgroups_conjugate(*Q.group, image(Q, R.blocks[i].defect_group), image(Q, R0.blocks[i].defect_group)))
        fail(o, "defect groups are not G/N-conjugate");
    }
  }
  o.data = {{"Z_orders", ks}, {"xi_order", ord}, {"transversal", alt.transversal}};
  return o;
}

Outcome check_ideal_invariance(const GroupPtr& G, unsigned p, const std::string& name) {
  Outcome o = start("ideal-choice", (name.empty() ? G->name() : name) + " p=" + std::to_string(p));
  auto T = character_table(G);
  auto choices = IdealReduction::all_choices(p, T.conductor());
  auto P0 = p_blocks(T, p, choices.front());
  for (std::size_t i = 1; i < choices.size(); ++i) {
    auto P = p_blocks(T, p, choices[i]);
    ++o.assertions;
    if (P.blocks.size() != P0.blocks.size()) {
      fail(o, "block count depends on the ideal");
      continue;
    }
    for (std::size_t b = 0; b < P.blocks.size(); ++b) {
      o.assertions += 2;
      if (P.blocks[b].rows != P0.blocks[b].rows) fail(o, "partition depends on the ideal");
      if (!subgroups_conjugate(*G, P.blocks[b].defect_group, P0.blocks[b].defect_group))
        fail(o, "defect groups depend on the ideal");
    }
  }
  o.data = {{"choices", choices.size()}};
  finish(o, o.assertions);
  return o;
}

Outcome check_modular_infrastructure(const GroupPtr& G, unsigned p, std::uint64_t seed) {
  Outcome o = start("infrastructure", G->name() + " p=" + std::to_string(p));
  auto T = character_table(G);
  const auto& cls = G->classes();
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j) {
      ++o.assertions;
      if (inner_product(*G, T.row(i), T.row(j)) != CycNum(i == j ? 1L : 0L)) fail(o, "row orthogonality");
    }
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t b = 0; b < cls.size(); ++b) {
      CycNum s;
      for (std::size_t i = 0; i < T.size(); ++i) s += T.value(i, a) * T.value(i, b).conj();
      ++o.assertions;
      long expect = a == b ? static_cast<long>(G->order() / cls[a].members.size()) : 0L;
      if (s != CycNum(expect)) fail(o, "column orthogonality");
    }
  if (G->order() > kModularCap) {
    o.detail = "modular part skipped above the modular cap";
    return o;
  }
  auto red = reduction_for(T, p);
  auto BT = brauer_table(G, red, seed);
  auto P = p_blocks(T, p, red);
  auto D = decomposition_matrix(T, BT, P);
  const std::size_t l = BT.ibr.size();
  for (std::size_t i = 0; i < l; ++i) {
    ++o.assertions;
    if (BT.ibr[i][0] != CycNum(static_cast<long>(BT.degrees[i]))) fail(o, "Brauer value at 1 is not the degree");
  }
  for (std::size_t r = 0; r < T.size(); ++r)
    for (std::size_t c = 0; c < l; ++c) {
      CycNum s;
      for (std::size_t i = 0; i < l; ++i) s += CycNum(D.d[r][i]) * BT.ibr[i][c];
      ++o.assertions;
      if (s != T.value(r, BT.pregular_classes[c])) fail(o, "decomposition equation");
    }
  for (std::size_t i = 0; i < l; ++i) {
    std::uint64_t pdeg = 0;
    for (std::size_t r = 0; r < T.size(); ++r) {
      pdeg += D.d[r][i] * T.degree(r);
      if (D.d[r][i] != 0) {
        ++o.assertions;
        if (P.block_of[r] != D.brauer_blocks[i]) fail(o, "decomposition number across blocks");
      }
    }
    ++o.assertions;
    if (pdeg < BT.degrees[i]) fail(o, "projective degree below the Brauer degree");
  }
  auto C = cartan_matrix(D);
  IntMatrix DtD(l, std::vector<long>(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t r = 0; r < T.size(); ++r) DtD[i][j] += D.d[r][i] * D.d[r][j];
  ++o.assertions;
  if (C != DtD) fail(o, "C != D^t D");
  for (std::size_t i = 0; i < l; ++i) {
    ++o.assertions;
    if (C[i][i] <= 0 || C[i] != std::vector<long>([&] {
          std::vector<long> col;
          for (std::size_t j = 0; j < l; ++j) col.push_back(C[j][i]);
          return col;
        }()))
      fail(o, "Cartan matrix not symmetric with positive diagonal");
  }
  for (std::size_t b = 0; b < P.blocks.size(); ++b) {
    IntMatrix Cb;
    for (std::size_t i = 0; i < l; ++i) {
      if (D.brauer_blocks[i] != b) continue;
      std::vector<long> row;
      for (std::size_t j = 0; j < l; ++j)
        if (D.brauer_blocks[j] == b) row.push_back(C[i][j]);
      Cb.push_back(row);
    }
    ++o.assertions;
    if (Cb.empty() || is_block_diagonal_splittable(Cb)) fail(o, "Cartan block " + std::to_string(b) + " splits");
  }
  o.data = {{"simples", l}, {"blocks", P.blocks.size()}};
  return o;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"vanishing", "orthogonality", "decomposition", "height", "kb",
                                               "gwnt",      "properties",    "well-defined",  "ideal-choice"};
  return ids;
}

std::vector<Outcome> run_corpus(const std::vector<io::TripleSpec>& corpus, const CorpusOptions& opt) {
  for (const auto& c : opt.checks)
    if (std::find(check_ids().begin(), check_ids().end(), c) == check_ids().end())
      throw Error(ErrorKind::MalformedInput, "unknown check '" + c + "'");
  auto want = [&](const std::string& id) {
    return opt.checks.empty() || std::find(opt.checks.begin(), opt.checks.end(), id) != opt.checks.end();
  };
  std::vector<Outcome> out;
  std::set<std::pair<std::string, unsigned>> ideal_done;
  for (const auto& spec : corpus) {
    auto T = io::resolve(spec, opt.cap);
    std::vector<unsigned> primes = spec.primes;
    if (primes.empty())
      for (unsigned p : {2u, 3u, 5u, 7u})
        if (T.G->order() % p == 0) primes.push_back(p);
    if (want("orthogonality") && !spec.counterexample) out.push_back(check_orthogonality(T, spec.name));
    for (unsigned p : primes) {
      io::json repro{{"triple", io::to_json(spec)},
                     {"p", p},
                     {"seed", opt.seed},
                     {"ideal_choice", {opt.choice.factor, opt.choice.root}},
                     {"group", io::to_json(*T.G)}};
      std::vector<Outcome> here;
      if (want("decomposition") && T.G->order() <= kModularCap)
        here.push_back(check_decomposition(T, p, spec.counterexample, opt.seed, spec.name));
      if (!spec.counterexample) {
        auto I = make_instance(T, p, opt.choice, spec.name, repro);
        if (want("vanishing")) here.push_back(check_vanishing(I));
        if (want("height")) here.push_back(check_height_abelian(I));
        if (want("kb")) here.push_back(check_kB_theta(I));
        if (want("gwnt")) here.push_back(check_gwnt_direction(I));
        if (want("properties"))
          for (auto& o : check_block_properties(I)) here.push_back(std::move(o));
        if (want("well-defined")) here.push_back(check_well_defined(T, p, opt.seed, spec.name));
      }
      if (want("ideal-choice") && ideal_done.emplace(T.G->name(), p).second)
        here.push_back(check_ideal_invariance(T.G, p));
      for (auto& o : here) {
        if (o.status == Status::Fail) o.data["reproduce"] = repro;
        out.push_back(std::move(o));
      }
    }
  }
  return out;
}

Summary summarize(const std::vector<Outcome>& outcomes) {
  Summary s;
  for (const auto& o : outcomes) switch (o.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Vacuous: ++s.vacuous; break;
      case Status::HypothesisNotMet: ++s.hypothesis_not_met; break;
    }
  return s;
}

}  // namespace thetablocks
