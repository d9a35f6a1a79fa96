#include "thetablocks/io.hpp"

#include <fstream>

#include "thetablocks/error.hpp"

namespace thetablocks::io {

namespace {

json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(ErrorKind::MalformedInput, "expected an integer, got " + j.dump());
}

json elements(const std::vector<Elem>& v) { return json(v); }

}  // namespace

json to_json(const CycNum& x) {
  CycNum m = x.minimized();
  json c = json::object();
  const auto& co = m.coeffs();
  for (std::size_t e = 0; e < co.size(); ++e)
    if (co[e] != 0) c[std::to_string(e)] = json::array({integer(co[e].get_num()), integer(co[e].get_den())});
  return {{"conductor", m.conductor()}, {"coeffs", c}};
}

CycNum cyc_from_json(const json& j) {
  if (j.is_number_integer()) return CycNum(j.get<long>());
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw Error(ErrorKind::MalformedInput, "bad cyclotomic number " + j.dump());
  auto n = j.at("conductor").get<std::uint64_t>();
  if (n == 0) throw Error(ErrorKind::MalformedInput, "conductor must be positive");
  std::map<std::int64_t, Rational> terms;
  for (const auto& [k, v] : j.at("coeffs").items()) {
    if (!v.is_array() || v.size() != 2) throw Error(ErrorKind::MalformedInput, "coefficient must be [num, den]");
    Integer den = integer_from(v[1]);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in " + v.dump());
    Rational q(integer_from(v[0]), den);
    q.canonicalize();
    terms[std::stoll(k)] += q;
  }
  return CycNum::from_exponents(n, terms);
}

json to_json(const FiniteField& F, FiniteField::Elem x) {
  return {{"p", F.characteristic()}, {"f", F.degree()}, {"poly", F.coefficients(x)}};
}

json to_json(const FiniteGroup& G) {
  json j;
  j["name"] = G.name();
  if (!G.permutations().empty()) {
    json gens = json::array();
    for (Elem g : G.generators()) gens.push_back(G.permutations()[g]);
    j["permutations"] = gens;
  } else {
    json rows = json::array();
    for (Elem a = 0; a < G.order(); ++a) {
      std::vector<Elem> r(G.order());
      for (Elem b = 0; b < G.order(); ++b) r[b] = G.mul(a, b);
      rows.push_back(r);
    }
    j["cayley"] = rows;
  }
  return j;
}

GroupPtr group_from_json(const json& j, std::size_t cap) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.rfind("auto:", 0) == 0) s = s.substr(5);
    return builtin_group(s, cap);
  }
  if (!j.is_object()) throw Error(ErrorKind::MalformedInput, "group must be a name or an object");
  std::string name = j.value("name", "G");
  if (j.contains("permutations")) {
    std::vector<Perm> gens;
    for (const auto& g : j.at("permutations")) {
      if (!g.is_array()) throw Error(ErrorKind::MalformedPermutation, "generator must be an image list");
      gens.push_back(g.get<Perm>());
    }
    return FiniteGroup::from_permutations(name, gens, cap);
  }
  if (j.contains("cayley")) {
    std::vector<std::vector<Elem>> t;
    for (const auto& r : j.at("cayley")) t.push_back(r.get<std::vector<Elem>>());
    return FiniteGroup::from_cayley(name, std::move(t), {}, cap);
  }
  throw Error(ErrorKind::MalformedInput, "group object needs \"permutations\" or \"cayley\"");
}

namespace {

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
  }
}

}  // namespace

GroupPtr load_group(const std::string& path, std::size_t cap) {
  if (path.rfind("auto:", 0) == 0) return group_from_json(json(path), cap);
  return group_from_json(read_file(path), cap);
}

json to_json(const CharacterTable& T) {
  const FiniteGroup& G = *T.group();
  json classes = json::array();
  for (const auto& c : G.classes())
    classes.push_back({{"rep", c.representative}, {"size", c.members.size()}, {"label", G.label(c.representative)}});
  json chars = json::array();
  for (const auto& row : T.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    chars.push_back(r);
  }
  return {{"group", G.name()}, {"classes", classes}, {"chars", chars}};
}

json to_json(const BlockPartition& P) {
  json blocks = json::array();
  for (const auto& b : P.blocks)
    blocks.push_back({{"rows", b.rows},
                      {"defect", b.defect},
                      {"defect_class", b.defect_class},
                      {"defect_group", elements(b.defect_group.members())}});
  return {{"p", P.p}, {"ideal_choice", {P.choice.factor, P.choice.root}}, {"blocks", blocks}};
}

json to_json(const BrauerTable& BT) {
  json ibr = json::array();
  for (const auto& row : BT.ibr) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    ibr.push_back(r);
  }
  return {{"group", BT.group->name()},
          {"p", BT.p},
          {"pregular_classes", BT.pregular_classes},
          {"degrees", BT.degrees},
          {"ibr", ibr}};
}

json to_json(const IntMatrix& M) { return json(M); }

json to_json(const DecompositionMatrix& D) {
  return {{"d", to_json(D.d)},
          {"block_labels", D.block_labels},
          {"brauer_blocks", D.brauer_blocks},
          {"cartan", to_json(cartan_matrix(D))}};
}

json to_json(const CharacterTriple& T, const ThetaBlockReport& R) {
  json blocks = json::array();
  for (const auto& b : R.blocks)
    blocks.push_back({{"rows", b.rows},
                      {"hat_block", b.hat_block},
                      {"defect", b.defect},
                      {"defect_group", elements(b.defect_group.members())}});
  json bij = json::array();
  for (std::size_t i = 0; i < R.S.over_theta.size(); ++i)
    bij.push_back({R.S.over_theta[i], R.S.image[i]});
  return {{"group", T.G->name()},
          {"normal", elements(T.N.members())},
          {"theta", T.theta_row},
          {"theta_degree", T.degree()},
          {"p", R.p},
          {"ideal_choice", {R.hat_blocks.choice.factor, R.hat_blocks.choice.root}},
          {"construction", R.P.construction},
          {"transversal", elements(R.P.transversal)},
          {"Z_order", R.R.k},
          {"Ghat_order", R.R.Ghat->order()},
          {"standard_bijection", bij},
          {"theta_blocks", blocks}};
}

Subgroup normal_from_json(const GroupPtr& G, const json& j) {
  if (j.is_string()) return named_normal_subgroup(G, j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorKind::MalformedInput, "normal must be \"auto:<name>\" or an element list");
  auto els = j.get<std::vector<Elem>>();
  for (Elem x : els)
    if (x >= G->order()) throw Error(ErrorKind::MalformedInput, "element " + std::to_string(x) + " out of range");
  Subgroup H = generated_subgroup(G, els);
  if (H.order() != [&] {
        auto s = els;
        std::sort(s.begin(), s.end());
        return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
      }())
    throw Error(ErrorKind::MalformedInput, "normal element list is not a subgroup");
  return H;
}

TripleSpec triple_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group")) throw Error(ErrorKind::MalformedInput, "triple needs a \"group\"");
  TripleSpec s;
  s.group = j.at("group");
  s.normal = j.value("normal", json("auto:trivial"));
  s.theta = j.value("theta", std::size_t{0});
  s.primes = j.value("primes", std::vector<unsigned>{});
  s.counterexample = j.value("counterexample", false);
  s.name = j.value("name", "");
  if (s.name.empty()) {
    std::string g = s.group.is_string() ? s.group.get<std::string>() : s.group.value("name", "G");
    std::string n = s.normal.is_string() ? s.normal.get<std::string>() : "N" + std::to_string(s.normal.size());
    s.name = g + "/" + n + "/" + std::to_string(s.theta);
  }
  return s;
}

json to_json(const TripleSpec& s) {
  json j{{"name", s.name}, {"group", s.group}, {"normal", s.normal}, {"theta", s.theta}};
  if (!s.primes.empty()) j["primes"] = s.primes;
  if (s.counterexample) j["counterexample"] = true;
  return j;
}

CharacterTriple resolve(const TripleSpec& s, std::size_t cap) {
  auto G = group_from_json(s.group, cap);
  return make_triple(G, normal_from_json(G, s.normal), s.theta);
}

std::vector<TripleSpec> load_corpus(const std::string& path) {
  json j = read_file(path);
  if (j.is_object() && j.contains("triples")) j = j.at("triples");
  if (!j.is_array()) throw Error(ErrorKind::MalformedInput, "corpus must be a JSON array");
  std::vector<TripleSpec> out;
  for (const auto& e : j) out.push_back(triple_spec_from_json(e));
  return out;
}

IdealChoice parse_ideal_choice(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::MalformedInput, "ideal choice must be i,j");
  try {
    return {static_cast<unsigned>(std::stoul(s.substr(0, comma))), static_cast<unsigned>(std::stoul(s.substr(comma + 1)))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedInput, "ideal choice must be i,j");
  }
}

}  // namespace thetablocks::io
