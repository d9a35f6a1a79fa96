#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "thetablocks/error.hpp"
#include "thetablocks/verify.hpp"

using namespace thetablocks;
using io::json;

namespace {

std::string temp_file(const std::string& body) {
  std::string path = "thetablocks_test_" + std::to_string(std::random_device{}()) + ".json";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("cyclotomic numbers survive a JSON round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t n = 1 + rng() % 24;
    CycNum x;
    for (int t = 0; t < 4; ++t) x += CycNum(static_cast<long>(rng() % 7) - 3) * CycNum::root_of_unity(n, rng() % n);
    CHECK(io::cyc_from_json(io::to_json(x)) == x);
  }
  // non-minimal input: zeta_4^2 = -1
  CHECK(io::cyc_from_json(json::parse(R"({"conductor": 4, "coeffs": {"2": [1, 1]}})")) == CycNum(-1L));
  CHECK(io::to_json(CycNum(-1L)).dump() == R"({"conductor":1,"coeffs":{"0":[-1,1]}})");
  CHECK_THROWS_AS(io::cyc_from_json(json::parse(R"({"conductor": 3, "coeffs": {"1": [1, 0]}})")), Error);
  CHECK_THROWS_AS(io::cyc_from_json(json::parse(R"({"coeffs": {}})")), Error);
}

TEST_CASE("groups round trip through JSON") {
  for (const auto& name : builtin_group_names()) {
    auto G = builtin_group(name);
    auto H = io::group_from_json(io::to_json(*G));
    CHECK(H->order() == G->order());
    CHECK(H->classes().size() == G->classes().size());
  }
  auto C3 = io::group_from_json(json::parse(R"({"name": "C3", "cayley": [[0,1,2],[1,2,0],[2,0,1]]})"));
  CHECK(C3->order() == 3);
  CHECK(io::group_from_json(json("auto:S4"))->order() == 24);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"name": "X"})")), Error);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"permutations": [[0, 0]]})")), Error);
}

TEST_CASE("normal subgroup specs and triple specs") {
  auto G = builtin_group("S4");
  CHECK(io::normal_from_json(G, json("auto:derived2")).order() == 4);
  CHECK(io::normal_from_json(G, json::array({0})).order() == 1);
  // a transposition generates a subgroup of order 2 that the list {0, t} would be, but {t} alone is not closed
  Elem t = 0;
  for (Elem x = 1; x < G->order(); ++x)
    if (G->element_order(x) == 2 && centralizer(G, x).order() == 4) t = x;
  REQUIRE(t != 0);
  CHECK_THROWS_AS(io::normal_from_json(G, json::array({t})), Error);
  CHECK_THROWS_AS(io::normal_from_json(G, json::array({99})), Error);

  auto s = io::triple_spec_from_json(json::parse(R"({"group": "auto:Q8", "normal": "auto:center", "theta": 1})"));
  CHECK(s.name == "auto:Q8/auto:center/1");
  CHECK(io::resolve(s).degree() == 1);
  CHECK(io::triple_spec_from_json(io::to_json(s)).name == s.name);
  CHECK_THROWS_AS(io::triple_spec_from_json(json::parse(R"({"normal": "auto:center"})")), Error);

  CHECK(io::parse_ideal_choice("2,1").factor == 2);
  CHECK(io::parse_ideal_choice("2,1").root == 1);
  CHECK_THROWS_AS(io::parse_ideal_choice("2"), Error);
  CHECK_THROWS_AS(io::parse_ideal_choice("a,b"), Error);
}

TEST_CASE("corpus files") {
  auto path = temp_file(R"({"triples": [{"group": "auto:D8", "normal": "auto:center", "theta": 1}]})");
  auto corpus = io::load_corpus(path);
  std::remove(path.c_str());
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].group == json("auto:D8"));

  auto bad = temp_file(R"({"group": "auto:D8"})");
  CHECK_THROWS_AS(io::load_corpus(bad), Error);
  std::remove(bad.c_str());
  CHECK_THROWS_AS(io::load_corpus("no/such/file.json"), Error);
}

TEST_CASE("central theta-blocks are the blocks cut down to Irr(G|theta)") {
  // Oracle: chi lies over theta iff chi(z) = chi(1) theta(z) for z in the center.
  for (const auto& [name, p] : std::vector<std::pair<std::string, unsigned>>{
           {"Q8", 2}, {"SL23", 2}, {"SL23", 3}, {"D8", 2}, {"Dic12", 3}, {"Dic12", 2}, {"C3xS3", 3}}) {
    auto G = builtin_group(name);
    auto T = make_triple(G, center(G), 1);
    auto I = make_instance(T, p);
    const auto& TG = *T.TG;
    std::vector<std::size_t> over;
    for (std::size_t r = 0; r < TG.size(); ++r) {
      bool ok = true;
      for (Elem z : T.N.members()) ok = ok && TG.at(r, z) == CycNum(static_cast<long>(TG.degree(r))) * T.theta_at(z);
      if (ok) over.push_back(r);
    }
    auto P = p_blocks(TG, p);
    std::vector<std::vector<std::size_t>> expect;
    for (const auto& B : P.blocks) {
      std::vector<std::size_t> rows;
      std::set_intersection(B.rows.begin(), B.rows.end(), over.begin(), over.end(), std::back_inserter(rows));
      if (!rows.empty()) expect.push_back(rows);
    }
    std::vector<std::vector<std::size_t>> got;
    for (const auto& b : I.report.blocks) got.push_back(b.rows);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == expect, name << " p=" << p);
  }
}

TEST_CASE("checks on small instances") {
  auto G = builtin_group("SL23");
  auto T = make_triple(G, center(G), 1);
  auto I = make_instance(T, 3);
  CHECK(check_vanishing(I).status != Status::Fail);
  CHECK(check_orthogonality(T).status == Status::Pass);
  CHECK(check_kB_theta(I).status == Status::Pass);
  CHECK(check_decomposition(T, 2).status == Status::Pass);
  for (const auto& o : check_block_properties(I)) CHECK_MESSAGE(o.status != Status::Fail, o.check);

  auto S4 = builtin_group("S4");
  auto U = make_triple(S4, named_normal_subgroup(S4, "derived"), 0);
  CHECK(check_orthogonality(U).status == Status::HypothesisNotMet);
  CHECK(check_decomposition(U, 2).status == Status::HypothesisNotMet);

  // the A4 counterexample splits
  auto A4 = builtin_group("A4");
  auto V = make_triple(A4, named_normal_subgroup(A4, "derived"), 0);
  auto o = check_decomposition(V, 2, true);
  CHECK(o.status == Status::Pass);
  CHECK(o.data["matrices"][0]["splittable"] == true);
}

TEST_CASE("corpus runner") {
  std::vector<io::TripleSpec> corpus{
      io::triple_spec_from_json(json::parse(R"({"group": "auto:Q8", "normal": "auto:center", "theta": 1})")),
      io::triple_spec_from_json(json::parse(R"({"group": "auto:S4", "normal": "auto:derived2", "theta": 0})"))};
  CorpusOptions opt;
  auto a = run_corpus(corpus, opt);
  auto b = run_corpus(corpus, opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
  CHECK(summarize(a).fail == 0);

  opt.checks = {"kb"};
  auto only = run_corpus(corpus, opt);
  CHECK(std::all_of(only.begin(), only.end(), [](const Outcome& o) { return o.check == "kb"; }));
  opt.checks = {"nosuch"};
  CHECK_THROWS_AS(run_corpus(corpus, opt), Error);

  // a corpus entry whose claim is false produces a failure with a reproduction payload
  corpus[0].counterexample = true;
  opt.checks = {"decomposition"};
  auto f = run_corpus({corpus[0]}, opt);
  REQUIRE(f.size() == 1);
  CHECK(f[0].status == Status::Fail);
  CHECK(f[0].data.contains("reproduce"));
}
