// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "thetablocks/error.hpp"
#include "thetablocks/verify.hpp"

using namespace thetablocks;

namespace {

struct Tally {
  std::map<std::string, std::map<Status, std::size_t>> by_check;
  std::vector<std::string> failures;

  void add(const Outcome& o) {
    ++by_check[o.check][o.status];
    if (o.status == Status::Fail) failures.push_back(o.check + " " + o.instance + ": " + o.detail);
  }
  std::size_t count(const std::string& check, Status s) const {
    auto it = by_check.find(check);
    if (it == by_check.end()) return 0;
    auto jt = it->second.find(s);
    return jt == it->second.end() ? 0 : jt->second;
  }
  std::string first_failure() const { return failures.empty() ? "" : failures.front(); }
};

struct Result {
  bool ok = true;
  std::string detail;
};

int failed = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Result()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    r.ok = false;
    r.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  if (!r.ok) ++failed;
  std::printf("[%s] %d %s: %s [%.2f s]\n", r.ok ? "PASS" : "FAIL", id, title.c_str(), r.detail.c_str(), secs);
  std::fflush(stdout);
}

CharacterTriple builtin_triple(const std::string& group, const std::string& normal, std::size_t theta) {
  auto G = builtin_group(group);
  return make_triple(G, named_normal_subgroup(G, normal), theta);
}

std::vector<unsigned> primes_dividing(std::uint64_t n, std::initializer_list<unsigned> from) {
  std::vector<unsigned> out;
  for (unsigned p : from)
    if (n % p == 0) out.push_back(p);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string corpus_path = argc > 1 ? argv[1] : "testdata/corpus.json";
  std::vector<io::TripleSpec> corpus;
  try {
    corpus = io::load_corpus(corpus_path);
  } catch (const Error& e) {
    std::printf("cannot load corpus: %s\n", e.what());
    return 2;
  }
  std::vector<std::pair<io::TripleSpec, CharacterTriple>> triples;
  for (const auto& s : corpus) triples.emplace_back(s, io::resolve(s));

  criterion(1, "A4, p=2, N=V4, theta=1: one block, D_{B,theta} = I3", 5, [] {
    auto T = builtin_triple("A4", "derived", 0);
    auto o = check_decomposition(T, 2, true);
    const auto& mats = o.data.at("matrices");
    const IntMatrix I3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    bool ok = o.data.at("blocks") == 1 && mats.size() == 1 && mats[0].at("matrix").get<IntMatrix>() == I3;
    return Result{ok, "blocks=" + o.data.at("blocks").dump() + " D=" + (mats.empty() ? "none" : mats[0].at("matrix").dump())};
  });

  criterion(2, "central suite: no D_{B,theta} is block-diagonal splittable", 60, [] {
    const std::vector<std::tuple<std::string, unsigned>> suite{{"Q8", 2}, {"SL23", 2}, {"SL23", 3}, {"D8", 2}};
    Tally t;
    std::size_t matrices = 0;
    for (const auto& [g, p] : suite) {
      auto o = check_decomposition(builtin_triple(g, "center", 1), p);
      matrices += o.assertions;
      t.add(o);
    }
    bool ok = t.failures.empty() && t.count("decomposition", Status::Pass) == suite.size();
    return Result{ok, std::to_string(suite.size()) + " instances, " + std::to_string(matrices) + " matrices " +
                          t.first_failure()};
  });

  criterion(3, "well-definedness over three projective representations", 300, [&] {
    Tally t;
    for (const auto& [s, T] : triples)
      for (unsigned p : {2u, 3u}) t.add(check_well_defined(T, p, kDefaultSeed, s.name));
    bool ok = t.failures.empty() && t.count("well-defined", Status::Pass) == 2 * triples.size();
    return Result{ok, std::to_string(t.count("well-defined", Status::Pass)) + "/" +
                          std::to_string(2 * triples.size()) + " instances " + t.first_failure()};
  });

  // Instances over p in {2,3} (and 5, 7 where they divide |G|), shared by criteria 4-6.
  std::vector<Instance> instances;
  for (const auto& [s, T] : triples) {
    if (s.counterexample) continue;
    for (unsigned p : {2u, 3u, 5u, 7u})
      if (p <= 3 || T.G->order() % p == 0) instances.push_back(make_instance(T, p, {}, s.name + " p=" + std::to_string(p)));
  }

  criterion(4, "block properties (a)-(d)", 0, [&] {
    Tally t;
    for (const auto& I : instances)
      for (const auto& o : check_block_properties(I)) t.add(o);
    std::string d;
    bool ok = t.failures.empty();
    for (const char* c : {"containment", "central", "extendible", "p-quotient"}) {
      std::size_t pass = t.count(c, Status::Pass);
      ok = ok && pass > 0;
      d += std::string(c) + " " + std::to_string(pass) + " pass/" + std::to_string(t.count(c, Status::Vacuous)) +
           " vacuous; ";
    }
    return Result{ok, d + t.first_failure()};
  });

  criterion(5, "vanishing and relative orthogonality", 0, [&] {
    Tally t;
    for (const auto& I : instances) t.add(check_vanishing(I));
    for (const auto& [s, T] : triples)
      if (!s.counterexample) t.add(check_orthogonality(T, s.name));
    std::size_t vp = t.count("vanishing", Status::Pass), op = t.count("orthogonality", Status::Pass);
    bool ok = t.failures.empty() && vp >= 3 && op >= 3;
    return Result{ok, "vanishing " + std::to_string(vp) + " non-vacuous, " +
                          std::to_string(t.count("vanishing", Status::Vacuous)) + " vacuous; orthogonality " +
                          std::to_string(op) + " non-vacuous, " +
                          std::to_string(t.count("orthogonality", Status::HypothesisNotMet)) + " non-central " +
                          t.first_failure()};
  });

  criterion(6, "height/abelian equivalence and k(B_theta) bound, corpus plus N=1", 0, [&] {
    Tally t;
    std::size_t n1 = 0;
    for (const auto& I : instances) {
      t.add(check_height_abelian(I));
      t.add(check_kB_theta(I));
    }
    for (const auto& name : builtin_group_names()) {
      auto G = builtin_group(name);
      if (G->order() > 200) continue;
      auto T = make_triple(G, Subgroup::trivial(G), 0);
      for (unsigned p : {2u, 3u, 5u}) {
        auto I = make_instance(T, p, {}, name + "/1 p=" + std::to_string(p));
        t.add(check_height_abelian(I));
        t.add(check_kB_theta(I));
        ++n1;
      }
    }
    bool ok = t.failures.empty() && t.count("height", Status::Pass) > 0 && t.count("kb", Status::Pass) > 0;
    return Result{ok, "height " + std::to_string(t.count("height", Status::Pass)) + " pass, " +
                          std::to_string(t.count("height", Status::HypothesisNotMet)) + " without extension; kb " +
                          std::to_string(t.count("kb", Status::Pass)) + " pass; " + std::to_string(n1) +
                          " N=1 instances " + t.first_failure()};
  });

  criterion(7, "table orthogonality, ideal-choice invariance, C = D^t D, Cartan connectivity", 600, [] {
    Tally t;
    for (const auto& name : builtin_group_names()) {
      auto G = builtin_group(name);
      for (unsigned p : primes_dividing(G->order(), {2, 3, 5, 7})) {
        t.add(check_modular_infrastructure(G, p));
        t.add(check_ideal_invariance(G, p));
      }
    }
    bool ok = t.failures.empty() && t.count("infrastructure", Status::Pass) > 0;
    return Result{ok, std::to_string(t.count("infrastructure", Status::Pass)) + " group/prime pairs, " +
                          std::to_string(t.count("ideal-choice", Status::Pass)) + " with several ideal choices " +
                          t.first_failure()};
  });

  return failed ? 1 : 0;
}
