#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetablocks/io.hpp"

namespace thetablocks {

enum class Status { Pass, Fail, Vacuous, HypothesisNotMet };
const char* to_string(Status s) noexcept;

struct Outcome {
  std::string check;
  std::string instance;
  Status status = Status::Pass;
  std::size_t assertions = 0;  // individual identities evaluated
  std::string detail;
  io::json data;  // witness data, and the reproduction payload on failure
};

io::json to_json(const Outcome& o);

/// Shared per-(triple, p) computations.
struct Instance {
  CharacterTriple triple;
  unsigned p = 2;
  IdealChoice choice;
  std::string name;
  io::json reproduce;  // triple spec + choices
  ThetaBlockReport report;
};

Instance make_instance(const CharacterTriple& T, unsigned p, IdealChoice choice = {}, std::string name = {},
                       io::json reproduce = {});

/// chi(g) = 0 whenever (gN)_p is not G/N-conjugate into D_theta/N.
Outcome check_vanishing(const Instance& I);
/// Relative column orthogonality over a central subgroup.
Outcome check_orthogonality(const CharacterTriple& T, const std::string& name = {});
/// Each D_{B,theta} with a nonempty row set is not block-diagonal splittable.
/// In counterexample mode N need not be central and the matrices are reported.
Outcome check_decomposition(const CharacterTriple& T, unsigned p, bool counterexample = false,
                            std::uint64_t seed = kDefaultSeed, const std::string& name = {});
/// Heights against |G:D_theta|_p versus commutativity of D_theta/N, where theta extends to D_theta.
Outcome check_height_abelian(const Instance& I);
/// |B_theta| <= |D_theta/N|.
Outcome check_kB_theta(const Instance& I);
/// p never divides chi(1)/theta(1) over theta  =>  G/N has abelian Sylow p-subgroups.
Outcome check_gwnt_direction(const Instance& I);
/// Containment in one block, central case, extendible case, p-group quotient,
/// and singleton blocks when p does not divide |G/N| and theta extends.
std::vector<Outcome> check_block_properties(const Instance& I);
/// Default, xi-twisted, and alternate-transversal projective representations
/// give the same partition and G/N-conjugate defect groups.
Outcome check_well_defined(const CharacterTriple& T, unsigned p, std::uint64_t seed = kDefaultSeed,
                           const std::string& name = {});
/// Block partition and defect groups independent of the maximal-ideal choice.
Outcome check_ideal_invariance(const GroupPtr& G, unsigned p, const std::string& name = {});
/// Orthogonality of the table, exact decomposition equations, C = D^t D, connected Cartan blocks.
Outcome check_modular_infrastructure(const GroupPtr& G, unsigned p, std::uint64_t seed = kDefaultSeed);

/// Check ids for the corpus runner.
const std::vector<std::string>& check_ids();

struct CorpusOptions {
  std::vector<std::string> checks;  // empty means all
  std::uint64_t seed = kDefaultSeed;
  IdealChoice choice;
  std::size_t cap = kDefaultOrderCap;
};

std::vector<Outcome> run_corpus(const std::vector<io::TripleSpec>& corpus, const CorpusOptions& opt);

struct Summary {
  std::size_t pass = 0, fail = 0, vacuous = 0, hypothesis_not_met = 0;
};
Summary summarize(const std::vector<Outcome>& outcomes);

}  // namespace thetablocks
