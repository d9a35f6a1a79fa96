#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thetablocks/modrep.hpp"
#include "thetablocks/triples.hpp"

namespace thetablocks::io {

using json = nlohmann::ordered_json;

json to_json(const CycNum& x);
CycNum cyc_from_json(const json& j);
json to_json(const FiniteField& F, FiniteField::Elem x);

json to_json(const FiniteGroup& G);
/// "auto:S4", "S4", or {"name", "permutations"|"cayley"}.
GroupPtr group_from_json(const json& j, std::size_t cap = kDefaultOrderCap);
GroupPtr load_group(const std::string& path, std::size_t cap = kDefaultOrderCap);

json to_json(const CharacterTable& T);
json to_json(const BlockPartition& P);
json to_json(const BrauerTable& BT);
json to_json(const IntMatrix& M);
json to_json(const DecompositionMatrix& D);
json to_json(const CharacterTriple& T, const ThetaBlockReport& R);

/// "auto:<name>" or an explicit element list.
Subgroup normal_from_json(const GroupPtr& G, const json& j);

struct TripleSpec {
  std::string name;
  json group;
  json normal;
  std::size_t theta = 0;
  std::vector<unsigned> primes;
  /// Run the decomposition check even when N is not central.
  bool counterexample = false;
};

TripleSpec triple_spec_from_json(const json& j);
json to_json(const TripleSpec& s);
CharacterTriple resolve(const TripleSpec& s, std::size_t cap = kDefaultOrderCap);
std::vector<TripleSpec> load_corpus(const std::string& path);

/// "i,j" -> IdealChoice{i, j}.
IdealChoice parse_ideal_choice(const std::string& s);

}  // namespace thetablocks::io
