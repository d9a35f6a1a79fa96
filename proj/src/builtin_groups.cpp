#include <map>

#include "thetablocks/error.hpp"
#include "thetablocks/groups.hpp"

namespace thetablocks {
namespace {

// 0-indexed image lists. Matrix groups act on the nonzero vectors of F_p^2.
const std::map<std::string, std::vector<Perm>>& table() {
  static const std::map<std::string, std::vector<Perm>> t = {
      {"C2", {{1, 0}}},
      {"C3", {{1, 2, 0}}},
      {"C4", {{1, 2, 3, 0}}},
      {"C6", {{1, 2, 3, 4, 5, 0}}},
      {"V4", {{1, 0, 3, 2}, {2, 3, 0, 1}}},
      {"S3", {{1, 2, 0}, {1, 0, 2}}},
      {"D8", {{1, 2, 3, 0}, {3, 2, 1, 0}}},
      {"Q8", {{5, 2, 0, 6, 3, 1, 7, 4}, {4, 6, 3, 5, 1, 7, 0, 2}}},
      {"C2xC2xC2", {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}},
      {"D10", {{1, 2, 3, 4, 0}, {4, 3, 2, 1, 0}}},
      {"A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}},
      {"Dic12", {{1, 5, 0, 9, 10, 11, 3, 4, 2, 7, 6, 8}, {3, 6, 9, 11, 0, 10, 8, 1, 7, 5, 2, 4}}},
      {"D12", {{1, 2, 3, 4, 5, 0}, {5, 4, 3, 2, 1, 0}}},
      {"Q16", {{1, 5, 0, 9, 10, 12, 3, 4, 2, 14, 13, 15, 11, 6, 7, 8}, {3, 6, 9, 11, 0, 13, 15, 1, 14, 12, 2, 4, 10, 8, 5, 7}}},
      {"SD16", {{1, 4, 0, 8, 10, 12, 2, 11, 13, 3, 15, 9, 7, 5, 6, 14}, {3, 5, 7, 0, 11, 1, 13, 2, 10, 14, 8, 4, 15, 6, 9, 12}}},
      {"C3xS3", {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {0, 1, 2, 4, 3, 5}}},
      {"F20", {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}},
      {"F21", {{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}}},
      {"S4", {{1, 2, 3, 0}, {1, 0, 2, 3}}},
      {"SL23", {{3, 7, 2, 6, 1, 5, 0, 4}, {5, 2, 0, 6, 3, 1, 7, 4}}},
      {"A4xC2", {{1, 2, 0, 3, 4, 5}, {1, 0, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}},
      {"GL23", {{3, 7, 2, 6, 1, 5, 0, 4}, {5, 2, 0, 6, 3, 1, 7, 4}, {0, 1, 5, 6, 7, 2, 3, 4}}},
      {"A5", {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}},
      {"S5", {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}},
      {"PSL27", {{1, 2, 3, 4, 5, 6, 0, 7}, {7, 6, 3, 2, 5, 4, 1, 0}}},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names = {"C2",  "C3",    "C4",   "C6",    "V4",   "S3",    "D8",  "Q8",  "C2xC2xC2",
                                                 "D10", "A4",    "Dic12", "D12",  "Q16",  "SD16",  "C3xS3", "F20", "F21",
                                                 "S4",  "SL23",  "A4xC2", "GL23", "A5",   "S5",    "PSL27"};
  return names;
}

const std::vector<Perm>& builtin_generators(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw Error(ErrorKind::MalformedInput, "unknown built-in group " + name);
  return it->second;
}

GroupPtr builtin_group(const std::string& name, std::size_t cap) {
  return FiniteGroup::from_permutations(name, builtin_generators(name), cap);
}

}  // namespace thetablocks
