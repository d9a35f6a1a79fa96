#pragma once

#include <cstdint>
#include <vector>

#include "thetablocks/blocks.hpp"
#include "thetablocks/chartab.hpp"
#include "thetablocks/ffmat.hpp"

namespace thetablocks {

inline constexpr std::size_t kModularCap = 300;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// A representation over the reduction field, given by the matrices of the
/// group's generators (FiniteGroup::generators()), acting on row vectors.
struct Module {
  std::size_t dim = 0;
  std::vector<FMat> gens;
};

/// Matrices of every group element, built along the group's BFS tree.
std::vector<FMat> element_matrices(const FiniteGroup& G, const FiniteField& F, const Module& M);

/// The right regular module.
Module regular_module(const FiniteGroup& G);

/// MeatAxe chop of the regular module down to a complete set of pairwise
/// non-isomorphic simple modules, ordered like their Brauer characters.
std::vector<Module> modular_irreducibles(const GroupPtr& G, const IdealReduction& red,
                                         std::uint64_t seed = kDefaultSeed, std::size_t cap = kModularCap);

struct BrauerTable {
  GroupPtr group;
  unsigned p = 2;
  std::vector<std::size_t> pregular_classes;
  std::vector<ClassFunction> ibr;  // ibr[i][j]: value on pregular_classes[j]
  std::vector<std::uint64_t> degrees;
};

std::vector<std::size_t> p_regular_classes(const FiniteGroup& G, unsigned p);

/// Brauer character of one module: eigenvalues of class representatives lifted
/// through the inverse of zeta_m -> root.
ClassFunction brauer_character(const FiniteGroup& G, const IdealReduction& red, const Module& M,
                               const std::vector<std::size_t>& classes);
BrauerTable brauer_characters(const GroupPtr& G, const std::vector<Module>& mods, const IdealReduction& red);
/// modular_irreducibles followed by brauer_characters.
BrauerTable brauer_table(const GroupPtr& G, const IdealReduction& red, std::uint64_t seed = kDefaultSeed,
                         std::size_t cap = kModularCap);

using IntMatrix = std::vector<std::vector<long>>;

struct DecompositionMatrix {
  IntMatrix d;                             // ordinary rows x Brauer rows
  std::vector<std::size_t> block_labels;   // block of each ordinary row
  std::vector<std::size_t> brauer_blocks;  // block of each Brauer row
};

/// Solves chi restricted to p-regular classes = sum_phi d_{chi phi} phi exactly.
DecompositionMatrix decomposition_matrix(const CharacterTable& T, const BrauerTable& BT, const BlockPartition& P);
IntMatrix cartan_matrix(const DecompositionMatrix& D);

/// Rows rows_filter (which must lie in block b) and the Brauer columns of block b.
IntMatrix submatrix_over(const DecompositionMatrix& D, std::size_t block, const std::vector<std::size_t>& rows_filter);

/// True iff the rows and columns (zero lines removed) split into at least two
/// diagonal blocks, i.e. the bipartite incidence graph is disconnected.
bool is_block_diagonal_splittable(const IntMatrix& M);

}  // namespace thetablocks
