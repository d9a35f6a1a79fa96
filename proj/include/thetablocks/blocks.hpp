#pragma once

#include <cstdint>
#include <vector>

#include "thetablocks/chartab.hpp"
#include "thetablocks/finite_field.hpp"

namespace thetablocks {

struct Block {
  std::vector<std::size_t> rows;  // sorted table rows
  unsigned p = 2;
  unsigned defect = 0;
  std::size_t defect_class = 0;
  Subgroup defect_group;
  std::vector<FiniteField::Elem> lambda;  // lambda_B on each class sum
};

struct BlockPartition {
  unsigned p = 2;
  IdealChoice choice;
  std::vector<Block> blocks;  // ordered by smallest row, so the principal block is first
  std::vector<std::size_t> block_of;  // row -> block index
  std::size_t principal = 0;
};

/// chi and psi share a block iff their central characters agree after reduction.
/// Defect groups are filled in through defect classes.
BlockPartition p_blocks(const CharacterTable& T, unsigned p, const IdealReduction& red);
BlockPartition p_blocks(const CharacterTable& T, unsigned p, IdealChoice choice = {});

/// Reduction data at the table conductor.
IdealReduction reduction_for(const CharacterTable& T, unsigned p, IdealChoice choice = {});

/// max over rows of the p-adic valuation of |G|/chi(1).
unsigned block_defect(const CharacterTable& T, unsigned p, const std::vector<std::size_t>& rows);

/// Reduced idempotent coefficient on class k, scaled by the p'-unit |G|_p';
/// zero when the scaled coefficient is not integral.
FiniteField::Elem idempotent_coefficient(const CharacterTable& T, const IdealReduction& red,
                                         const std::vector<std::size_t>& rows, std::size_t k);

struct DefectData {
  std::size_t defect_class;
  Subgroup defect_group;
};

/// Smallest defect class K (lambda_B(K) != 0 and a_B(K) != 0), with a Sylow
/// p-subgroup of C_G(x_K) as the defect group; its order is checked against p^d(B).
DefectData defect_group(const CharacterTable& T, const IdealReduction& red, const std::vector<std::size_t>& rows,
                        const std::vector<FiniteField::Elem>& lambda, unsigned defect);

/// Index of the block {mu chi : chi in B} for a linear row mu; checks that it is
/// a block of the partition with conjugate defect groups.
std::size_t mu_twist_block(const CharacterTable& T, const BlockPartition& P, std::size_t block, std::size_t mu);

struct DominatedBlockReport {
  std::size_t pairs_checked = 0;
  bool partition_match = true;
  bool defect_match = true;
  std::size_t quotient_blocks = 0;
};

/// For Z = Z_p x K (Z_p central p-subgroup, K normal p'-subgroup), compare the
/// blocks of characters of G containing Z in their kernel with the blocks of G/Z,
/// and the defect groups through P -> PZ/Z.
DominatedBlockReport dominated_block_data(const GroupPtr& G, const Subgroup& Z, unsigned p);

}  // namespace thetablocks
