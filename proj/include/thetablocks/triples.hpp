#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thetablocks/blocks.hpp"
#include "thetablocks/chartab.hpp"
#include "thetablocks/cycmat.hpp"

namespace thetablocks {

/// (G, N, theta) with N normal in G and theta a G-invariant row of the table of N.
struct CharacterTriple {
  GroupPtr G;
  Subgroup N;
  SubgroupGroup Ngroup;  // N as a group; element i is N.members()[i]
  std::shared_ptr<const CharacterTable> TG, TN;
  std::size_t theta_row = 0;
  ClassFunction theta;  // on the classes of Ngroup.group

  std::uint64_t degree() const { return TN->degree(theta_row); }
  /// theta at an element of G lying in N.
  const CycNum& theta_at(Elem n) const;
  /// Internal index (in Ngroup.group) of an element of G lying in N.
  Elem local(Elem n) const { return static_cast<Elem>(N.index_of(n)); }
};

/// Checks that N is normal (NotNormal) and theta is G-invariant (MalformedInput).
CharacterTriple make_triple(const GroupPtr& G, const Subgroup& N, std::size_t theta_row);
/// Rows of the table of N that are G-invariant.
std::vector<std::size_t> invariant_rows(const GroupPtr& G, const Subgroup& N);
/// "auto:trivial", "auto:center", "auto:derived", "auto:derived2", "auto:whole".
Subgroup named_normal_subgroup(const GroupPtr& G, const std::string& name);

struct ProjRepOptions {
  /// One representative per coset of N, indexed like the quotient G/N; empty
  /// means the smallest element of each coset.
  std::vector<Elem> transversal;
  /// A representation of N affording theta, one matrix per element of N in
  /// N.members() order.
  std::optional<std::vector<CycMat>> theta_matrices;
};

/// Projective representation of G associated with theta.
struct ProjRep {
  std::size_t degree = 1;
  Quotient Q;                     // G -> G/N
  std::vector<Elem> transversal;  // coset -> representative; the trivial coset gets 1
  std::vector<CycMat> matrices;   // one per element of G
  std::vector<CycNum> factor_set; // alpha on coset pairs, index a * |G/N| + b
  std::string construction;       // how the representation of N was obtained

  const CycNum& alpha(Elem x, Elem y) const {
    return factor_set[Q.projection[x] * Q.group->order() + Q.projection[y]];
  }
};

/// P(nt) = D(n) P(t) on the transversal, each P(t) an intertwiner of D and
/// D^t scaled to determinant 1.
ProjRep build_projective_rep(const CharacterTriple& T, const ProjRepOptions& options = {});

/// xi * P for a scalar function xi on G (one value per element) that is
/// constant on N-cosets, takes root-of-unity values, and has xi(1) = 1.
ProjRep twist_projective_rep(const CharacterTriple& T, const ProjRep& P, const std::vector<CycNum>& xi);

/// Violated ProjRep laws, empty when P is associated with theta.
std::vector<std::string> projrep_violations(const CharacterTriple& T, const ProjRep& P);

/// Representation group: pairs (g, a) meaning (g, zeta_k^a), encoded g * k + a,
/// with (x,a)(y,b) = (xy, a + b + A(x,y)) where alpha = zeta_k^A.
struct RepGroup {
  GroupPtr Ghat;
  std::uint64_t k = 1;
  std::vector<std::uint64_t> alpha_exponent;  // per coset pair, like ProjRep::factor_set
  Subgroup N1;    // N x 1
  Subgroup Z;     // 1 x Z
  Subgroup Nhat;  // N x Z
  ClassFunction tau;  // on the classes of Ghat
  bool nhat_central = false;

  Elem pi(Elem x) const { return static_cast<Elem>(x / k); }
  std::uint64_t z(Elem x) const { return x % k; }
  Elem pair(Elem g, std::uint64_t a) const { return static_cast<Elem>(g * k + a % k); }
  /// lambda-hat(n, a) = zeta_k^-a.
  CycNum lambda_hat(Elem x) const;
};

/// Builds the group and checks its laws; OrderCapExceeded when |G| k > cap.
RepGroup representation_group(const CharacterTriple& T, const ProjRep& P, std::size_t cap = kDefaultOrderCap);

struct StandardBijection {
  Quotient Qhat;  // Ghat -> Ghat/N
  std::shared_ptr<const CharacterTable> TQ;
  std::vector<std::size_t> over_theta;   // rows of Irr(G|theta)
  std::vector<std::size_t> image;        // row of chi* in TQ, parallel to over_theta
  std::vector<std::size_t> over_lambda;  // rows of Irr(Ghat/N | lambda-hat)
};

/// chi -> chi* with chi(g) = chi*(g,z) tau(g,z), by exhaustive exact scan.
StandardBijection standard_bijection(const CharacterTriple& T, const RepGroup& R);

struct ThetaBlock {
  std::vector<std::size_t> rows;  // rows of the table of G
  std::size_t hat_block = 0;      // block of Ghat/N it comes from
  Subgroup defect_group;          // D_theta: contains N, D_theta/N a p-group
  unsigned defect = 0;            // log_p |D_theta / N|
};

struct ThetaBlockReport {
  unsigned p = 2;
  ProjRep P;
  RepGroup R;
  StandardBijection S;
  BlockPartition hat_blocks;
  std::vector<ThetaBlock> blocks;  // ordered by smallest row
};

ThetaBlockReport theta_blocks(const CharacterTriple& T, const ProjRep& P, unsigned p, IdealChoice choice = {});
ThetaBlockReport theta_blocks(const CharacterTriple& T, unsigned p, IdealChoice choice = {},
                              const ProjRepOptions& options = {});

/// theta has a D-invariant extension to N<x>, where D/N = C_{G/N}(xN).
bool is_theta_good(const CharacterTriple& T, Elem x);

struct ExtensionWitness {
  SubgroupGroup H;
  std::shared_ptr<const CharacterTable> table;
  std::vector<std::size_t> rows;  // rows eta of table with eta_N = theta
};

/// Characters of H (N <= H <= G) restricting to theta.
ExtensionWitness theta_extensions(const CharacterTriple& T, const Subgroup& H);
bool theta_extends_to(const CharacterTriple& T, const Subgroup& H);

}  // namespace thetablocks
