#ifndef CHARBLOCK_BLOCKS_HPP
#define CHARBLOCK_BLOCKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "charblock/charops.hpp"
#include "charblock/chartab.hpp"
#include "charblock/fq.hpp"

namespace charblock {

/// Brauer character table on the p-regular classes; parsed from file (or
/// built for the trivial cases), never computed from modular
/// representations.
struct BrauerTable {
  std::string name;
  int prime = 0;
  long star_conductor = 0;        // m'
  std::vector<int> star_factor;   // chosen factor of Phi_{m'} mod p
  std::vector<std::string> class_names;
  std::vector<std::vector<Cyclo>> ibr;

  int class_count() const { return static_cast<int>(class_names.size()); }
  int ibr_count() const { return static_cast<int>(ibr.size()); }

  void check_against(const CharacterTable &T) const; // classes must match
};

// p-group case (iBr = {1}) and coprime case (iBr = Irr restricted).
BrauerTable brauer_table_p_group(const CharacterTable &T, int p);
BrauerTable brauer_table_p_coprime(const CharacterTable &T, int p);

struct DecompData {
  std::vector<int> p_regular;          // class indices of T, column order
  std::vector<std::vector<long>> D;    // |Irr| x |IBr|
  std::vector<std::vector<long>> C;    // |IBr| x |IBr|
  Integer cartan_det;
  bool cartan_det_ok = false; // det C = prod |C_G(x_K)|_p
};

struct Block {
  std::vector<int> irr;            // row indices of T
  std::vector<int> ibr;            // row indices of the Brauer table
  std::vector<FqElem> lambda;      // lambda_B per class of T
  int defect = -1;
  std::vector<int> heights;        // parallel to irr
  bool principal = false;
  // local data (filled by block_local_data)
  std::vector<FqElem> a_coeffs;    // a_B(K) per class of T
  std::vector<int> defect_classes; // class indices
  std::vector<Perm> defect_group_gens;
  long defect_group_order = 0;
};

struct BlockPartition {
  int prime = 0;
  std::vector<Block> blocks;

  int block_of_irr(int chi) const;
  int block_count() const { return static_cast<int>(blocks.size()); }
};

// lambda_chi(K^) = star(omega_chi(K^)) for all chi, K
std::vector<std::vector<FqElem>> lambda_table(const CharacterTable &T,
                                              const StarMap &star);

// Irr partitioned by equal lambda rows; defects and heights from the
// degree formula d(B) = a - min v_p(chi(1)).
BlockPartition block_partition(const CharacterTable &T, int p,
                               const StarMap &star);

// a_B(K), defect classes, defect groups (Sylow subgroups of the defect
// class centralizers); the Sylow order is reconciled with the
// degree-formula defect and any mismatch is a hard failure.
void block_local_data(BlockPartition &bp, const CharacterTable &T,
                      const GroupData &gd, const StarMap &star);

struct DefectZeroReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<bool> is_defect_zero; // per block
};

// Checks that the six defect-zero characterizations agree on every block;
// the |irr(B)| = |iBr(B)| condition is included when dd is present.
DefectZeroReport defect_zero_report(const BlockPartition &bp,
                                    const CharacterTable &T, int p,
                                    const DecompData *dd = nullptr);

// Solves X^ = D Phi exactly; entries must be nonnegative integers.  Also
// fills the Brauer side of the partition (via d_{chi phi} != 0) and
// verifies the Cartan determinant and block-diagonal structure.
DecompData decomposition_and_cartan(const CharacterTable &T,
                                    const BrauerTable &Phi,
                                    BlockPartition *bp = nullptr);

// Connected components of the Brauer graph (vertices Irr, edges through
// shared Brauer constituents); must coincide with the lambda partition.
std::vector<std::vector<int>> brauer_graph_components(const DecompData &dd,
                                                      int irr_count);

struct PrincipalIndecomposables {
  std::vector<std::vector<Cyclo>> theta; // per phi, values on all classes
                                         // of T (zero off p-regular)
  bool ok = true;
  std::vector<std::string> failures;
};

PrincipalIndecomposables principal_indecomposables(const DecompData &dd,
                                                   const CharacterTable &T,
                                                   const BrauerTable &Phi);

/// Element of Z(FG) as a coefficient vector over class sums.
struct CentralElement {
  std::vector<FqElem> coeffs; // per class
};

struct BrauerHomResult {
  GroupData N;                            // N_G(P) with its classes
  std::vector<std::vector<FqElem>> image; // per G-class: coeffs over N-classes
};

// beta_P(K^) = sum of the elements of K cap C_G(P), expressed in the
// class sums of N_G(P).
BrauerHomResult brauer_homomorphism(const GroupData &gd,
                                    const std::vector<Perm> &p_subgroup_gens,
                                    int p, const StarMap &star);

struct InducedBlockResult {
  bool defined = false;
  int g_block = -1;
  std::vector<FqElem> lambda_values; // lambda_b^G per G-class
  std::string reason;                // when undefined
};

// lambda_b^G(K^) = lambda_b(sum of K cap H); defined iff multiplicative
// over the structure constants and matching some lambda_B.
InducedBlockResult induced_block(const GroupData &gd, const CharacterTable &TG,
                                 const StructureConstants &scG,
                                 const BlockPartition &g_blocks,
                                 const GroupData &hd, const CharacterTable &TH,
                                 const BlockPartition &h_blocks, int h_block,
                                 const StarMap &star);

// Robinson: rank of A(D)* where A_{K,L} = |{(x,y) in K x L : Px = Py}| /
// p^{a-d}, over the p-regular classes with defect group exactly D
// (normal).  Equals the number of blocks with defect group D.
long robinson_block_count(const GroupData &gd, int p,
                          const std::vector<Perm> &normal_p_subgroup_gens);

struct CentralizerData {
  GroupData gd;
  CharacterTable table;
  BrauerTable brauer;
  DecompData decomp;
};

// d^x_{chi phi} = sum_tau (chi_H, tau) d_{tau phi} omega_tau(x) with
// H = C_G(x); entries are algebraic integers in Q_{|x|}.
std::vector<std::vector<Cyclo>> higher_decomposition(const GroupData &gd,
                                                     const CharacterTable &T,
                                                     const Perm &x, int p,
                                                     const CentralizerData &H);

struct BrauerTreeResult {
  bool ok = false;
  std::string diagnostic;
  long exceptional_multiplicity = 1;  // t = (p^d - 1)/e
  int exceptional_vertex = -1;        // index into vertices, -1 if t = 1
  std::vector<std::vector<int>> vertices; // groups of irr indices (of T)
  std::vector<std::pair<int, int>> edges; // one per Brauer character
};

// Dade's numerical conditions for a block with cyclic defect group and
// the tree extraction from the 0/1 decomposition matrix.
BrauerTreeResult brauer_tree(const BlockPartition &bp, int block,
                             const DecompData &dd, const CharacterTable &T,
                             int p);

struct DefectZeroCharResult {
  ClassFunction chi_dot;
  int defect = 0;
  bool generalized = false;        // integer coefficients over Irr
  bool vanishes_p_singular = false;
};

DefectZeroCharResult defect_zero_generalized_char(const CharacterTable &T,
                                                  int chi, int p);

// lambda row multiplicativity over star-reduced structure constants
bool lambda_is_multiplicative(const std::vector<FqElem> &lambda,
                              const StructureConstants &sc,
                              const CharacterTable &T, const StarMap &star);

} // namespace charblock

#endif
