#ifndef CHARBLOCK_FPG_HPP
#define CHARBLOCK_FPG_HPP

#include <string>
#include <vector>

#include "charblock/blocks.hpp"
#include "charblock/chartab.hpp"
#include "charblock/fq.hpp"

namespace charblock {

inline constexpr long kOracleOrderCap = 2000;

/// Element of the group algebra FG, dense coefficient vector indexed by
/// the group's element indices.
struct AlgebraElement {
  std::vector<FqElem> c;

  bool operator==(const AlgebraElement &o) const { return c == o.c; }
};

/// Brute-force group-algebra oracle over F_{p^d}: verifies the block
/// idempotents and the centre structure by direct linear algebra,
/// independent of the character-theoretic route.
class GroupAlgebra {
public:
  GroupAlgebra(const GroupData &gd, const FqField &F);

  const FqField &field() const { return F_; }
  const GroupData &group() const { return *gd_; }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement delta(long element_index) const;
  AlgebraElement class_sum(int class_index) const;
  AlgebraElement from_class_coeffs(const std::vector<FqElem> &coeffs) const;

  AlgebraElement add(const AlgebraElement &a, const AlgebraElement &b) const;
  AlgebraElement sub(const AlgebraElement &a, const AlgebraElement &b) const;
  AlgebraElement scale(const FqElem &s, const AlgebraElement &a) const;

  // c_g = sum_{xy = g} a_x b_y; OpenMP kernel with serial reference
  AlgebraElement convolve(const AlgebraElement &a,
                          const AlgebraElement &b) const;
  AlgebraElement convolve_serial(const AlgebraElement &a,
                                 const AlgebraElement &b) const;

  bool is_central(const AlgebraElement &a) const;
  // coefficients over class sums; throws if not a class function
  std::vector<FqElem> central_coefficients(const AlgebraElement &a) const;

private:
  const GroupData *gd_;
  FqField F_;
  std::vector<std::vector<long>> mul_; // precomputed index products
};

struct OracleReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// e_B^2 = e_B, e_B e_B' = 0, sum e_B = 1, centrality, and primitivity in
// Z(FG) via locality (the kernel of lambda_B on e_B Z(FG) is nilpotent of
// codimension 1).  Block data must carry a_coeffs (block_local_data).
OracleReport verify_block_idempotents(const GroupAlgebra &A,
                                      const BlockPartition &bp,
                                      const CharacterTable &T);

struct CentreRadical {
  long centre_dim = 0;   // = |K(G)|
  long radical_dim = 0;  // dim of the intersection of the Ker lambda_B
  long nilpotency_index = 0; // least n with J^n = 0
};

CentreRadical centre_radical(const GroupAlgebra &A, const BlockPartition &bp,
                             const CharacterTable &T);

} // namespace charblock

#endif
