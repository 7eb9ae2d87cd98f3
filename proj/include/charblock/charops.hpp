#ifndef CHARBLOCK_CHAROPS_HPP
#define CHARBLOCK_CHAROPS_HPP

#include <vector>

#include "charblock/chartab.hpp"

namespace charblock {

/// Class function on a fixed table, one value per class.
struct ClassFunction {
  const CharacterTable *table = nullptr;
  std::vector<Cyclo> values;

  const Cyclo &operator[](int k) const {
    return values[static_cast<size_t>(k)];
  }
};

ClassFunction class_function(const CharacterTable &T, std::vector<Cyclo> v);
ClassFunction irr_row(const CharacterTable &T, int i);
ClassFunction principal_character(const CharacterTable &T);
ClassFunction regular_character(const CharacterTable &T);
ClassFunction zero_function(const CharacterTable &T);

/// Embedding of the classes of a subgroup H <= G into the classes of G.
struct FusionMap {
  std::vector<int> h_to_g; // H-class index -> G-class index
};

// H must consist of elements of G (same degree, membership checked).
FusionMap build_fusion(const GroupData &gd, const GroupData &hd);

Cyclo inner_product(const ClassFunction &phi, const ClassFunction &psi);

// inner product over the p-regular classes only
Cyclo inner_product_p_regular(const ClassFunction &phi,
                              const ClassFunction &psi, int p);

struct Decomposition {
  std::vector<Cyclo> coeffs; // over Irr, table row order
  bool is_character = false;
  bool is_generalized = false;
};

Decomposition decompose(const ClassFunction &phi);

ClassFunction induce(const ClassFunction &phi, const CharacterTable &TH,
                     const CharacterTable &TG, const FusionMap &fusion);
ClassFunction restrict_to(const ClassFunction &psi, const CharacterTable &TH,
                          const FusionMap &fusion);

ClassFunction pointwise_product(const ClassFunction &a,
                                const ClassFunction &b);
ClassFunction complex_conjugate(const ClassFunction &a);
// chi*(g) = chi(g^{-1}); needs the inverse classes, via the group
ClassFunction contragredient(const ClassFunction &a, const GroupData &gd);

struct PermCharStats {
  ClassFunction character;
  long orbit_count = 0;
  Rational rank;          // (chi, chi)
  bool two_transitive = false;
  std::vector<std::string> divisibility_failures; // empty when all pass
};

// Fixed-point character of the natural action on {0..degree-1}.
PermCharStats permutation_character(const GroupData &gd,
                                    const CharacterTable &T);

struct InertiaResult {
  long order = 0;               // |I_G(theta)|
  long orbit_size = 0;          // t = |G : I|
  bool clifford_consistent = false; // chi_H = e(theta_1+...+theta_t)
};

// theta a class function on normal H <= G; chi an irreducible of G used
// for the Clifford consistency check.
InertiaResult inertia_group(const ClassFunction &theta,
                            const CharacterTable &TH, const GroupData &hd,
                            const GroupData &gd, const CharacterTable &TG,
                            int chi_index, const FusionMap &fusion);

struct FrobeniusKernelResult {
  ClassSet kernel_classes; // classes of G
  long order = 0;
};

// Requires H to satisfy H cap H^x = 1 for x outside H (checked); the
// kernel is constructed character-theoretically from the induced
// generalized characters d 1_G - (d 1_H - theta)^G.
FrobeniusKernelResult frobenius_kernel(const GroupData &gd,
                                       const CharacterTable &TG,
                                       const GroupData &hd);

} // namespace charblock

#endif
