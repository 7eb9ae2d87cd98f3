#ifndef CHARBLOCK_CHARTAB_HPP
#define CHARBLOCK_CHARTAB_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "charblock/classalg.hpp"
#include "charblock/cyclo.hpp"
#include "charblock/perm.hpp"

namespace charblock {

struct ClassInfo {
  std::string name;
  long size = 0;
  long centralizer = 0;
  int order = 0;
  std::map<int, int> powermaps; // prime -> class index
};

/// Ordinary character table: class metadata plus the |Irr| x |K| matrix of
/// exact cyclotomic values.  Both the computed artifact and the parsed
/// table-file form.
class CharacterTable {
public:
  std::string name;
  long group_order = 0;
  long exponent = 0;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<Cyclo>> irr; // rows

  int class_count() const { return static_cast<int>(classes.size()); }
  int irr_count() const { return static_cast<int>(irr.size()); }
  const Cyclo &value(int chi, int k) const {
    return irr[static_cast<size_t>(chi)][static_cast<size_t>(k)];
  }
  int identity_class() const; // throws if missing
  Rational degree(int chi) const;
  int class_index(const std::string &name) const; // -1 if missing

  // structural sanity: square, class sizes sum to |G|, |K|*|C| = |G|,
  // principal row present; throws on violation
  void check_basic() const;
};

/// Table of central characters omega_chi(K^) = |K| chi(x_K) / chi(1).
struct CentralCharTable {
  std::vector<std::vector<Cyclo>> omega;
};

struct GroupData {
  PermGroup G;
  ConjClasses cc;
};

GroupData make_group_data(PermGroup G);

// Class metadata (names, sizes, centralizers, orders, prime power maps)
// in the canonical ordering.
std::vector<ClassInfo> class_infos(const PermGroup &G, const ConjClasses &cc);

/// Burnside-Dixon: simultaneous diagonalization of the class matrices over
/// F_l (l = 1 mod exp G, l > 2 sqrt|G|), exact lift to Q(zeta_m).
CharacterTable compute_table(const GroupData &gd, const StructureConstants &sc,
                             const std::string &name = "G",
                             unsigned long seed = 0);
CharacterTable compute_table(const GroupData &gd,
                             const std::string &name = "G",
                             unsigned long seed = 0);

CentralCharTable central_characters(const CharacterTable &T);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// First and second orthogonality relations, checked exactly.
VerifyReport verify_orthogonality(const CharacterTable &T);

// Exact determinant and the identity det^2 = (-1)^l prod |C_G(x_K)| with
// l the number of complex-conjugate row pairs.
struct DeterminantResult {
  Cyclo value;
  int conjugate_pairs = 0;
  bool check = false;
};
DeterminantResult table_determinant(const CharacterTable &T);

using ClassSet = std::set<int>; // set of class indices

struct NormalSubgroupInfo {
  ClassSet classes;
  long order = 0;
};

struct StructureReport {
  std::vector<ClassSet> kernels;  // per character
  std::vector<ClassSet> centres;  // Z(chi) per character
  std::vector<NormalSubgroupInfo> normal_subgroups; // sorted by order
  ClassSet derived_subgroup;
  long derived_order = 0;
  ClassSet centre;
  long centre_order = 0;
  long linear_count = 0;
  bool solvable = false;
  bool nilpotent = false;
};

StructureReport structure_report(const CharacterTable &T);

// kappa(x_K) = sum_chi |G|/chi(1) * chi(x_K); exact nonnegative integers
// counting commutator representations.
std::vector<Integer> commutator_counts(const CharacterTable &T);

// Row permutation induced by the Galois twist sigma_k (entrywise); throws
// if a twisted row is not in the table.
std::vector<int> galois_conjugate_table(const CharacterTable &T, long k);

// Acceptance relation for golden tables: equal up to row permutation and
// one global Galois automorphism (columns identified by class name).
bool tables_match_up_to_galois(const CharacterTable &computed,
                               const CharacterTable &golden,
                               long *matched_k = nullptr);

} // namespace charblock

#endif
