#ifndef CHARBLOCK_CLASSALG_HPP
#define CHARBLOCK_CLASSALG_HPP

#include <vector>

#include "charblock/cyclo.hpp"
#include "charblock/perm.hpp"

namespace charblock {

class CharacterTable;

/// Class-algebra structure constants a[K][L][M] with
/// K^ L^ = sum_M a[K][L][M] M^.
struct StructureConstants {
  int classes = 0;
  std::vector<long> a; // dense, indexed [K*classes*classes + L*classes + M]

  long &at(int K, int L, int M) {
    return a[(static_cast<size_t>(K) * classes + L) * classes + M];
  }
  long at(int K, int L, int M) const {
    return a[(static_cast<size_t>(K) * classes + L) * classes + M];
  }
};

// Counting kernel: for fixed z in M, a[K][L][M] = #{x in K : x^{-1} z in L}.
// The OpenMP version parallelizes over the class M; the serial version is
// the reference implementation used for testing and benchmarks.
StructureConstants structure_constants(const PermGroup &G,
                                       const ConjClasses &cc);
StructureConstants structure_constants_serial(const PermGroup &G,
                                              const ConjClasses &cc);

// a_{KLM} = |K||L|/|G| sum_chi chi(x_K) chi(x_L) conj(chi(x_M)) / chi(1);
// throws "table inconsistent" if an entry is not a nonnegative integer.
StructureConstants structure_constants_from_table(const CharacterTable &T);

} // namespace charblock

#endif
