#ifndef CHARBLOCK_FQ_HPP
#define CHARBLOCK_FQ_HPP

#include <string>
#include <vector>

#include "charblock/cyclo.hpp"

namespace charblock {

/// Element of F_{p^d}, coefficient vector (constant first) of length d.
struct FqElem {
  std::vector<int> c;

  bool operator==(const FqElem &o) const { return c == o.c; }
  bool operator!=(const FqElem &o) const { return c != o.c; }
  bool operator<(const FqElem &o) const { return c < o.c; }
  bool is_zero() const {
    for (int x : c)
      if (x)
        return false;
    return true;
  }
};

/// F_p[x]/(modulus) with modulus monic irreducible of degree d.
class FqField {
public:
  FqField(int p, std::vector<int> modulus);
  static FqField prime_field(int p) { return FqField(p, {0, 1}); }

  int p() const { return p_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<int> &modulus() const { return modulus_; }

  FqElem zero() const { return FqElem{std::vector<int>(degree(), 0)}; }
  FqElem one() const { return from_int(1); }
  FqElem from_int(long v) const;
  FqElem from_integer(const Integer &v) const;
  FqElem gen() const; // class of x

  FqElem add(const FqElem &a, const FqElem &b) const;
  FqElem sub(const FqElem &a, const FqElem &b) const;
  FqElem neg(const FqElem &a) const;
  FqElem mul(const FqElem &a, const FqElem &b) const;
  FqElem inv(const FqElem &a) const; // throws on zero
  FqElem pow(const FqElem &a, long e) const;

  bool equal_fields(const FqField &o) const {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }

  std::string to_string(const FqElem &a) const; // e.g. "[1 0 1]"

private:
  int p_;
  std::vector<int> modulus_;
};

// ---- polynomial helpers over F_p (dense int vectors, constant first) ----

std::vector<int> poly_mod_p(const std::vector<Integer> &f, int p);
std::vector<int> poly_mul_mod_p(const std::vector<int> &a,
                                const std::vector<int> &b, int p);
// remainder of a by monic b
std::vector<int> poly_rem_mod_p(std::vector<int> a, const std::vector<int> &b,
                                int p);
bool poly_divides_mod_p(const std::vector<int> &d, const std::vector<int> &f,
                        int p);

// All monic irreducible degree-ord_p(m') factors of Phi_{m'} mod p, in
// ascending order of the coefficient tuple read as a base-p number.
std::vector<std::vector<int>> cyclotomic_factors_mod_p(long mprime, int p);

long multiplicative_order(long a, long n);

using FqMatrix = std::vector<std::vector<FqElem>>;

long fq_matrix_rank(const FqField &F, FqMatrix m);

/// Reduction of p-integral cyclotomic values into F_{p^d}: the map sends
/// roots of unity of p-power order to 1 and zeta_{m'} to the canonical
/// root of the chosen irreducible factor of Phi_{m'} mod p.
class StarMap {
public:
  // conductor_bound: any multiple of the conductors to be reduced
  // (typically exp G); m' is its p'-part.
  StarMap(int p, long conductor_bound);
  StarMap(int p, long conductor_bound, std::vector<int> factor);

  int p() const { return p_; }
  long mprime() const { return mprime_; }
  const std::vector<int> &factor() const { return factor_; }
  const FqField &field() const { return field_; }

  // Requires the p'-part of the conductor to divide m' and all coefficient
  // denominators to be coprime to p; throws otherwise.
  FqElem reduce(const Cyclo &v) const;

private:
  int p_;
  long mprime_;
  std::vector<int> factor_;
  FqField field_;
};

} // namespace charblock

#endif
