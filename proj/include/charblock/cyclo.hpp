#ifndef CHARBLOCK_CYCLO_HPP
#define CHARBLOCK_CYCLO_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace charblock {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when input data is mathematically inconsistent (as opposed to
/// unreadable); the command line maps this to its verification-failure
/// exit code.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact element of a cyclotomic field Q(zeta_n), stored in the power
/// basis 1, zeta, ..., zeta^{phi(n)-1} of Q[x]/(Phi_n).  The conductor is
/// kept minimal (and never 2 mod 4), so equality is coefficient equality.
class Cyclo {
public:
  Cyclo() : n_(1), c_(1, Rational(0)) {}
  Cyclo(long v) : n_(1), c_(1, Rational(v)) {}
  Cyclo(const Integer &v) : n_(1), c_(1, Rational(v)) {}
  Cyclo(const Rational &v) : n_(1), c_(1, v) {
    c_[0].canonicalize(); // two-argument mpq_class constructions need this
  }

  // E(n)^k
  static Cyclo root_of_unity(long n, long k = 1);

  long conductor() const { return n_; }
  const std::vector<Rational> &coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  Rational rational_value() const; // requires is_rational()
  // true iff the value lies in Z[zeta_n] (the power basis is integral)
  bool is_integral() const;

  Cyclo operator-() const;
  Cyclo &operator+=(const Cyclo &o) { return *this = *this + o; }
  Cyclo &operator-=(const Cyclo &o) { return *this = *this - o; }
  Cyclo &operator*=(const Cyclo &o) { return *this = *this * o; }

  friend Cyclo operator+(const Cyclo &a, const Cyclo &b);
  friend Cyclo operator-(const Cyclo &a, const Cyclo &b);
  friend Cyclo operator*(const Cyclo &a, const Cyclo &b);
  friend Cyclo operator/(const Cyclo &a, const Cyclo &b); // throws on b == 0

  bool operator==(const Cyclo &o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Cyclo &o) const { return !(*this == o); }

  // Galois automorphism zeta -> zeta^k; requires gcd(k, conductor) = 1.
  Cyclo galois(long k) const;
  // complex conjugation, i.e. galois(-1)
  Cyclo conj() const { return galois(-1); }

  std::complex<double> to_complex() const;

  // Deterministic total order used for canonical row sorting and golden
  // file stability: rationals by value, otherwise (conductor, coeffs).
  static int compare(const Cyclo &a, const Cyclo &b);
  bool operator<(const Cyclo &o) const { return compare(*this, o) < 0; }

  // Serialization in the table-file grammar, e.g. "-E(5)-E(5)^4", "1/2".
  std::string to_string() const;
  static Cyclo parse(const std::string &s); // throws std::runtime_error

private:
  long n_;
  std::vector<Rational> c_;

  Cyclo(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  static Cyclo make_reduced(long n, std::vector<Rational> c);
  std::vector<Rational> lifted_to(long m) const; // n_ | m, length phi(m)
  void reduce();
};

// Phi_n as integer coefficient vector, constant term first, monic.
const std::vector<Integer> &cyclotomic_polynomial(long n);

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

} // namespace charblock

#endif
