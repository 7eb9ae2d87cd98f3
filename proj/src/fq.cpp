#include "charblock/fq.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charblock {

namespace {

int mod_int(long v, int p) {
  long r = v % p;
  if (r < 0)
    r += p;
  return static_cast<int>(r);
}

int inv_mod_p(int a, int p) {
  a %= p;
  if (a < 0)
    a += p;
  if (a == 0)
    throw std::runtime_error("inverse of 0 mod p");
  int t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int q = r / nr;
    int tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0)
    t += p;
  return t;
}

void trim_poly(std::vector<int> &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

} // namespace

long multiplicative_order(long a, long n) {
  if (n == 1)
    return 1;
  a %= n;
  if (a < 0)
    a += n;
  if (std::gcd(a, n) != 1)
    throw std::runtime_error("multiplicative_order: arguments not coprime");
  long v = a % n, k = 1;
  while (v != 1) {
    v = (v * a) % n;
    ++k;
  }
  return k;
}

std::vector<int> poly_mod_p(const std::vector<Integer> &f, int p) {
  std::vector<int> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Integer m = f[i] % p;
    if (m < 0)
      m += p;
    r[i] = static_cast<int>(m.get_si());
  }
  trim_poly(r);
  return r;
}

std::vector<int> poly_mul_mod_p(const std::vector<int> &a,
                                const std::vector<int> &b, int p) {
  if (a.empty() || b.empty())
    return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i])
      continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = mod_int(r[i + j] + static_cast<long>(a[i]) * b[j], p);
  }
  trim_poly(r);
  return r;
}

std::vector<int> poly_rem_mod_p(std::vector<int> a, const std::vector<int> &b,
                                int p) {
  int db = static_cast<int>(b.size()) - 1;
  int lead_inv = inv_mod_p(b.back(), p);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int c = mod_int(static_cast<long>(a[static_cast<size_t>(i)]) * lead_inv, p);
    if (!c)
      continue;
    for (int j = 0; j <= db; ++j)
      a[static_cast<size_t>(i - db + j)] =
          mod_int(a[static_cast<size_t>(i - db + j)] -
                      static_cast<long>(c) * b[static_cast<size_t>(j)],
                  p);
  }
  trim_poly(a);
  return a;
}

bool poly_divides_mod_p(const std::vector<int> &d, const std::vector<int> &f,
                        int p) {
  return poly_rem_mod_p(f, d, p).empty();
}

std::vector<std::vector<int>> cyclotomic_factors_mod_p(long mprime, int p) {
  if (mprime % p == 0)
    throw std::runtime_error("cyclotomic_factors_mod_p: p divides m'");
  std::vector<int> phi = poly_mod_p(cyclotomic_polynomial(mprime), p);
  long d = multiplicative_order(p, mprime);
  std::vector<std::vector<int>> out;
  long count = euler_phi(mprime) / d;
  // candidates: monic of degree d, coefficient tuple c_0..c_{d-1} ascending
  long total = 1;
  for (long i = 0; i < d; ++i)
    total *= p;
  for (long code = 0; code < total; ++code) {
    std::vector<int> cand(static_cast<size_t>(d) + 1);
    long c = code;
    for (long i = 0; i < d; ++i) {
      cand[static_cast<size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    cand[static_cast<size_t>(d)] = 1;
    if (poly_divides_mod_p(cand, phi, p)) {
      out.push_back(cand);
      if (static_cast<long>(out.size()) == count)
        break;
    }
  }
  if (static_cast<long>(out.size()) != count)
    throw std::runtime_error("cyclotomic factor search failed");
  return out;
}

FqField::FqField(int p, std::vector<int> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (p_ < 2)
    throw std::runtime_error("FqField: bad characteristic");
  trim_poly(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw std::runtime_error("FqField: modulus must be monic of degree >= 1");
}

FqElem FqField::from_int(long v) const {
  FqElem e = zero();
  e.c[0] = mod_int(v, p_);
  return e;
}

FqElem FqField::from_integer(const Integer &v) const {
  Integer m = v % p_;
  if (m < 0)
    m += p_;
  return from_int(m.get_si());
}

FqElem FqField::gen() const {
  FqElem e = zero();
  if (degree() < 2)
    throw std::runtime_error("FqField::gen: prime field has no generator x");
  e.c[1] = 1;
  return e;
}

FqElem FqField::add(const FqElem &a, const FqElem &b) const {
  FqElem r = a;
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = mod_int(r.c[i] + b.c[i], p_);
  return r;
}

FqElem FqField::sub(const FqElem &a, const FqElem &b) const {
  FqElem r = a;
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = mod_int(r.c[i] - b.c[i], p_);
  return r;
}

FqElem FqField::neg(const FqElem &a) const {
  FqElem r = a;
  for (auto &x : r.c)
    x = mod_int(-x, p_);
  return r;
}

FqElem FqField::mul(const FqElem &a, const FqElem &b) const {
  std::vector<int> prod = poly_mul_mod_p(a.c, b.c, p_);
  prod = poly_rem_mod_p(std::move(prod), modulus_, p_);
  prod.resize(static_cast<size_t>(degree()), 0);
  return FqElem{std::move(prod)};
}

FqElem FqField::inv(const FqElem &a) const {
  if (a.is_zero())
    throw std::runtime_error("FqField: inverse of zero");
  // extended Euclid in F_p[x]
  std::vector<int> r0 = modulus_, r1 = a.c;
  trim_poly(r1);
  std::vector<int> t0, t1{1};
  while (!r1.empty()) {
    // r0 = q r1 + r2
    std::vector<int> q;
    {
      std::vector<int> rem = r0;
      int d1 = static_cast<int>(r1.size()) - 1;
      int lead_inv = inv_mod_p(r1.back(), p_);
      q.assign(std::max<size_t>(rem.size() > r1.size() - 1
                                    ? rem.size() - r1.size() + 1
                                    : 1,
                                1),
               0);
      for (int i = static_cast<int>(rem.size()) - 1; i >= d1; --i) {
        int c = mod_int(static_cast<long>(rem[static_cast<size_t>(i)]) *
                            lead_inv,
                        p_);
        if (!c)
          continue;
        q[static_cast<size_t>(i - d1)] = c;
        for (int j = 0; j <= d1; ++j)
          rem[static_cast<size_t>(i - d1 + j)] =
              mod_int(rem[static_cast<size_t>(i - d1 + j)] -
                          static_cast<long>(c) * r1[static_cast<size_t>(j)],
                      p_);
      }
      trim_poly(rem);
      r0 = std::move(r1);
      r1 = std::move(rem);
    }
    std::vector<int> qt = poly_mul_mod_p(q, t1, p_);
    std::vector<int> t2 = t0;
    if (t2.size() < qt.size())
      t2.resize(qt.size(), 0);
    for (size_t i = 0; i < qt.size(); ++i)
      t2[i] = mod_int(t2[i] - qt[i], p_);
    trim_poly(t2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd (a unit since modulus is irreducible)
  if (r0.size() != 1)
    throw std::runtime_error("FqField: modulus not irreducible");
  int scale = inv_mod_p(r0[0], p_);
  std::vector<int> res = t0;
  for (auto &x : res)
    x = mod_int(static_cast<long>(x) * scale, p_);
  res = poly_rem_mod_p(std::move(res), modulus_, p_);
  res.resize(static_cast<size_t>(degree()), 0);
  return FqElem{std::move(res)};
}

FqElem FqField::pow(const FqElem &a, long e) const {
  if (e < 0)
    return pow(inv(a), -e);
  FqElem base = a, r = one();
  while (e > 0) {
    if (e & 1)
      r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string FqField::to_string(const FqElem &a) const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i)
      os << ' ';
    os << a.c[i];
  }
  os << ']';
  return os.str();
}

long fq_matrix_rank(const FqField &F, FqMatrix m) {
  if (m.empty())
    return 0;
  size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pr = row;
    while (pr < rows && m[pr][col].is_zero())
      ++pr;
    if (pr == rows)
      continue;
    std::swap(m[pr], m[row]);
    FqElem iv = F.inv(m[row][col]);
    for (size_t c = col; c < cols; ++c)
      m[row][c] = F.mul(m[row][c], iv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero())
        continue;
      FqElem f = m[r][col];
      for (size_t c = col; c < cols; ++c)
        m[r][c] = F.sub(m[r][c], F.mul(f, m[row][c]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

StarMap::StarMap(int p, long conductor_bound)
    : StarMap(p, conductor_bound, {}) {}

StarMap::StarMap(int p, long conductor_bound, std::vector<int> factor)
    : p_(p), mprime_(conductor_bound), factor_(std::move(factor)),
      field_(FqField::prime_field(p)) {
  while (mprime_ % p_ == 0)
    mprime_ /= p_;
  if (factor_.empty())
    factor_ = cyclotomic_factors_mod_p(mprime_, p_).front();
  else if (!poly_divides_mod_p(factor_,
                               poly_mod_p(cyclotomic_polynomial(mprime_), p_),
                               p_))
    throw std::runtime_error("StarMap: factor does not divide Phi_{m'} mod p");
  field_ = FqField(p_, factor_);
}

FqElem StarMap::reduce(const Cyclo &v) const {
  long n = v.conductor();
  long npp = n; // p-part
  long nprime = n;
  long pa = 1;
  while (nprime % p_ == 0) {
    nprime /= p_;
    pa *= p_;
  }
  npp = pa;
  if (mprime_ % nprime != 0)
    throw std::runtime_error("star map: conductor exceeds map capacity");
  // zeta_n^{A p^a} = zeta_{n'}^A with A = (p^a)^{-1} mod n', so
  // star(zeta_n) = theta^{A m'/n'} (the p-power part maps to 1)
  long a_coef = 0;
  if (nprime > 1) {
    long r = npp % nprime;
    for (long k = 0; k < nprime; ++k)
      if ((r * k) % nprime == 1) {
        a_coef = k;
        break;
      }
    if (a_coef == 0)
      throw std::runtime_error("star map: CRT failure");
  }
  long theta_exp_unit = nprime == 1 ? 0 : (mprime_ / nprime);
  FqElem theta = field_.degree() >= 2
                     ? field_.gen()
                     : field_.from_int(mod_int(-factor_[0], p_));
  FqElem acc = field_.zero();
  const auto &coeffs = v.coeffs();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0)
      continue;
    const Rational &q = coeffs[i];
    Integer den = q.get_den();
    if (den % p_ == 0)
      throw std::runtime_error("star map: value is not p-integral");
    Integer num_m = q.get_num() % p_;
    if (num_m < 0)
      num_m += p_;
    Integer den_m = den % p_;
    int c = mod_int(num_m.get_si() *
                        inv_mod_p(static_cast<int>(den_m.get_si()), p_),
                    p_);
    if (!c)
      continue;
    // star(zeta_n^i) = theta^{i * A * (m'/n') mod m'}
    long e = nprime == 1
                 ? 0
                 : ((static_cast<long>(i) % nprime) * a_coef % nprime) *
                       theta_exp_unit;
    FqElem term = field_.mul(field_.pow(theta, e), field_.from_int(c));
    acc = field_.add(acc, term);
  }
  return acc;
}

} // namespace charblock
