#include "charblock/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charblock {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0)
        m /= p;
    }
  }
  if (m > 1)
    result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<Rational>; // dense, constant term first

int degree(const Poly &f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<size_t>(i)] != 0)
      return i;
  return -1;
}

void trim(Poly &f) { f.resize(static_cast<size_t>(degree(f) + 1)); }

Poly mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

// in-place remainder of f by monic g
void mod_monic(Poly &f, const Poly &g) {
  int dg = degree(g);
  for (int i = degree(f); i >= dg; --i) {
    Rational q = f[static_cast<size_t>(i)];
    if (q == 0)
      continue;
    for (int j = 0; j <= dg; ++j)
      f[static_cast<size_t>(i - dg + j)] -= q * g[static_cast<size_t>(j)];
  }
  trim(f);
}


// extended Euclid: returns (g, u) with u*a = g mod m, g = gcd(a, m), g monic
std::pair<Poly, Poly> half_ext_gcd(Poly a, Poly m) {
  Poly u0{Rational(1)}, u1{};
  Poly r0 = std::move(a), r1 = std::move(m);
  trim(r0);
  trim(r1);
  while (degree(r1) >= 0) {
    // r0 = q*r1 + r2 with deg r2 < deg r1
    Poly r2 = r0;
    int d1 = degree(r1);
    Rational lead = r1[static_cast<size_t>(d1)];
    Poly q(static_cast<size_t>(std::max(degree(r0) - d1 + 1, 1)), Rational(0));
    for (int i = degree(r2); i >= d1; --i) {
      Rational c = r2[static_cast<size_t>(i)] / lead;
      if (c == 0)
        continue;
      q[static_cast<size_t>(i - d1)] = c;
      for (int j = 0; j <= d1; ++j)
        r2[static_cast<size_t>(i - d1 + j)] -= c * r1[static_cast<size_t>(j)];
    }
    trim(r2);
    Poly qu = mul(q, u1);
    Poly u2 = u0;
    if (u2.size() < qu.size())
      u2.resize(qu.size(), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i)
      u2[i] -= qu[i];
    trim(u2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  int d = degree(r0);
  if (d >= 0 && r0[static_cast<size_t>(d)] != 1) {
    Rational lead = r0[static_cast<size_t>(d)];
    for (auto &c : r0)
      c /= lead;
    for (auto &c : u0)
      c /= lead;
  }
  return {r0, u0};
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i)
        d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// power table zeta^j mod Phi_n for j in [0, n), cached per conductor
struct ConductorData {
  Poly phi;                      // Phi_n over Q
  std::vector<Poly> zeta_powers; // n entries, each of length phi(n)
};

const ConductorData &conductor_data(long n) {
  static std::map<long, ConductorData> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;

  ConductorData data;
  const auto &phi_int = cyclotomic_polynomial(n);
  data.phi.reserve(phi_int.size());
  for (const auto &c : phi_int)
    data.phi.emplace_back(c);
  size_t deg = phi_int.size() - 1;
  data.zeta_powers.resize(static_cast<size_t>(n));
  for (long j = 0; j < n; ++j) {
    Poly x(static_cast<size_t>(j) + 1, Rational(0));
    x[static_cast<size_t>(j)] = 1;
    mod_monic(x, data.phi);
    x.resize(deg, Rational(0));
    data.zeta_powers[static_cast<size_t>(j)] = std::move(x);
  }
  return cache.emplace(n, std::move(data)).first->second;
}

} // namespace

const std::vector<Integer> &cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Integer>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto compute = [&](long k, auto &&self) -> const std::vector<Integer> & {
    auto it = cache.find(k);
    if (it != cache.end())
      return it->second;
    // x^k - 1 divided by Phi_d for all proper divisors d
    std::vector<Integer> f(static_cast<size_t>(k) + 1, Integer(0));
    f[0] = -1;
    f[static_cast<size_t>(k)] = 1;
    for (long d : divisors(k)) {
      if (d == k)
        continue;
      const auto &g = self(d, self);
      // exact division of f by monic g
      std::vector<Integer> q(f.size() - g.size() + 1, Integer(0));
      std::vector<Integer> r = f;
      int dg = static_cast<int>(g.size()) - 1;
      for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
        Integer c = r[static_cast<size_t>(i)];
        if (c == 0)
          continue;
        q[static_cast<size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j)
          r[static_cast<size_t>(i - dg + j)] -= c * g[static_cast<size_t>(j)];
      }
      f = std::move(q);
    }
    return cache.emplace(k, std::move(f)).first->second;
  };
  return compute(n, compute);
}

Cyclo Cyclo::root_of_unity(long n, long k) {
  if (n <= 0)
    throw std::runtime_error("root_of_unity: conductor must be positive");
  k %= n;
  if (k < 0)
    k += n;
  long g = gcd_long(n, k == 0 ? n : k);
  n /= g;
  k /= g; // now primitive n-th root (or 1)
  if (n == 1)
    return Cyclo(1);
  const auto &data = conductor_data(n);
  return make_reduced(n, data.zeta_powers[static_cast<size_t>(k)]);
}

bool Cyclo::is_zero() const {
  for (const auto &c : c_)
    if (c != 0)
      return false;
  return true;
}

Rational Cyclo::rational_value() const {
  if (n_ != 1)
    throw std::runtime_error("rational_value: value is irrational");
  return c_[0];
}

bool Cyclo::is_integral() const {
  for (const auto &c : c_)
    if (c.get_den() != 1)
      return false;
  return true;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto &c : r.c_)
    c = -c;
  return r;
}

std::vector<Rational> Cyclo::lifted_to(long m) const {
  if (m == n_)
    return c_;
  const auto &data = conductor_data(m);
  long step = m / n_;
  std::vector<Rational> out(static_cast<size_t>(euler_phi(m)), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    const Poly &z = data.zeta_powers[static_cast<size_t>(
        (static_cast<long>(i) * step) % m)];
    for (size_t j = 0; j < out.size(); ++j)
      out[j] += c_[i] * z[j];
  }
  return out;
}

Cyclo operator+(const Cyclo &a, const Cyclo &b) {
  long m = lcm_long(a.n_, b.n_);
  auto ca = a.lifted_to(m);
  auto cb = b.lifted_to(m);
  for (size_t i = 0; i < ca.size(); ++i)
    ca[i] += cb[i];
  return Cyclo::make_reduced(m, std::move(ca));
}

Cyclo operator-(const Cyclo &a, const Cyclo &b) {
  long m = lcm_long(a.n_, b.n_);
  auto ca = a.lifted_to(m);
  auto cb = b.lifted_to(m);
  for (size_t i = 0; i < ca.size(); ++i)
    ca[i] -= cb[i];
  return Cyclo::make_reduced(m, std::move(ca));
}

Cyclo operator*(const Cyclo &a, const Cyclo &b) {
  long m = lcm_long(a.n_, b.n_);
  auto ca = a.lifted_to(m);
  auto cb = b.lifted_to(m);
  Poly prod = mul(ca, cb);
  mod_monic(prod, conductor_data(m).phi);
  prod.resize(static_cast<size_t>(euler_phi(m)), Rational(0));
  return Cyclo::make_reduced(m, std::move(prod));
}

Cyclo operator/(const Cyclo &a, const Cyclo &b) {
  if (b.is_zero())
    throw std::runtime_error("cyclotomic division by zero");
  if (b.is_rational()) {
    Cyclo r = a;
    for (auto &c : r.c_)
      c /= b.c_[0];
    return r; // scaling does not change the conductor
  }
  long m = lcm_long(a.n_, b.n_);
  auto cb = b.lifted_to(m);
  const Poly &phi = conductor_data(m).phi;
  auto [g, u] = half_ext_gcd(cb, phi);
  if (degree(g) != 0)
    throw std::runtime_error("cyclotomic inverse failed"); // not coprime: impossible in a field
  for (auto &c : u)
    c /= g[0];
  Poly prod = mul(a.lifted_to(m), u);
  mod_monic(prod, phi);
  prod.resize(static_cast<size_t>(euler_phi(m)), Rational(0));
  return Cyclo::make_reduced(m, std::move(prod));
}

Cyclo Cyclo::galois(long k) const {
  long n = n_;
  k %= n;
  if (k < 0)
    k += n;
  if (n == 1)
    return *this;
  if (gcd_long(k, n) != 1)
    throw std::runtime_error("galois: exponent not coprime to conductor");
  const auto &data = conductor_data(n);
  std::vector<Rational> out(c_.size(), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    const Poly &z =
        data.zeta_powers[static_cast<size_t>((static_cast<long>(i) * k) % n)];
    for (size_t j = 0; j < out.size(); ++j)
      out[j] += c_[i] * z[j];
  }
  // automorphisms preserve every cyclotomic subfield, so the conductor
  // stays minimal
  return Cyclo(n, std::move(out));
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> r(0.0, 0.0);
  const double two_pi = 8.0 * std::atan(1.0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    double arg = two_pi * static_cast<double>(i) / static_cast<double>(n_);
    r += c_[i].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return r;
}

Cyclo Cyclo::make_reduced(long n, std::vector<Rational> c) {
  Cyclo v(n, std::move(c));
  v.reduce();
  return v;
}

void Cyclo::reduce() {
  if (n_ == 1)
    return;
  if (is_zero()) {
    n_ = 1;
    c_.assign(1, Rational(0));
    return;
  }
  for (long d : divisors(n_)) {
    if (d == n_ && n_ % 4 != 2)
      break; // already minimal under the convention
    if (d % 4 == 2)
      continue; // Q(zeta_d) = Q(zeta_{d/2}), prefer the smaller conductor
    // fixed by Gal(Q(zeta_n)/Q(zeta_d))?
    bool fixed = true;
    for (long k = 1 + d; k < n_ && fixed; k += d)
      if (gcd_long(k, n_) == 1 && galois(k) != *this)
        fixed = false;
    if (!fixed)
      continue;
    if (d == 1) {
      // rational: the basis vector 1 has coefficient c_[0], rest must vanish
      // (they do, by the Galois fixedness, via the solve below) -- but solve
      // explicitly to stay uniform.
    }
    // express in the power basis of Q(zeta_d) by solving a linear system
    long dphi = euler_phi(d);
    long nphi = static_cast<long>(c_.size());
    const auto &data = conductor_data(n_);
    long step = n_ / d;
    // columns: lift of zeta_d^i, i < dphi
    std::vector<std::vector<Rational>> cols(static_cast<size_t>(dphi));
    for (long i = 0; i < dphi; ++i)
      cols[static_cast<size_t>(i)] =
          data.zeta_powers[static_cast<size_t>((i * step) % n_)];
    // Gaussian elimination on the (nphi x dphi) system cols * x = c_
    std::vector<std::vector<Rational>> m(static_cast<size_t>(nphi));
    for (long r = 0; r < nphi; ++r) {
      m[static_cast<size_t>(r)].resize(static_cast<size_t>(dphi) + 1);
      for (long cc = 0; cc < dphi; ++cc)
        m[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
            cols[static_cast<size_t>(cc)][static_cast<size_t>(r)];
      m[static_cast<size_t>(r)][static_cast<size_t>(dphi)] =
          c_[static_cast<size_t>(r)];
    }
    std::vector<long> pivot_row(static_cast<size_t>(dphi), -1);
    long row = 0;
    for (long col = 0; col < dphi && row < nphi; ++col) {
      long pr = -1;
      for (long r = row; r < nphi; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
          pr = r;
          break;
        }
      if (pr < 0)
        continue;
      std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(row)]);
      Rational lead = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
      for (long cc = col; cc <= dphi; ++cc)
        m[static_cast<size_t>(row)][static_cast<size_t>(cc)] /= lead;
      for (long r = 0; r < nphi; ++r) {
        if (r == row)
          continue;
        Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
        if (f == 0)
          continue;
        for (long cc = col; cc <= dphi; ++cc)
          m[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
              f * m[static_cast<size_t>(row)][static_cast<size_t>(cc)];
      }
      pivot_row[static_cast<size_t>(col)] = row;
      ++row;
    }
    bool consistent = true;
    for (long r = row; r < nphi && consistent; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(dphi)] != 0)
        consistent = false;
    if (!consistent)
      continue; // value not in Q(zeta_d); try the next divisor
    std::vector<Rational> nc(static_cast<size_t>(dphi), Rational(0));
    for (long col = 0; col < dphi; ++col)
      if (pivot_row[static_cast<size_t>(col)] >= 0)
        nc[static_cast<size_t>(col)] =
            m[static_cast<size_t>(pivot_row[static_cast<size_t>(col)])]
             [static_cast<size_t>(dphi)];
    n_ = d;
    c_ = std::move(nc);
    return;
  }
}

int Cyclo::compare(const Cyclo &a, const Cyclo &b) {
  if (a.n_ == 1 && b.n_ == 1)
    return cmp(a.c_[0], b.c_[0]);
  if (a.n_ != b.n_)
    return a.n_ < b.n_ ? -1 : 1;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0)
      return c;
  }
  return 0;
}

namespace {

void append_rational(std::ostringstream &os, const Rational &q, bool leading,
                     bool with_atom) {
  Rational a = q < 0 ? Rational(-q) : q;
  if (q < 0)
    os << '-';
  else if (!leading)
    os << '+';
  if (!with_atom) {
    os << a.get_str();
  } else if (a != 1) {
    os << a.get_str() << '*';
  }
}

} // namespace

std::string Cyclo::to_string() const {
  if (n_ == 1) {
    return c_[0].get_str();
  }
  std::ostringstream os;
  bool leading = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    if (i == 0) {
      append_rational(os, c_[i], leading, false);
    } else {
      append_rational(os, c_[i], leading, true);
      os << "E(" << n_ << ')';
      if (i > 1)
        os << '^' << i;
    }
    leading = false;
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string &s;
  size_t pos = 0;

  explicit Parser(const std::string &str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw std::runtime_error("cyclo parse error: expected '" +
                               std::string(1, c) + "' at position " +
                               std::to_string(pos) + " in \"" + s + "\"");
  }

  Integer parse_unsigned() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw std::runtime_error("cyclo parse error: expected integer at position " +
                               std::to_string(pos) + " in \"" + s + "\"");
    return Integer(s.substr(start, pos - start));
  }

  Rational parse_rat() {
    Integer num = parse_unsigned();
    if (accept('/')) {
      Integer den = parse_unsigned();
      if (den == 0)
        throw std::runtime_error("cyclo parse error: zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Cyclo parse_atom() {
    expect('E');
    expect('(');
    Integer n = parse_unsigned();
    expect(')');
    long k = 1;
    if (accept('^')) {
      bool neg = accept('-');
      Integer e = parse_unsigned();
      k = e.get_si() * (neg ? -1 : 1);
    }
    return Cyclo::root_of_unity(n.get_si(), k);
  }

  // term := rat | rat '*' atom | atom
  Cyclo parse_term() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'E')
      return parse_atom();
    Rational q = parse_rat();
    if (accept('*'))
      return Cyclo(q) * parse_atom();
    skip_ws();
    if (pos < s.size() && s[pos] == 'E') // allow "2E(3)" as well
      return Cyclo(q) * parse_atom();
    return Cyclo(q);
  }

  Cyclo parse_expr() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Cyclo v = parse_term();
    if (neg)
      v = -v;
    for (;;) {
      skip_ws();
      if (pos >= s.size())
        break;
      if (accept('+'))
        v += parse_term();
      else if (accept('-'))
        v -= parse_term();
      else
        throw std::runtime_error("cyclo parse error: unexpected character '" +
                                 std::string(1, s[pos]) + "' at position " +
                                 std::to_string(pos) + " in \"" + s + "\"");
    }
    return v;
  }
};

} // namespace

Cyclo Cyclo::parse(const std::string &s) {
  Parser p(s);
  Cyclo v = p.parse_expr();
  return v;
}

} // namespace charblock
