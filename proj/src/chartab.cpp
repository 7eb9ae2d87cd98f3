#include "charblock/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charblock {

int CharacterTable::identity_class() const {
  for (int i = 0; i < class_count(); ++i)
    if (classes[static_cast<size_t>(i)].order == 1)
      return i;
  throw std::runtime_error("table has no identity class");
}

Rational CharacterTable::degree(int chi) const {
  const Cyclo &d = value(chi, identity_class());
  if (!d.is_rational())
    throw std::runtime_error("character degree is not rational");
  return d.rational_value();
}

int CharacterTable::class_index(const std::string &cname) const {
  for (int i = 0; i < class_count(); ++i)
    if (classes[static_cast<size_t>(i)].name == cname)
      return i;
  return -1;
}

void CharacterTable::check_basic() const {
  if (classes.empty() || irr.size() != classes.size())
    throw std::runtime_error("table is not square");
  long sum = 0;
  for (const auto &c : classes) {
    sum += c.size;
    if (c.size * c.centralizer != group_order)
      throw std::runtime_error("class size * centralizer != group order");
  }
  if (sum != group_order)
    throw std::runtime_error("class sizes do not sum to group order");
  for (const auto &row : irr)
    if (row.size() != classes.size())
      throw std::runtime_error("ragged value matrix");
  bool principal = false;
  for (const auto &row : irr) {
    bool all_one = true;
    for (const auto &v : row)
      if (v != Cyclo(1)) {
        all_one = false;
        break;
      }
    if (all_one) {
      principal = true;
      break;
    }
  }
  if (!principal)
    throw std::runtime_error("principal character missing");
}

GroupData make_group_data(PermGroup G) {
  GroupData gd{std::move(G), {}};
  gd.cc = conjugacy_data(gd.G);
  return gd;
}

std::vector<ClassInfo> class_infos(const PermGroup &G, const ConjClasses &cc) {
  std::vector<ClassInfo> infos(static_cast<size_t>(cc.count()));
  std::vector<int> primes;
  long n = G.order();
  for (int p = 2; p <= n; ++p)
    if (is_prime(p) && n % p == 0)
      primes.push_back(p);
  for (int k = 0; k < cc.count(); ++k) {
    auto &ci = infos[static_cast<size_t>(k)];
    ci.name = cc.names[static_cast<size_t>(k)];
    ci.size = cc.sizes[static_cast<size_t>(k)];
    ci.centralizer = cc.centralizer_orders[static_cast<size_t>(k)];
    ci.order = cc.rep_orders[static_cast<size_t>(k)];
    for (int p : primes)
      ci.powermaps[p] = cc.power_class(G, k, p);
  }
  return infos;
}

namespace {

// ---- arithmetic mod the Dixon prime l (l < 2^20, products fit in long) --

long mod_l(long v, long l) {
  v %= l;
  if (v < 0)
    v += l;
  return v;
}

long pow_mod(long b, long e, long l) {
  long r = 1;
  b = mod_l(b, l);
  while (e > 0) {
    if (e & 1)
      r = r * b % l;
    b = b * b % l;
    e >>= 1;
  }
  return r;
}

long inv_mod(long a, long l) { return pow_mod(a, l - 2, l); }

using Mat = std::vector<std::vector<long>>; // row major

// reduced column-echelon basis (as list of column vectors) of the span
std::vector<std::vector<long>> column_reduce(std::vector<std::vector<long>> cols,
                                             long l) {
  size_t r = cols.empty() ? 0 : cols[0].size();
  std::vector<std::vector<long>> basis;
  std::vector<size_t> pivots;
  for (auto &v : cols) {
    for (size_t b = 0; b < basis.size(); ++b) {
      long c = v[pivots[b]];
      if (c == 0)
        continue;
      for (size_t i = 0; i < r; ++i)
        v[i] = mod_l(v[i] - c * basis[b][i], l);
    }
    size_t piv = r;
    for (size_t i = 0; i < r; ++i)
      if (v[i] != 0) {
        piv = i;
        break;
      }
    if (piv == r)
      continue;
    long s = inv_mod(v[piv], l);
    for (size_t i = 0; i < r; ++i)
      v[i] = v[i] * s % l;
    for (size_t b = 0; b < basis.size(); ++b) {
      long c = basis[b][piv];
      if (c == 0)
        continue;
      for (size_t i = 0; i < r; ++i)
        basis[b][i] = mod_l(basis[b][i] - c * v[i], l);
    }
    basis.push_back(v);
    pivots.push_back(piv);
  }
  // keep (basis, pivots) paired and sorted by pivot for determinism
  std::vector<size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
  std::vector<std::vector<long>> out;
  out.reserve(basis.size());
  for (size_t i : idx)
    out.push_back(std::move(basis[i]));
  return out;
}

std::vector<size_t> pivot_rows(const std::vector<std::vector<long>> &basis) {
  std::vector<size_t> piv;
  for (const auto &v : basis)
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        piv.push_back(i);
        break;
      }
  return piv;
}

// characteristic polynomial of a d x d matrix over F_l by Lagrange
// interpolation of det(B - t I) at d+1 points
std::vector<long> char_poly(const Mat &B, long l) {
  size_t d = B.size();
  std::vector<long> xs(d + 1), ys(d + 1);
  for (size_t s = 0; s <= d; ++s) {
    long t = static_cast<long>(s);
    Mat M = B;
    for (size_t i = 0; i < d; ++i)
      M[i][i] = mod_l(M[i][i] - t, l);
    // determinant by elimination
    long det = 1;
    for (size_t col = 0, row = 0; col < d && row < d; ++col) {
      size_t pr = row;
      while (pr < d && M[pr][col] == 0)
        ++pr;
      if (pr == d) {
        det = 0;
        break;
      }
      if (pr != row) {
        std::swap(M[pr], M[row]);
        det = l - det;
        if (det == l)
          det = 0;
      }
      det = det * M[row][col] % l;
      long iv = inv_mod(M[row][col], l);
      for (size_t rr = row + 1; rr < d; ++rr) {
        long f = M[rr][col] * iv % l;
        if (f == 0)
          continue;
        for (size_t cc2 = col; cc2 < d; ++cc2)
          M[rr][cc2] = mod_l(M[rr][cc2] - f * M[row][cc2], l);
      }
      ++row;
    }
    xs[s] = t;
    ys[s] = mod_l(det, l);
  }
  // Lagrange interpolation; result has degree d
  std::vector<long> poly(d + 1, 0);
  for (size_t i = 0; i <= d; ++i) {
    std::vector<long> num{1};
    long denom = 1;
    for (size_t j = 0; j <= d; ++j) {
      if (i == j)
        continue;
      std::vector<long> next(num.size() + 1, 0);
      for (size_t k = 0; k < num.size(); ++k) {
        next[k + 1] = mod_l(next[k + 1] + num[k], l);
        next[k] = mod_l(next[k] - num[k] * xs[j], l);
      }
      num = std::move(next);
      denom = denom * mod_l(xs[i] - xs[j], l) % l;
    }
    long scale = ys[i] * inv_mod(denom, l) % l;
    for (size_t k = 0; k < num.size(); ++k)
      poly[k] = mod_l(poly[k] + scale * num[k], l);
  }
  return poly;
}

long eval_poly(const std::vector<long> &f, long t, long l) {
  long r = 0;
  for (size_t i = f.size(); i-- > 0;)
    r = (r * t + f[i]) % l;
  return r;
}

std::vector<std::vector<long>> kernel_basis(Mat M, long l) {
  size_t d = M.size();
  std::vector<long> pivot_col(d, -1);
  size_t row = 0;
  std::vector<bool> is_pivot(d, false);
  for (size_t col = 0; col < d && row < d; ++col) {
    size_t pr = row;
    while (pr < d && M[pr][col] == 0)
      ++pr;
    if (pr == d)
      continue;
    std::swap(M[pr], M[row]);
    long iv = inv_mod(M[row][col], l);
    for (size_t cc2 = 0; cc2 < d; ++cc2)
      M[row][cc2] = M[row][cc2] * iv % l;
    for (size_t rr = 0; rr < d; ++rr) {
      if (rr == row)
        continue;
      long f = M[rr][col];
      if (f == 0)
        continue;
      for (size_t cc2 = 0; cc2 < d; ++cc2)
        M[rr][cc2] = mod_l(M[rr][cc2] - f * M[row][cc2], l);
    }
    pivot_col[row] = static_cast<long>(col);
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<long>> kernel;
  for (size_t col = 0; col < d; ++col) {
    if (is_pivot[col])
      continue;
    std::vector<long> v(d, 0);
    v[col] = 1;
    for (size_t r2 = 0; r2 < row; ++r2)
      if (pivot_col[r2] >= 0)
        v[static_cast<size_t>(pivot_col[r2])] = mod_l(-M[r2][col], l);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

long choose_dixon_prime(long exponent, long order, int skip) {
  long l = exponent + 1;
  // l = 1 mod m and l^2 > 4|G|
  while (true) {
    if (is_prime(l) && l * l > 4 * order) {
      if (skip == 0)
        return l;
      --skip;
    }
    l += exponent;
  }
}

struct DixonFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CharacterTable dixon_attempt(const GroupData &gd, const StructureConstants &sc,
                             const std::string &name, long l) {
  const PermGroup &G = gd.G;
  const ConjClasses &cc = gd.cc;
  int k = cc.count();
  long n = G.order();
  long m = G.exponent();

  // class matrices (A_K)_{L,M} = a_{KLM} over F_l
  std::vector<Mat> A(static_cast<size_t>(k));
  for (int K = 0; K < k; ++K) {
    Mat M(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(k)));
    for (int L = 0; L < k; ++L)
      for (int Mi = 0; Mi < k; ++Mi)
        M[static_cast<size_t>(L)][static_cast<size_t>(Mi)] =
            mod_l(sc.at(K, L, Mi), l);
    A[static_cast<size_t>(K)] = std::move(M);
  }

  // simultaneous eigenspace splitting
  std::vector<std::vector<std::vector<long>>> spaces;
  {
    std::vector<std::vector<long>> full;
    for (int i = 0; i < k; ++i) {
      std::vector<long> e(static_cast<size_t>(k), 0);
      e[static_cast<size_t>(i)] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (int K = 0; K < k; ++K) {
    bool all_split = true;
    for (const auto &sp : spaces)
      if (sp.size() > 1)
        all_split = false;
    if (all_split)
      break;
    std::vector<std::vector<std::vector<long>>> next;
    for (auto &sp : spaces) {
      size_t d = sp.size();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // restriction of A_K to the subspace (echelon basis, read off at
      // pivot rows)
      auto piv = pivot_rows(sp);
      Mat B(d, std::vector<long>(d, 0));
      for (size_t j = 0; j < d; ++j) {
        std::vector<long> img(static_cast<size_t>(k), 0);
        for (int rr = 0; rr < k; ++rr) {
          long acc = 0;
          for (int ccol = 0; ccol < k; ++ccol)
            acc = (acc + A[static_cast<size_t>(K)][static_cast<size_t>(rr)]
                             [static_cast<size_t>(ccol)] *
                             sp[j][static_cast<size_t>(ccol)]) %
                  l;
          img[static_cast<size_t>(rr)] = acc;
        }
        for (size_t i = 0; i < d; ++i)
          B[i][j] = img[piv[i]];
        // consistency: A_K must preserve the subspace
        std::vector<long> recon(static_cast<size_t>(k), 0);
        for (size_t i = 0; i < d; ++i)
          for (int rr = 0; rr < k; ++rr)
            recon[static_cast<size_t>(rr)] =
                (recon[static_cast<size_t>(rr)] +
                 B[i][j] * sp[i][static_cast<size_t>(rr)]) %
                l;
        if (recon != img)
          throw DixonFailure("class matrix does not preserve subspace");
      }
      auto cp = char_poly(B, l);
      std::vector<long> roots;
      for (long t = 0; t < l; ++t)
        if (eval_poly(cp, t, l) == 0)
          roots.push_back(t);
      size_t found = 0;
      for (long t : roots) {
        Mat Bt = B;
        for (size_t i = 0; i < d; ++i)
          Bt[i][i] = mod_l(Bt[i][i] - t, l);
        auto ker = kernel_basis(Bt, l);
        if (ker.empty())
          continue;
        // map back to ambient coordinates
        std::vector<std::vector<long>> sub;
        for (const auto &v : ker) {
          std::vector<long> w(static_cast<size_t>(k), 0);
          for (size_t i = 0; i < d; ++i)
            for (int rr = 0; rr < k; ++rr)
              w[static_cast<size_t>(rr)] =
                  (w[static_cast<size_t>(rr)] +
                   v[i] * sp[i][static_cast<size_t>(rr)]) %
                  l;
          sub.push_back(std::move(w));
        }
        sub = column_reduce(std::move(sub), l);
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d)
        throw DixonFailure("eigenspace splitting failure");
    }
    spaces = std::move(next);
  }
  for (const auto &sp : spaces)
    if (sp.size() != 1)
      throw DixonFailure("eigenspace splitting failure");

  // normalize eigenvectors: omega(1^) = 1
  int one = -1;
  for (int i = 0; i < k; ++i)
    if (cc.rep_orders[static_cast<size_t>(i)] == 1)
      one = i;
  if (one < 0)
    throw std::runtime_error("identity class missing");
  std::vector<std::vector<long>> omega;
  for (const auto &sp : spaces) {
    std::vector<long> v = sp[0];
    if (v[static_cast<size_t>(one)] == 0)
      throw DixonFailure("eigenvector vanishes at the identity class");
    long s = inv_mod(v[static_cast<size_t>(one)], l);
    for (auto &x : v)
      x = x * s % l;
    omega.push_back(std::move(v));
  }

  // degrees: d^2 = |G| / sum_K v_K v_{K~} / |K|
  std::vector<long> degree(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    long s = 0;
    for (int K = 0; K < k; ++K) {
      long vk = omega[static_cast<size_t>(i)][static_cast<size_t>(K)];
      long vkinv = omega[static_cast<size_t>(i)][static_cast<size_t>(
          cc.inverse_map[static_cast<size_t>(K)])];
      s = (s + vk * vkinv % l *
                   inv_mod(mod_l(cc.sizes[static_cast<size_t>(K)], l), l)) %
          l;
    }
    if (s == 0)
      throw DixonFailure("degree computation failed");
    long d2 = mod_l(n, l) * inv_mod(s, l) % l;
    long d = 0;
    for (long t = 1; t * t <= n; ++t)
      if (t * t % l == d2) {
        d = t;
        break;
      }
    if (d == 0)
      throw DixonFailure("no degree matches the eigenvector");
    degree[static_cast<size_t>(i)] = d;
  }

  // fixed m-th root of unity mod l: z = g^((l-1)/m) for the least
  // primitive root g
  std::vector<long> lm1_primes;
  {
    long q = l - 1;
    for (long f = 2; f * f <= q; ++f)
      if (q % f == 0) {
        lm1_primes.push_back(f);
        while (q % f == 0)
          q /= f;
      }
    if (q > 1)
      lm1_primes.push_back(q);
  }
  long z = 0;
  for (long g = 2; g < l && z == 0; ++g) {
    bool primitive = true;
    for (long q : lm1_primes)
      if (pow_mod(g, (l - 1) / q, l) == 1) {
        primitive = false;
        break;
      }
    if (primitive)
      z = pow_mod(g, (l - 1) / m, l);
  }
  if (z == 0)
    throw DixonFailure("no primitive root found");

  // lift chi(x_K) = sum_j c_j zeta_o^j via c_j = (1/o) sum_t chi(x_K^t)
  // zeta_o^{-jt} mod l
  auto chi_mod = [&](int i, int K) {
    return degree[static_cast<size_t>(i)] %l *
           omega[static_cast<size_t>(i)][static_cast<size_t>(K)] % l *
           inv_mod(mod_l(cc.sizes[static_cast<size_t>(K)], l), l) % l;
  };
  std::vector<std::vector<Cyclo>> rows(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(k));
    for (int K = 0; K < k; ++K) {
      long o = cc.rep_orders[static_cast<size_t>(K)];
      long zo = pow_mod(z, m / o, l);
      std::vector<int> power_class(static_cast<size_t>(o));
      for (long t = 0; t < o; ++t)
        power_class[static_cast<size_t>(t)] = cc.power_class(gd.G, K, t);
      Cyclo val;
      long total = 0;
      long oinv = inv_mod(o % l, l);
      for (long j = 0; j < o; ++j) {
        long cj = 0;
        for (long t = 0; t < o; ++t) {
          long chit = chi_mod(i, power_class[static_cast<size_t>(t)]);
          cj = (cj + chit * pow_mod(zo, mod_l(-j * t, o), l)) % l;
        }
        cj = cj * oinv % l;
        if (cj > degree[static_cast<size_t>(i)])
          throw DixonFailure("lifted multiplicity out of range");
        total += cj;
        if (cj != 0)
          val += Cyclo(cj) * Cyclo::root_of_unity(o, j);
      }
      if (total != degree[static_cast<size_t>(i)])
        throw DixonFailure("multiplicities do not sum to the degree");
      rows[static_cast<size_t>(i)][static_cast<size_t>(K)] = std::move(val);
    }
  }

  CharacterTable T;
  T.name = name;
  T.group_order = n;
  T.exponent = m;
  T.classes = class_infos(G, cc);
  T.irr = std::move(rows);

  // canonical row order: principal first, then degree, then value-lex
  std::sort(T.irr.begin(), T.irr.end(),
            [&](const std::vector<Cyclo> &a, const std::vector<Cyclo> &b) {
              bool pa = std::all_of(a.begin(), a.end(),
                                    [](const Cyclo &v) { return v == Cyclo(1); });
              bool pb = std::all_of(b.begin(), b.end(),
                                    [](const Cyclo &v) { return v == Cyclo(1); });
              if (pa != pb)
                return pa;
              int da = Cyclo::compare(a[static_cast<size_t>(one)],
                                      b[static_cast<size_t>(one)]);
              if (da != 0)
                return da < 0;
              for (size_t j = 0; j < a.size(); ++j) {
                int c = Cyclo::compare(a[j], b[j]);
                if (c != 0)
                  return c < 0;
              }
              return false;
            });
  return T;
}

} // namespace

CharacterTable compute_table(const GroupData &gd, const StructureConstants &sc,
                             const std::string &name, unsigned long seed) {
  (void)seed; // splitting is deterministic; retries walk the prime list
  long m = gd.G.exponent();
  const int kMaxPrimes = 8;
  std::string last_error;
  for (int attempt = 0; attempt < kMaxPrimes; ++attempt) {
    long l = choose_dixon_prime(m, gd.G.order(), attempt);
    try {
      CharacterTable T = dixon_attempt(gd, sc, name, l);
      // exact validation before returning
      Rational burnside(0);
      for (int i = 0; i < T.irr_count(); ++i)
        burnside += T.degree(i) * T.degree(i);
      if (burnside != Rational(gd.G.order()))
        throw DixonFailure("degree sum check failed");
      VerifyReport vr = verify_orthogonality(T);
      if (!vr.ok)
        throw DixonFailure("orthogonality check failed: " + vr.failures[0]);
      return T;
    } catch (const DixonFailure &e) {
      last_error = e.what();
    }
  }
  throw std::runtime_error("character table computation failed: prime list "
                           "exhausted (" +
                           last_error + ")");
}

CharacterTable compute_table(const GroupData &gd, const std::string &name,
                             unsigned long seed) {
  StructureConstants sc = structure_constants(gd.G, gd.cc);
  return compute_table(gd, sc, name, seed);
}

CentralCharTable central_characters(const CharacterTable &T) {
  CentralCharTable om;
  int one = T.identity_class();
  om.omega.resize(static_cast<size_t>(T.irr_count()));
  for (int i = 0; i < T.irr_count(); ++i) {
    om.omega[static_cast<size_t>(i)].resize(
        static_cast<size_t>(T.class_count()));
    for (int K = 0; K < T.class_count(); ++K) {
      Cyclo w = Cyclo(Rational(T.classes[static_cast<size_t>(K)].size)) *
                T.value(i, K) / T.value(i, one);
      if (!w.is_integral())
        throw VerificationError(
            "central character is not an algebraic integer: table invalid");
      om.omega[static_cast<size_t>(i)][static_cast<size_t>(K)] = std::move(w);
    }
  }
  return om;
}

VerifyReport verify_orthogonality(const CharacterTable &T) {
  VerifyReport rep;
  int k = T.class_count();
  Rational order(T.group_order);
  // first relation: (chi, theta) = delta
  for (int i = 0; i < T.irr_count(); ++i) {
    for (int j = i; j < T.irr_count(); ++j) {
      Cyclo s;
      for (int K = 0; K < k; ++K)
        s += Cyclo(Rational(T.classes[static_cast<size_t>(K)].size)) *
             T.value(i, K) * T.value(j, K).conj();
      s = s / Cyclo(order);
      Cyclo expect = i == j ? Cyclo(1) : Cyclo(0);
      if (s != expect) {
        rep.ok = false;
        std::ostringstream os;
        os << "first orthogonality fails for rows " << i + 1 << "," << j + 1
           << ": got " << s.to_string();
        rep.failures.push_back(os.str());
      }
    }
  }
  // second relation: column sums give centralizer orders
  for (int K = 0; K < k; ++K) {
    for (int L = K; L < k; ++L) {
      Cyclo s;
      for (int i = 0; i < T.irr_count(); ++i)
        s += T.value(i, K) * T.value(i, L).conj();
      Cyclo expect = K == L
                         ? Cyclo(Rational(
                               T.classes[static_cast<size_t>(K)].centralizer))
                         : Cyclo(0);
      if (s != expect) {
        rep.ok = false;
        std::ostringstream os;
        os << "second orthogonality fails for classes "
           << T.classes[static_cast<size_t>(K)].name << ","
           << T.classes[static_cast<size_t>(L)].name << ": got "
           << s.to_string();
        rep.failures.push_back(os.str());
      }
    }
  }
  return rep;
}

DeterminantResult table_determinant(const CharacterTable &T) {
  int k = T.class_count();
  // fraction-free enough at desk scale: straightforward elimination over
  // the cyclotomic field
  std::vector<std::vector<Cyclo>> M = T.irr;
  Cyclo det(1);
  bool zero = false;
  for (int col = 0, row = 0; col < k && row < k; ++col) {
    int pr = -1;
    for (int r = row; r < k; ++r)
      if (!M[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) {
      zero = true;
      break;
    }
    if (pr != row) {
      std::swap(M[static_cast<size_t>(pr)], M[static_cast<size_t>(row)]);
      det = -det;
    }
    const Cyclo pivot = M[static_cast<size_t>(row)][static_cast<size_t>(col)];
    det *= pivot;
    for (int r = row + 1; r < k; ++r) {
      Cyclo f = M[static_cast<size_t>(r)][static_cast<size_t>(col)] / pivot;
      if (f.is_zero())
        continue;
      for (int c = col; c < k; ++c)
        M[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * M[static_cast<size_t>(row)][static_cast<size_t>(c)];
    }
    ++row;
  }
  DeterminantResult res;
  res.value = zero ? Cyclo(0) : det;
  // conjugate row pairs
  int non_real = 0;
  for (int i = 0; i < T.irr_count(); ++i) {
    bool real = true;
    for (int K = 0; K < k; ++K)
      if (T.value(i, K).conj() != T.value(i, K)) {
        real = false;
        break;
      }
    if (!real)
      ++non_real;
  }
  res.conjugate_pairs = non_real / 2;
  Rational prod(1);
  for (const auto &c : T.classes)
    prod *= Rational(c.centralizer);
  Cyclo expect = Cyclo(prod);
  if (res.conjugate_pairs % 2 == 1)
    expect = -expect;
  res.check = (res.value * res.value == expect);
  return res;
}

namespace {

ClassSet intersect(const ClassSet &a, const ClassSet &b) {
  ClassSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

long class_set_order(const CharacterTable &T, const ClassSet &s) {
  long n = 0;
  for (int k : s)
    n += T.classes[static_cast<size_t>(k)].size;
  return n;
}

} // namespace

StructureReport structure_report(const CharacterTable &T) {
  StructureReport rep;
  int k = T.class_count();
  int nirr = T.irr_count();
  int one = T.identity_class();

  for (int i = 0; i < nirr; ++i) {
    ClassSet ker, zch;
    const Cyclo &deg = T.value(i, one);
    Cyclo deg2 = deg * deg;
    for (int K = 0; K < k; ++K) {
      if (T.value(i, K) == deg)
        ker.insert(K);
      if (T.value(i, K) * T.value(i, K).conj() == deg2)
        zch.insert(K);
    }
    rep.kernels.push_back(std::move(ker));
    rep.centres.push_back(std::move(zch));
  }

  // normal subgroup lattice: closure of the kernels under intersection
  std::set<ClassSet> lattice;
  ClassSet whole;
  for (int K = 0; K < k; ++K)
    whole.insert(K);
  lattice.insert(whole);
  for (const auto &ker : rep.kernels)
    lattice.insert(ker);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ClassSet> items(lattice.begin(), lattice.end());
    for (size_t i = 0; i < items.size(); ++i)
      for (size_t j = i + 1; j < items.size(); ++j) {
        ClassSet c = intersect(items[i], items[j]);
        if (lattice.insert(c).second)
          grew = true;
      }
  }
  for (const auto &s : lattice)
    rep.normal_subgroups.push_back({s, class_set_order(T, s)});
  std::sort(rep.normal_subgroups.begin(), rep.normal_subgroups.end(),
            [](const NormalSubgroupInfo &a, const NormalSubgroupInfo &b) {
              if (a.order != b.order)
                return a.order < b.order;
              return a.classes < b.classes;
            });

  // derived subgroup: intersection of the kernels of the linear characters
  ClassSet derived = whole;
  long lin = 0;
  for (int i = 0; i < nirr; ++i) {
    if (T.value(i, one) == Cyclo(1)) {
      ++lin;
      derived = intersect(derived, rep.kernels[static_cast<size_t>(i)]);
    }
  }
  rep.derived_subgroup = derived;
  rep.derived_order = class_set_order(T, derived);
  rep.linear_count = lin;

  // centre: intersection of the Z(chi)
  ClassSet centre = whole;
  for (int i = 0; i < nirr; ++i)
    centre = intersect(centre, rep.centres[static_cast<size_t>(i)]);
  rep.centre = centre;
  rep.centre_order = class_set_order(T, centre);

  // solvable: a chain in the normal-subgroup lattice with prime-power
  // index steps, from the whole group down to 1
  {
    const auto &ns = rep.normal_subgroups;
    std::vector<char> reachable(ns.size(), 0); // from the top
    auto is_primary = [](long q) {
      if (q < 2)
        return false;
      for (long p = 2; p * p <= q; ++p)
        if (q % p == 0) {
          while (q % p == 0)
            q /= p;
          return q == 1;
        }
      return true; // prime
    };
    for (size_t i = ns.size(); i-- > 0;) {
      if (ns[i].order == T.group_order) {
        reachable[i] = 1;
        continue;
      }
      for (size_t j = i + 1; j < ns.size(); ++j) {
        if (!reachable[j])
          continue;
        if (ns[j].order % ns[i].order != 0)
          continue;
        if (!std::includes(ns[j].classes.begin(), ns[j].classes.end(),
                           ns[i].classes.begin(), ns[i].classes.end()))
          continue;
        if (is_primary(ns[j].order / ns[i].order)) {
          reachable[i] = 1;
          break;
        }
      }
    }
    for (size_t i = 0; i < ns.size(); ++i)
      if (ns[i].order == 1 && reachable[i])
        rep.solvable = true;
  }

  // nilpotent: ascending central series through quotient tables
  {
    ClassSet z = {one};
    bool stalled = false;
    while (class_set_order(T, z) < T.group_order && !stalled) {
      // centre of G/Z as a class set of G: classes K with |chi(x_K)| =
      // chi(1) for every chi whose kernel contains Z
      ClassSet next;
      for (int K = 0; K < k; ++K) {
        bool in_centre = true;
        for (int i = 0; i < nirr && in_centre; ++i) {
          const ClassSet &ker = rep.kernels[static_cast<size_t>(i)];
          if (!std::includes(ker.begin(), ker.end(), z.begin(), z.end()))
            continue;
          const Cyclo &deg = T.value(i, one);
          if (T.value(i, K) * T.value(i, K).conj() != deg * deg)
            in_centre = false;
        }
        if (in_centre)
          next.insert(K);
      }
      if (next == z)
        stalled = true;
      else
        z = std::move(next);
    }
    rep.nilpotent = class_set_order(T, z) == T.group_order;
  }
  return rep;
}

std::vector<Integer> commutator_counts(const CharacterTable &T) {
  int k = T.class_count();
  int one = T.identity_class();
  std::vector<Integer> kappa(static_cast<size_t>(k));
  for (int K = 0; K < k; ++K) {
    Cyclo s;
    for (int i = 0; i < T.irr_count(); ++i)
      s += Cyclo(Rational(T.group_order)) / T.value(i, one) * T.value(i, K);
    if (!s.is_rational())
      throw VerificationError("commutator count not rational: table invalid");
    Rational q = s.rational_value();
    if (q.get_den() != 1 || q < 0)
      throw VerificationError(
          "commutator count not a nonnegative integer: table invalid");
    kappa[static_cast<size_t>(K)] = q.get_num();
  }
  return kappa;
}

std::vector<int> galois_conjugate_table(const CharacterTable &T, long k) {
  if (gcd_long(((k % T.exponent) + T.exponent) % T.exponent, T.exponent) != 1)
    throw std::runtime_error("galois_conjugate_table: k not coprime to "
                             "exponent");
  std::vector<int> perm(static_cast<size_t>(T.irr_count()), -1);
  for (int i = 0; i < T.irr_count(); ++i) {
    std::vector<Cyclo> twisted(static_cast<size_t>(T.class_count()));
    for (int K = 0; K < T.class_count(); ++K)
      twisted[static_cast<size_t>(K)] = T.value(i, K).galois(k);
    int found = -1;
    for (int j = 0; j < T.irr_count(); ++j)
      if (T.irr[static_cast<size_t>(j)] == twisted) {
        found = j;
        break;
      }
    if (found < 0)
      throw VerificationError("galois image of a row is not in the table: "
                               "table invalid");
    perm[static_cast<size_t>(i)] = found;
  }
  return perm;
}

bool tables_match_up_to_galois(const CharacterTable &computed,
                               const CharacterTable &golden, long *matched_k) {
  if (computed.class_count() != golden.class_count() ||
      computed.irr_count() != golden.irr_count())
    return false;
  // columns are identified by class name
  std::vector<int> col(static_cast<size_t>(computed.class_count()));
  for (int K = 0; K < computed.class_count(); ++K) {
    int j = golden.class_index(computed.classes[static_cast<size_t>(K)].name);
    if (j < 0 ||
        golden.classes[static_cast<size_t>(j)].size !=
            computed.classes[static_cast<size_t>(K)].size ||
        golden.classes[static_cast<size_t>(j)].order !=
            computed.classes[static_cast<size_t>(K)].order)
      return false;
    col[static_cast<size_t>(K)] = j;
  }
  long m = computed.exponent;
  for (long k = 1; k <= m; ++k) {
    if (gcd_long(k, m) != 1)
      continue;
    // does { sigma_k(golden rows) } equal { computed rows } as multisets?
    std::vector<std::vector<Cyclo>> twisted;
    for (int i = 0; i < golden.irr_count(); ++i) {
      std::vector<Cyclo> row(static_cast<size_t>(golden.class_count()));
      for (int K = 0; K < computed.class_count(); ++K)
        row[static_cast<size_t>(K)] =
            golden.value(i, col[static_cast<size_t>(K)]).galois(k);
      twisted.push_back(std::move(row));
    }
    std::vector<bool> used(twisted.size(), false);
    bool all = true;
    for (int i = 0; i < computed.irr_count() && all; ++i) {
      bool found = false;
      for (size_t j = 0; j < twisted.size(); ++j) {
        if (used[j])
          continue;
        if (twisted[j] == computed.irr[static_cast<size_t>(i)]) {
          used[j] = true;
          found = true;
          break;
        }
      }
      if (!found)
        all = false;
    }
    if (all) {
      if (matched_k)
        *matched_k = k;
      return true;
    }
  }
  return false;
}

} // namespace charblock
