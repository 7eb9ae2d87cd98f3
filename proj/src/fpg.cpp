#include "charblock/fpg.hpp"

#include <sstream>
#include <stdexcept>

namespace charblock {

GroupAlgebra::GroupAlgebra(const GroupData &gd, const FqField &F)
    : gd_(&gd), F_(F) {
  long n = gd.G.order();
  if (n > kOracleOrderCap)
    throw std::runtime_error("oracle: group exceeds the order cap");
  mul_.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      mul_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          gd.G.index_of(gd.G.element(i) * gd.G.element(j));
}

AlgebraElement GroupAlgebra::zero() const {
  return AlgebraElement{std::vector<FqElem>(
      static_cast<size_t>(gd_->G.order()), F_.zero())};
}

AlgebraElement GroupAlgebra::one() const {
  AlgebraElement a = zero();
  a.c[static_cast<size_t>(gd_->G.identity_index())] = F_.one();
  return a;
}

AlgebraElement GroupAlgebra::delta(long element_index) const {
  AlgebraElement a = zero();
  a.c[static_cast<size_t>(element_index)] = F_.one();
  return a;
}

AlgebraElement GroupAlgebra::class_sum(int class_index) const {
  AlgebraElement a = zero();
  for (long e = 0; e < gd_->G.order(); ++e)
    if (gd_->cc.class_of_elem[static_cast<size_t>(e)] == class_index)
      a.c[static_cast<size_t>(e)] = F_.one();
  return a;
}

AlgebraElement GroupAlgebra::from_class_coeffs(
    const std::vector<FqElem> &coeffs) const {
  AlgebraElement a = zero();
  for (long e = 0; e < gd_->G.order(); ++e)
    a.c[static_cast<size_t>(e)] =
        coeffs[static_cast<size_t>(gd_->cc.class_of_elem[static_cast<size_t>(e)])];
  return a;
}

AlgebraElement GroupAlgebra::add(const AlgebraElement &a,
                                 const AlgebraElement &b) const {
  AlgebraElement r = a;
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = F_.add(r.c[i], b.c[i]);
  return r;
}

AlgebraElement GroupAlgebra::sub(const AlgebraElement &a,
                                 const AlgebraElement &b) const {
  AlgebraElement r = a;
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = F_.sub(r.c[i], b.c[i]);
  return r;
}

AlgebraElement GroupAlgebra::scale(const FqElem &s,
                                   const AlgebraElement &a) const {
  AlgebraElement r = a;
  for (auto &x : r.c)
    x = F_.mul(s, x);
  return r;
}

AlgebraElement GroupAlgebra::convolve_serial(const AlgebraElement &a,
                                             const AlgebraElement &b) const {
  long n = gd_->G.order();
  AlgebraElement r = zero();
  for (long i = 0; i < n; ++i) {
    if (a.c[static_cast<size_t>(i)].is_zero())
      continue;
    for (long j = 0; j < n; ++j) {
      if (b.c[static_cast<size_t>(j)].is_zero())
        continue;
      long g = mul_[static_cast<size_t>(i)][static_cast<size_t>(j)];
      r.c[static_cast<size_t>(g)] =
          F_.add(r.c[static_cast<size_t>(g)],
                 F_.mul(a.c[static_cast<size_t>(i)],
                        b.c[static_cast<size_t>(j)]));
    }
  }
  return r;
}

AlgebraElement GroupAlgebra::convolve(const AlgebraElement &a,
                                      const AlgebraElement &b) const {
  long n = gd_->G.order();
  AlgebraElement r = zero();
  // parallel over the output index: c_g = sum_x a_x b_{x^{-1} g}
  std::vector<long> inv(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    inv[static_cast<size_t>(i)] = gd_->G.index_of(gd_->G.element(i).inverse());
#pragma omp parallel for schedule(static)
  for (long g = 0; g < n; ++g) {
    FqElem acc = F_.zero();
    for (long x = 0; x < n; ++x) {
      if (a.c[static_cast<size_t>(x)].is_zero())
        continue;
      long y = mul_[static_cast<size_t>(inv[static_cast<size_t>(x)])]
                   [static_cast<size_t>(g)];
      if (b.c[static_cast<size_t>(y)].is_zero())
        continue;
      acc = F_.add(acc, F_.mul(a.c[static_cast<size_t>(x)],
                               b.c[static_cast<size_t>(y)]));
    }
    r.c[static_cast<size_t>(g)] = acc;
  }
  return r;
}

bool GroupAlgebra::is_central(const AlgebraElement &a) const {
  for (const auto &g : gd_->G.generators()) {
    AlgebraElement dg = delta(gd_->G.index_of(g));
    if (!(convolve(dg, a) == convolve(a, dg)))
      return false;
  }
  return true;
}

std::vector<FqElem> GroupAlgebra::central_coefficients(
    const AlgebraElement &a) const {
  std::vector<FqElem> coeffs(static_cast<size_t>(gd_->cc.count()), F_.zero());
  std::vector<bool> seen(coeffs.size(), false);
  for (long e = 0; e < gd_->G.order(); ++e) {
    int k = gd_->cc.class_of_elem[static_cast<size_t>(e)];
    if (!seen[static_cast<size_t>(k)]) {
      coeffs[static_cast<size_t>(k)] = a.c[static_cast<size_t>(e)];
      seen[static_cast<size_t>(k)] = true;
    } else if (!(coeffs[static_cast<size_t>(k)] == a.c[static_cast<size_t>(e)])) {
      throw std::runtime_error("element is not constant on classes");
    }
  }
  return coeffs;
}

namespace {

// lambda_B applied to a centre element given by class-sum coefficients
FqElem apply_lambda(const FqField &F, const Block &blk,
                    const std::vector<FqElem> &coeffs) {
  FqElem acc = F.zero();
  for (size_t k = 0; k < coeffs.size(); ++k)
    acc = F.add(acc, F.mul(coeffs[k], blk.lambda[k]));
  return acc;
}

// Gaussian elimination basis of a list of coefficient vectors
std::vector<std::vector<FqElem>> row_basis(const FqField &F,
                                           std::vector<std::vector<FqElem>> rows) {
  std::vector<std::vector<FqElem>> basis;
  std::vector<size_t> pivots;
  for (auto &v : rows) {
    for (size_t b = 0; b < basis.size(); ++b) {
      if (v[pivots[b]].is_zero())
        continue;
      FqElem f = v[pivots[b]];
      for (size_t i = 0; i < v.size(); ++i)
        v[i] = F.sub(v[i], F.mul(f, basis[b][i]));
    }
    size_t piv = v.size();
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) {
        piv = i;
        break;
      }
    if (piv == v.size())
      continue;
    FqElem iv = F.inv(v[piv]);
    for (size_t i = 0; i < v.size(); ++i)
      v[i] = F.mul(v[i], iv);
    for (size_t b = 0; b < basis.size(); ++b) {
      if (basis[b][piv].is_zero())
        continue;
      FqElem f = basis[b][piv];
      for (size_t i = 0; i < v.size(); ++i)
        basis[b][i] = F.sub(basis[b][i], F.mul(f, v[i]));
    }
    basis.push_back(std::move(v));
    pivots.push_back(piv);
  }
  return basis;
}

} // namespace

OracleReport verify_block_idempotents(const GroupAlgebra &A,
                                      const BlockPartition &bp,
                                      const CharacterTable &T) {
  OracleReport rep;
  const FqField &F = A.field();
  auto fail = [&](const std::string &msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  std::vector<AlgebraElement> es;
  for (int b = 0; b < bp.block_count(); ++b) {
    const Block &blk = bp.blocks[static_cast<size_t>(b)];
    if (blk.a_coeffs.empty())
      throw std::runtime_error("verify_block_idempotents: a_B(K) missing "
                               "(run block_local_data first)");
    es.push_back(A.from_class_coeffs(blk.a_coeffs));
  }
  for (int b = 0; b < bp.block_count(); ++b) {
    std::string tag = "e_B" + std::to_string(b + 1);
    const AlgebraElement &e = es[static_cast<size_t>(b)];
    if (!(A.convolve(e, e) == e))
      fail(tag + " is not idempotent");
    if (!A.is_central(e))
      fail(tag + " is not central");
    for (int b2 = b + 1; b2 < bp.block_count(); ++b2)
      if (!(A.convolve(e, es[static_cast<size_t>(b2)]) == A.zero()))
        fail(tag + " * e_B" + std::to_string(b2 + 1) + " != 0");
  }
  AlgebraElement sum = A.zero();
  for (const auto &e : es)
    sum = A.add(sum, e);
  if (!(sum == A.one()))
    fail("sum of block idempotents != 1");

  // primitivity via locality: on e_B Z(FG), the kernel of lambda_B has
  // codimension 1 and is nilpotent
  int k = T.class_count();
  for (int b = 0; b < bp.block_count(); ++b) {
    const Block &blk = bp.blocks[static_cast<size_t>(b)];
    std::string tag = "block " + std::to_string(b + 1);
    // spanning set of e_B Z(FG): e_B * K^ for all classes K
    std::vector<std::vector<FqElem>> gens;
    for (int K = 0; K < k; ++K) {
      AlgebraElement x =
          A.convolve(es[static_cast<size_t>(b)], A.class_sum(K));
      gens.push_back(A.central_coefficients(x));
    }
    auto basis = row_basis(F, gens);
    // kernel of lambda_B inside that span
    std::vector<std::vector<FqElem>> ker_gens;
    for (size_t i = 0; i < basis.size(); ++i) {
      FqElem li = apply_lambda(F, blk, basis[i]);
      if (li.is_zero()) {
        ker_gens.push_back(basis[i]);
        continue;
      }
      for (size_t j = i + 1; j < basis.size(); ++j) {
        FqElem lj = apply_lambda(F, blk, basis[j]);
        // li * basis[j] - lj * basis[i] lies in the kernel
        std::vector<FqElem> v(basis[i].size());
        for (size_t c = 0; c < v.size(); ++c)
          v[c] = F.sub(F.mul(li, basis[j][c]), F.mul(lj, basis[i][c]));
        ker_gens.push_back(std::move(v));
      }
      break;
    }
    auto ker_basis = row_basis(F, ker_gens);
    if (ker_basis.size() + 1 != basis.size()) {
      fail(tag + ": kernel of lambda_B does not have codimension 1");
      continue;
    }
    // nilpotency of the kernel ideal by iterated products
    std::vector<std::vector<FqElem>> power = ker_basis;
    long steps = 0;
    while (!power.empty() && steps <= static_cast<long>(basis.size()) + 1) {
      std::vector<std::vector<FqElem>> next_gens;
      for (const auto &u : power)
        for (const auto &v : ker_basis) {
          AlgebraElement prod =
              A.convolve(A.from_class_coeffs(u), A.from_class_coeffs(v));
          next_gens.push_back(A.central_coefficients(prod));
        }
      power = row_basis(F, next_gens);
      ++steps;
    }
    if (!power.empty())
      fail(tag + ": kernel of lambda_B on e_B Z(FG) is not nilpotent");
  }
  return rep;
}

CentreRadical centre_radical(const GroupAlgebra &A, const BlockPartition &bp,
                             const CharacterTable &T) {
  const FqField &F = A.field();
  int k = T.class_count();
  CentreRadical res;
  // the conjugation-invariant subspace of FG has one basis vector per
  // class orbit, i.e. the class sums; verify each commutes with the
  // generators
  for (int K = 0; K < k; ++K)
    if (!A.is_central(A.class_sum(K)))
      throw std::runtime_error("class sum fails centrality");
  res.centre_dim = k;

  // radical of the centre: common kernel of the lambda_B on class-sum
  // coordinates
  std::vector<std::vector<FqElem>> rows;
  for (const auto &blk : bp.blocks) {
    std::vector<FqElem> row(static_cast<size_t>(k));
    // lambda_B(K^) coordinates as a linear functional
    for (int K = 0; K < k; ++K)
      row[static_cast<size_t>(K)] = blk.lambda[static_cast<size_t>(K)];
    rows.push_back(std::move(row));
  }
  // solve: vectors c with sum_K c_K lambda_B(K^) = 0 for all B
  FqMatrix m(rows.size(), std::vector<FqElem>(static_cast<size_t>(k)));
  for (size_t r = 0; r < rows.size(); ++r)
    m[r] = rows[r];
  long rank = fq_matrix_rank(F, m);
  res.radical_dim = k - rank;

  // kernel basis by elimination
  // (re-run elimination, collecting free-column solutions)
  {
    FqMatrix mm(rows.size(), std::vector<FqElem>(static_cast<size_t>(k)));
    for (size_t r = 0; r < rows.size(); ++r)
      mm[r] = rows[r];
    size_t nrows = mm.size();
    std::vector<long> pivot_col;
    size_t row = 0;
    std::vector<bool> is_pivot(static_cast<size_t>(k), false);
    for (size_t col = 0; col < static_cast<size_t>(k) && row < nrows; ++col) {
      size_t pr = row;
      while (pr < nrows && mm[pr][col].is_zero())
        ++pr;
      if (pr == nrows)
        continue;
      std::swap(mm[pr], mm[row]);
      FqElem iv = F.inv(mm[row][col]);
      for (size_t c = 0; c < static_cast<size_t>(k); ++c)
        mm[row][c] = F.mul(mm[row][c], iv);
      for (size_t r = 0; r < nrows; ++r) {
        if (r == row || mm[r][col].is_zero())
          continue;
        FqElem f = mm[r][col];
        for (size_t c = 0; c < static_cast<size_t>(k); ++c)
          mm[r][c] = F.sub(mm[r][c], F.mul(f, mm[row][c]));
      }
      pivot_col.push_back(static_cast<long>(col));
      is_pivot[col] = true;
      ++row;
    }
    std::vector<std::vector<FqElem>> kernel;
    for (size_t col = 0; col < static_cast<size_t>(k); ++col) {
      if (is_pivot[col])
        continue;
      std::vector<FqElem> v(static_cast<size_t>(k), F.zero());
      v[col] = F.one();
      for (size_t r = 0; r < pivot_col.size(); ++r)
        v[static_cast<size_t>(pivot_col[r])] = F.neg(mm[r][col]);
      kernel.push_back(std::move(v));
    }
    // nilpotency by iterated products inside the oracle
    std::vector<std::vector<FqElem>> power = kernel;
    long idx = power.empty() ? 0 : 1;
    while (!power.empty()) {
      std::vector<std::vector<FqElem>> next;
      for (const auto &u : power)
        for (const auto &v : kernel) {
          AlgebraElement prod =
              A.convolve(A.from_class_coeffs(u), A.from_class_coeffs(v));
          next.push_back(A.central_coefficients(prod));
        }
      power = row_basis(F, next);
      if (!power.empty())
        ++idx;
      if (idx > k + 1)
        throw std::runtime_error("radical is not nilpotent");
    }
    res.nilpotency_index = idx == 0 ? 1 : idx + 1;
  }
  return res;
}

} // namespace charblock
