#include <doctest.h>

#include "charblock/fpg.hpp"
#include "charblock/io.hpp"

using namespace charblock;

namespace {

const std::string kData = CHARBLOCK_DATA_DIR;

GroupData group_of(const std::string &file) {
  return make_group_data(parse_group_file(kData + "/groups/" + file));
}

CharacterTable golden(const std::string &file) {
  return read_table_file(kData + "/golden/" + file);
}

} // namespace

TEST_CASE("convolution basics") {
  GroupData gd = group_of("s3.grp");
  StarMap star(2, gd.G.exponent());
  GroupAlgebra A(gd, star.field());
  // delta_g * delta_h = delta_{gh}
  for (long i = 0; i < gd.G.order(); ++i)
    for (long j = 0; j < gd.G.order(); ++j) {
      long k = gd.G.index_of(gd.G.element(i) * gd.G.element(j));
      CHECK(A.convolve(A.delta(i), A.delta(j)) == A.delta(k));
    }
  // 1 * a = a
  AlgebraElement a = A.add(A.class_sum(1), A.scale(star.field().one(),
                                                   A.delta(0)));
  CHECK(A.convolve(A.one(), a) == a);
  CHECK(A.convolve(a, A.one()) == a);
}

TEST_CASE("class sums multiply by the structure constants mod p") {
  GroupData gd = group_of("a4.grp");
  auto sc = structure_constants(gd.G, gd.cc);
  for (int p : {2, 3}) {
    StarMap star(p, gd.G.exponent());
    GroupAlgebra A(gd, star.field());
    const FqField &F = star.field();
    for (int K = 0; K < gd.cc.count(); ++K)
      for (int L = 0; L < gd.cc.count(); ++L) {
        AlgebraElement lhs = A.convolve(A.class_sum(K), A.class_sum(L));
        AlgebraElement rhs = A.zero();
        for (int M = 0; M < gd.cc.count(); ++M)
          rhs = A.add(rhs, A.scale(F.from_int(sc.at(K, L, M)),
                                   A.class_sum(M)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("parallel convolution agrees with the serial reference") {
  GroupData gd = group_of("s4.grp");
  StarMap star(3, gd.G.exponent());
  GroupAlgebra A(gd, star.field());
  AlgebraElement a = A.class_sum(1);
  AlgebraElement b = A.add(A.class_sum(2), A.delta(5));
  CHECK(A.convolve(a, b) == A.convolve_serial(a, b));
  CHECK(A.convolve(b, a) == A.convolve_serial(b, a));
}

TEST_CASE("class sums span the conjugation-invariant centre") {
  GroupData gd = group_of("s3.grp");
  StarMap star(2, gd.G.exponent());
  GroupAlgebra A(gd, star.field());
  for (int K = 0; K < gd.cc.count(); ++K)
    CHECK(A.is_central(A.class_sum(K)));
  CHECK_FALSE(A.is_central(A.delta(gd.G.index_of(
      Perm::from_cycles(3, "(1,2)")))));
}

TEST_CASE("oracle verifies the block idempotents of S3 at p = 2") {
  GroupData gd = group_of("s3.grp");
  CharacterTable T = golden("s3.tbl");
  StarMap star(2, T.exponent);
  BlockPartition bp = block_partition(T, 2, star);
  block_local_data(bp, T, gd, star);
  GroupAlgebra A(gd, star.field());
  OracleReport rep = verify_block_idempotents(A, bp, T);
  CHECK(rep.ok);
  for (const auto &f : rep.failures)
    MESSAGE(f);

  // hand check: e_B1 = 1 + (123) + (132) in F_2 S3
  AlgebraElement e1 = A.from_class_coeffs(bp.blocks[0].a_coeffs);
  AlgebraElement expect = A.zero();
  const FqField &F = star.field();
  expect.c[static_cast<size_t>(gd.G.identity_index())] = F.one();
  expect.c[static_cast<size_t>(
      gd.G.index_of(Perm::from_cycles(3, "(1,2,3)")))] = F.one();
  expect.c[static_cast<size_t>(
      gd.G.index_of(Perm::from_cycles(3, "(1,3,2)")))] = F.one();
  CHECK(e1 == expect);
}

TEST_CASE("A4: one block at p = 2 (e_B = 1), two blocks at p = 3") {
  GroupData gd = group_of("a4.grp");
  CharacterTable T = golden("a4.tbl");
  {
    StarMap star(2, T.exponent);
    BlockPartition bp = block_partition(T, 2, star);
    block_local_data(bp, T, gd, star);
    REQUIRE(bp.block_count() == 1);
    GroupAlgebra A(gd, star.field());
    CHECK(A.from_class_coeffs(bp.blocks[0].a_coeffs) == A.one());
    CHECK(verify_block_idempotents(A, bp, T).ok);
  }
  {
    StarMap star(3, T.exponent);
    BlockPartition bp = block_partition(T, 3, star);
    block_local_data(bp, T, gd, star);
    REQUIRE(bp.block_count() == 2); // main block and the defect-0 {chi4}
    GroupAlgebra A(gd, star.field());
    CHECK(verify_block_idempotents(A, bp, T).ok);
  }
}

TEST_CASE("p coprime to |G|: the reduced classical idempotents") {
  GroupData gd = group_of("s3.grp");
  CharacterTable T = golden("s3.tbl");
  StarMap star(5, T.exponent);
  BlockPartition bp = block_partition(T, 5, star);
  block_local_data(bp, T, gd, star);
  REQUIRE(bp.block_count() == 3);
  GroupAlgebra A(gd, star.field());
  OracleReport rep = verify_block_idempotents(A, bp, T);
  CHECK(rep.ok);
}

TEST_CASE("oracle catches corrupted idempotent data") {
  GroupData gd = group_of("s3.grp");
  CharacterTable T = golden("s3.tbl");
  StarMap star(2, T.exponent);
  BlockPartition bp = block_partition(T, 2, star);
  block_local_data(bp, T, gd, star);
  bp.blocks[0].a_coeffs[1] = star.field().one(); // corrupt a_B(2a)
  GroupAlgebra A(gd, star.field());
  OracleReport rep = verify_block_idempotents(A, bp, T);
  CHECK_FALSE(rep.ok);
}

TEST_CASE("centre dimension and radical") {
  GroupData gd = group_of("s3.grp");
  CharacterTable T = golden("s3.tbl");
  {
    StarMap star(2, T.exponent);
    BlockPartition bp = block_partition(T, 2, star);
    GroupAlgebra A(gd, star.field());
    CentreRadical cr = centre_radical(A, bp, T);
    CHECK(cr.centre_dim == 3);
    CHECK(cr.radical_dim == 1);
    CHECK(cr.nilpotency_index > 1);
  }
  {
    StarMap star(3, T.exponent);
    BlockPartition bp = block_partition(T, 3, star);
    GroupAlgebra A(gd, star.field());
    CentreRadical cr = centre_radical(A, bp, T);
    CHECK(cr.radical_dim > 0); // nontrivial 3-block of positive defect
  }
  {
    StarMap star(5, T.exponent);
    BlockPartition bp = block_partition(T, 5, star);
    GroupAlgebra A(gd, star.field());
    CentreRadical cr = centre_radical(A, bp, T);
    CHECK(cr.radical_dim == 0); // semisimple
    CHECK(cr.nilpotency_index == 1);
  }
}

TEST_CASE("the all-elements sum lies in the radical when p divides |G|") {
  GroupData gd = group_of("a4.grp");
  CharacterTable T = golden("a4.tbl");
  for (int p : {2, 3}) {
    StarMap star(p, T.exponent);
    BlockPartition bp = block_partition(T, p, star);
    const FqField &F = star.field();
    // sum over all classes of K^ has lambda_B value sum_K lambda_B(K^)
    for (const auto &blk : bp.blocks) {
      FqElem s = F.zero();
      for (const auto &l : blk.lambda)
        s = F.add(s, l);
      CHECK(s.is_zero());
    }
  }
}
