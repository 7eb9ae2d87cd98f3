#include <doctest.h>

#include "charblock/chartab.hpp"
#include "charblock/classalg.hpp"

using namespace charblock;

namespace {

GroupData s3() {
  return make_group_data(PermGroup::generated(
      {Perm::from_cycles(3, "(1,2)"), Perm::from_cycles(3, "(1,2,3)")}));
}

GroupData a4() {
  return make_group_data(PermGroup::generated(
      {Perm::from_cycles(4, "(1,2)(3,4)"), Perm::from_cycles(4, "(1,2,3)")}));
}

// brute-force oracle: count pairs (x, y) in K x L with xy = z for the
// fixed representative z of M
long brute_count(const GroupData &gd, int K, int L, int M) {
  long count = 0;
  const Perm &z = gd.cc.reps[static_cast<size_t>(M)];
  for (long i = 0; i < gd.G.order(); ++i) {
    if (gd.cc.class_of_elem[static_cast<size_t>(i)] != K)
      continue;
    for (long j = 0; j < gd.G.order(); ++j) {
      if (gd.cc.class_of_elem[static_cast<size_t>(j)] != L)
        continue;
      if (gd.G.element(i) * gd.G.element(j) == z)
        ++count;
    }
  }
  return count;
}

} // namespace

TEST_CASE("S3: 2a * 2a = 3 1a + 3 3a, against the 9-product oracle") {
  auto gd = s3();
  auto sc = structure_constants(gd.G, gd.cc);
  CHECK(sc.at(1, 1, 0) == 3);
  CHECK(sc.at(1, 1, 2) == 3);
  CHECK(sc.at(1, 1, 1) == 0);
  for (int K = 0; K < 3; ++K)
    for (int L = 0; L < 3; ++L)
      for (int M = 0; M < 3; ++M)
        CHECK(sc.at(K, L, M) == brute_count(gd, K, L, M));
}

TEST_CASE("identity class is neutral") {
  auto gd = a4();
  auto sc = structure_constants(gd.G, gd.cc);
  for (int K = 0; K < sc.classes; ++K)
    for (int M = 0; M < sc.classes; ++M)
      CHECK(sc.at(K, 0, M) == (K == M ? 1 : 0));
}

TEST_CASE("A4: involutions square to the identity 3 ways") {
  auto gd = a4();
  auto sc = structure_constants(gd.G, gd.cc);
  CHECK(sc.at(1, 1, 0) == 3);
  for (int K = 0; K < 4; ++K)
    for (int L = 0; L < 4; ++L)
      for (int M = 0; M < 4; ++M)
        CHECK(sc.at(K, L, M) == brute_count(gd, K, L, M));
}

TEST_CASE("row sums: sum_M a_KLM |M| = |K||L|") {
  auto gd = a4();
  auto sc = structure_constants(gd.G, gd.cc);
  for (int K = 0; K < sc.classes; ++K)
    for (int L = 0; L < sc.classes; ++L) {
      long sum = 0;
      for (int M = 0; M < sc.classes; ++M)
        sum += sc.at(K, L, M) * gd.cc.sizes[static_cast<size_t>(M)];
      CHECK(sum == gd.cc.sizes[static_cast<size_t>(K)] *
                       gd.cc.sizes[static_cast<size_t>(L)]);
    }
}

TEST_CASE("parallel kernel agrees with the serial reference") {
  for (auto gd : {s3(), a4()}) {
    auto par = structure_constants(gd.G, gd.cc);
    auto ser = structure_constants_serial(gd.G, gd.cc);
    CHECK(par.a == ser.a);
  }
}
