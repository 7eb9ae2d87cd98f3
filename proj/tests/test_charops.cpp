#include <doctest.h>

#include <random>
#include <set>

#include "charblock/charops.hpp"

using namespace charblock;

namespace {

GroupData group_of(const std::string &text) {
  return make_group_data(parse_group_text(text));
}

struct Setup {
  GroupData g;
  CharacterTable t;
};

Setup s3() {
  auto gd = group_of("degree 3\n(1,2)\n(1,2,3)\n");
  auto T = compute_table(gd, "S3");
  return {std::move(gd), std::move(T)};
}

Setup s4() {
  auto gd = group_of("degree 4\n(1,2)\n(1,2,3,4)\n");
  auto T = compute_table(gd, "S4");
  return {std::move(gd), std::move(T)};
}

Setup a4() {
  auto gd = group_of("degree 4\n(1,2)(3,4)\n(1,2,3)\n");
  auto T = compute_table(gd, "A4");
  return {std::move(gd), std::move(T)};
}

Setup a5() {
  auto gd = group_of("degree 5\n(1,2,3,4,5)\n(1,2,3)\n");
  auto T = compute_table(gd, "A5");
  return {std::move(gd), std::move(T)};
}

std::vector<Cyclo> C(std::vector<std::string> vals) {
  std::vector<Cyclo> out;
  for (const auto &s : vals)
    out.push_back(Cyclo::parse(s));
  return out;
}

ClassFunction random_generalized(const CharacterTable &T, std::mt19937 &rng) {
  std::vector<Cyclo> v(static_cast<size_t>(T.class_count()), Cyclo(0));
  for (int i = 0; i < T.irr_count(); ++i) {
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0)
      continue;
    for (int K = 0; K < T.class_count(); ++K)
      v[static_cast<size_t>(K)] += Cyclo(c) * T.value(i, K);
  }
  return ClassFunction{&T, std::move(v)};
}

} // namespace

TEST_CASE("inner products on S3") {
  auto [gd, T] = s3();
  CHECK(inner_product(irr_row(T, 2), irr_row(T, 2)) == Cyclo(1));
  CHECK(inner_product(principal_character(T), regular_character(T)) ==
        Cyclo(1));
  // chi3^2 = chi1 + chi2 + chi3, so (chi3^2, chi3) = 1
  ClassFunction sq = pointwise_product(irr_row(T, 2), irr_row(T, 2));
  CHECK(inner_product(sq, irr_row(T, 2)) == Cyclo(1));
  Decomposition d = decompose(sq);
  CHECK(d.is_character);
  CHECK(d.coeffs == std::vector<Cyclo>{Cyclo(1), Cyclo(1), Cyclo(1)});
  CHECK(sq.values == C({"4", "0", "1"}));
}

TEST_CASE("decompose the regular character and the zero function") {
  auto [gd, T] = s3();
  Decomposition reg = decompose(regular_character(T));
  CHECK(reg.coeffs == std::vector<Cyclo>{Cyclo(1), Cyclo(1), Cyclo(2)});
  CHECK(reg.is_character);
  Decomposition zero = decompose(zero_function(T));
  for (const auto &c : zero.coeffs)
    CHECK(c.is_zero());
  CHECK(zero.is_character);
}

TEST_CASE("natural permutation character of S3 decomposes as 1 + chi3") {
  auto [gd, T] = s3();
  PermCharStats st = permutation_character(gd, T);
  CHECK(st.character.values == C({"3", "1", "0"}));
  CHECK(st.orbit_count == 1);
  CHECK(st.rank == Rational(2));
  CHECK(st.two_transitive);
  CHECK(st.divisibility_failures.empty());
  Decomposition d = decompose(st.character);
  CHECK(d.coeffs == std::vector<Cyclo>{Cyclo(1), Cyclo(0), Cyclo(1)});
}

TEST_CASE("trivial action gives the principal character") {
  auto gd = group_of("degree 1\n");
  auto T = compute_table(gd, "1");
  PermCharStats st = permutation_character(gd, T);
  CHECK(st.character.values == std::vector<Cyclo>{Cyclo(1)});
  CHECK(st.orbit_count == 1);
}

TEST_CASE("A5 on 5 points: (5,1,2,0,0) = chi1 + chi4") {
  auto [gd, T] = a5();
  PermCharStats st = permutation_character(gd, T);
  CHECK(st.character.values == C({"5", "1", "2", "0", "0"}));
  CHECK(st.two_transitive);
  Decomposition d = decompose(st.character);
  CHECK(d.coeffs ==
        std::vector<Cyclo>{Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(1), Cyclo(0)});
  // two-transitivity: chi - 1 is irreducible
  std::vector<Cyclo> theta(st.character.values);
  for (auto &v : theta)
    v -= Cyclo(1);
  ClassFunction th = class_function(T, std::move(theta));
  CHECK(inner_product(th, th) == Cyclo(1));
}

TEST_CASE("induction from A3 to S3") {
  auto [gd, TG] = s3();
  auto hd = group_of("degree 3\n(1,2,3)\n");
  auto TH = compute_table(hd, "A3");
  FusionMap fus = build_fusion(gd, hd);

  // trivial character induces to (2, 0, 2) = chi1 + chi2
  ClassFunction ind = induce(principal_character(TH), TH, TG, fus);
  CHECK(ind.values == C({"2", "0", "2"}));
  Decomposition d = decompose(ind);
  CHECK(d.coeffs == std::vector<Cyclo>{Cyclo(1), Cyclo(1), Cyclo(0)});
  // degree |G : H|
  CHECK(ind.values[0] == Cyclo(gd.G.order() / hd.G.order()));

  // a nontrivial linear character of A3 induces to chi3
  int lam = -1;
  for (int i = 0; i < TH.irr_count(); ++i)
    if (TH.degree(i) == 1 && TH.irr[static_cast<size_t>(i)] !=
                                 principal_character(TH).values)
      lam = i;
  REQUIRE(lam >= 0);
  ClassFunction ind2 = induce(irr_row(TH, lam), TH, TG, fus);
  CHECK(ind2.values == TG.irr[2]);
}

TEST_CASE("restriction") {
  auto [gd, TG] = s3();
  auto hd = group_of("degree 3\n(1,2,3)\n");
  auto TH = compute_table(hd, "A3");
  FusionMap fus = build_fusion(gd, hd);
  ClassFunction r = restrict_to(irr_row(TG, 2), TH, fus);
  CHECK(r.values == C({"2", "-1", "-1"}));
  CHECK(restrict_to(principal_character(TG), TH, fus).values ==
        principal_character(TH).values);
}

TEST_CASE("Frobenius reciprocity on random pairs") {
  auto [gd, TG] = s4();
  auto hd = group_of("degree 4\n(1,2)\n(1,2,3)\n"); // S3 inside S4
  auto TH = compute_table(hd, "S3");
  FusionMap fus = build_fusion(gd, hd);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    ClassFunction phi = random_generalized(TH, rng);
    ClassFunction psi = random_generalized(TG, rng);
    Cyclo lhs = inner_product(induce(phi, TH, TG, fus), psi);
    Cyclo rhs = inner_product(phi, restrict_to(psi, TH, fus));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("induction is transitive along C2 <= S3 <= S4") {
  auto [gd, TG] = s4();
  auto kd = group_of("degree 4\n(1,2)\n(1,2,3)\n");
  auto TK = compute_table(kd, "S3");
  auto hd = group_of("degree 4\n(1,2)\n");
  auto TH = compute_table(hd, "C2");
  FusionMap h_to_g = build_fusion(gd, hd);
  FusionMap h_to_k = build_fusion(kd, hd);
  FusionMap k_to_g = build_fusion(gd, kd);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    ClassFunction phi = random_generalized(TH, rng);
    ClassFunction direct = induce(phi, TH, TG, h_to_g);
    ClassFunction via_k =
        induce(induce(phi, TH, TK, h_to_k), TK, TG, k_to_g);
    CHECK(direct.values == via_k.values);
  }
}

TEST_CASE("Mackey decomposition for S3 <= S4") {
  auto [gd, TG] = s4();
  auto hd = group_of("degree 4\n(1,2)\n(1,2,3)\n");
  auto TH = compute_table(hd, "S3");
  FusionMap fus = build_fusion(gd, hd);

  // double coset representatives of H \ G / H
  std::set<Perm> hset(hd.G.elements().begin(), hd.G.elements().end());
  std::vector<Perm> reps;
  std::set<Perm> covered;
  for (const auto &g : gd.G.elements()) {
    if (covered.count(g))
      continue;
    reps.push_back(g);
    for (const auto &h : hd.G.elements())
      for (const auto &k : hd.G.elements())
        covered.insert(h * g * k);
  }

  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    ClassFunction phi = random_generalized(TH, rng);
    ClassFunction lhs = restrict_to(induce(phi, TH, TG, fus), TH, fus);

    // sum over t of ((phi^t) restricted to H^t cap H) induced back to H
    std::vector<Cyclo> rhs(static_cast<size_t>(TH.class_count()), Cyclo(0));
    for (const auto &t : reps) {
      // H^t cap H as a subgroup
      std::vector<Perm> inter;
      for (const auto &h : hd.G.elements())
        if (hset.count(h.conjugated_by(t.inverse())))
          inter.push_back(h);
      auto id = make_group_data(PermGroup::from_elements(inter, inter));
      auto TI = compute_table(id, "I");
      FusionMap i_to_h = build_fusion(hd, id);
      // phi^t as a class function on H^t cap H: phi^t(x) = phi(t x t^{-1})
      std::vector<Cyclo> vals(static_cast<size_t>(id.cc.count()));
      for (int k = 0; k < id.cc.count(); ++k) {
        Perm pre = id.cc.reps[static_cast<size_t>(k)].conjugated_by(
            t.inverse());
        vals[static_cast<size_t>(k)] = phi[hd.cc.class_of(hd.G, pre)];
      }
      ClassFunction part = induce(class_function(TI, std::move(vals)), TI,
                                  TH, i_to_h);
      for (int k = 0; k < TH.class_count(); ++k)
        rhs[static_cast<size_t>(k)] += part[k];
    }
    CHECK(lhs.values == rhs);
  }
}

TEST_CASE("kernel of an induced character is the core of the kernel") {
  auto [gd, TG] = s3();
  auto hd = group_of("degree 3\n(1,2,3)\n");
  auto TH = compute_table(hd, "A3");
  FusionMap fus = build_fusion(gd, hd);
  for (int i = 0; i < TH.irr_count(); ++i) {
    ClassFunction ind = induce(irr_row(TH, i), TH, TG, fus);
    // class-level kernel of the induced character
    ClassSet ker;
    for (int K = 0; K < TG.class_count(); ++K)
      if (ind[K] == ind[TG.identity_class()])
        ker.insert(K);
    // intersection of conjugated kernels, computed on elements
    std::set<long> elements;
    for (long e = 0; e < gd.G.order(); ++e) {
      const Perm &g = gd.G.element(e);
      bool in_all = true;
      for (const auto &x : gd.G.elements()) {
        Perm conj = g.conjugated_by(x.inverse());
        if (!hd.G.contains(conj)) {
          in_all = false;
          break;
        }
        int hk = hd.cc.class_of(hd.G, conj);
        if (TH.value(i, hk) != TH.value(i, TH.identity_class())) {
          in_all = false;
          break;
        }
      }
      if (in_all)
        elements.insert(e);
    }
    ClassSet expect;
    for (long e : elements)
      expect.insert(gd.cc.class_of_elem[static_cast<size_t>(e)]);
    CHECK(ker == expect);
  }
}

TEST_CASE("pointwise suite") {
  auto [gd, T] = a4();
  // chi * 1 = chi
  for (int i = 0; i < T.irr_count(); ++i)
    CHECK(pointwise_product(irr_row(T, i), principal_character(T)).values ==
          T.irr[static_cast<size_t>(i)]);
  // contragredient swaps the two conjugate linear characters
  ClassFunction contra = contragredient(irr_row(T, 1), gd);
  CHECK(contra.values == T.irr[2]);
  CHECK(complex_conjugate(irr_row(T, 1)).values == T.irr[2]);
  // product of characters is a character
  for (int a = 0; a < T.irr_count(); ++a)
    for (int b = 0; b < T.irr_count(); ++b) {
      Decomposition d =
          decompose(pointwise_product(irr_row(T, a), irr_row(T, b)));
      CHECK(d.is_character);
    }
}

TEST_CASE("inertia groups") {
  auto [gd, TG] = s3();
  auto hd = group_of("degree 3\n(1,2,3)\n");
  auto TH = compute_table(hd, "A3");
  FusionMap fus = build_fusion(gd, hd);
  // nontrivial linear character of A3: inertia group is A3 itself
  int lam = 1;
  REQUIRE(TH.irr[static_cast<size_t>(lam)] != principal_character(TH).values);
  InertiaResult r = inertia_group(irr_row(TH, lam), TH, hd, gd, TG, 2, fus);
  CHECK(r.order == 3);
  CHECK(r.orbit_size == 2);
  CHECK(r.clifford_consistent);
  // the principal character is G-invariant
  InertiaResult rp =
      inertia_group(principal_character(TH), TH, hd, gd, TG, 0, fus);
  CHECK(rp.order == 6);
  CHECK(rp.orbit_size == 1);
  CHECK(rp.clifford_consistent);

  // A4 with V4 normal: a nontrivial linear character has inertia of
  // order 4 (conjugation orbit of size 3)
  auto [gd4, TG4] = a4();
  auto vd = group_of("degree 4\n(1,2)(3,4)\n(1,3)(2,4)\n");
  auto TV = compute_table(vd, "V4");
  FusionMap fv = build_fusion(gd4, vd);
  int nt = -1;
  for (int i = 0; i < TV.irr_count(); ++i)
    if (TV.irr[static_cast<size_t>(i)] != principal_character(TV).values)
      nt = i;
  REQUIRE(nt >= 0);
  InertiaResult r4 = inertia_group(irr_row(TV, nt), TV, vd, gd4, TG4, 3, fv);
  CHECK(r4.order == 4);
  CHECK(r4.orbit_size == 3);
  CHECK(r4.clifford_consistent);

  // H not normal: error
  auto cd = group_of("degree 3\n(1,2)\n");
  auto TC = compute_table(cd, "C2");
  FusionMap fc = build_fusion(gd, cd);
  CHECK_THROWS(inertia_group(principal_character(TC), TC, cd, gd, TG, 0, fc));
}

TEST_CASE("Frobenius kernels") {
  auto [gd, TG] = s3();
  // S3 with complement <(1,2)>: kernel is A3
  auto hd = group_of("degree 3\n(1,2)\n");
  FrobeniusKernelResult res = frobenius_kernel(gd, TG, hd);
  CHECK(res.order == 3);
  CHECK(res.kernel_classes == ClassSet{0, 2});

  // A4 with complement <(1,2,3)>: kernel is V4 of order 4
  auto [gd4, TG4] = a4();
  auto cd = group_of("degree 4\n(1,2,3)\n");
  FrobeniusKernelResult res4 = frobenius_kernel(gd4, TG4, cd);
  CHECK(res4.order == 4);

  // A3 is normal in S3, so the Frobenius condition fails
  auto ad = group_of("degree 3\n(1,2,3)\n");
  CHECK_THROWS(frobenius_kernel(gd, TG, ad));
}
