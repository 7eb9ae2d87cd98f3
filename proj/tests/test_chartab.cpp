#include <doctest.h>

#include <map>

#include "charblock/chartab.hpp"
#include "charblock/classalg.hpp"

using namespace charblock;

namespace {

GroupData group_of(const std::string &text) {
  return make_group_data(parse_group_text(text));
}

GroupData s3() { return group_of("degree 3\n(1,2)\n(1,2,3)\n"); }
GroupData a4() { return group_of("degree 4\n(1,2)(3,4)\n(1,2,3)\n"); }
GroupData a5() { return group_of("degree 5\n(1,2,3,4,5)\n(1,2,3)\n"); }

Cyclo C(const std::string &s) { return Cyclo::parse(s); }

CharacterTable golden_from_rows(const GroupData &gd, const std::string &name,
                                std::vector<std::vector<std::string>> rows) {
  CharacterTable T;
  T.name = name;
  T.group_order = gd.G.order();
  T.exponent = gd.G.exponent();
  T.classes = class_infos(gd.G, gd.cc);
  for (const auto &r : rows) {
    std::vector<Cyclo> row;
    for (const auto &s : r)
      row.push_back(C(s));
    T.irr.push_back(std::move(row));
  }
  return T;
}

} // namespace

TEST_CASE("S3 character table matches the golden values exactly") {
  auto gd = s3();
  CharacterTable T = compute_table(gd, "S3");
  REQUIRE(T.irr_count() == 3);
  // canonical order: principal, then (1,-1,1), then (2,0,-1)
  CHECK(T.irr[0] == std::vector<Cyclo>{Cyclo(1), Cyclo(1), Cyclo(1)});
  CHECK(T.irr[1] == std::vector<Cyclo>{Cyclo(1), Cyclo(-1), Cyclo(1)});
  CHECK(T.irr[2] == std::vector<Cyclo>{Cyclo(2), Cyclo(0), Cyclo(-1)});
  CHECK(T.exponent == 6);
}

TEST_CASE("trivial group table") {
  auto gd = group_of("degree 1\n");
  CharacterTable T = compute_table(gd, "1");
  REQUIRE(T.irr_count() == 1);
  CHECK(T.irr[0] == std::vector<Cyclo>{Cyclo(1)});
}

TEST_CASE("cyclic group tables are the root-of-unity tables") {
  for (int n : {3, 4, 6}) {
    auto gd = group_of("degree " + std::to_string(n) + "\n(1," +
                       [&] {
                         std::string s;
                         for (int i = 2; i <= n; ++i)
                           s += std::to_string(i) + (i < n ? "," : "");
                         return s;
                       }() +
                       ")\n");
    CharacterTable T = compute_table(gd, "C" + std::to_string(n));
    REQUIRE(T.irr_count() == n);
    // every row is chi_j(c^i) = zeta^{ij} for some j, each j once
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int r = 0; r < n; ++r) {
      // identify j by the value on the class of c (a generator class)
      int gen_class = -1;
      for (int k = 0; k < T.class_count(); ++k)
        if (gd.cc.rep_orders[static_cast<size_t>(k)] == n)
          gen_class = k;
      REQUIRE(gen_class >= 0);
      bool matched = false;
      for (int j = 0; j < n && !matched; ++j) {
        if (T.value(r, gen_class) != Cyclo::root_of_unity(n, j))
          continue;
        bool all = true;
        for (int k = 0; k < T.class_count(); ++k) {
          long i = 0;
          // which power of the generator is this class?
          const Perm gen = gd.cc.reps[static_cast<size_t>(gen_class)];
          for (long e = 0; e < n; ++e)
            if (gen.power(e) == gd.cc.reps[static_cast<size_t>(k)])
              i = e;
          if (T.value(r, k) != Cyclo::root_of_unity(n, j * i))
            all = false;
        }
        if (all) {
          CHECK_FALSE(seen[static_cast<size_t>(j)]);
          seen[static_cast<size_t>(j)] = true;
          matched = true;
        }
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("A4 and A5 match the golden tables up to a Galois twist") {
  auto gd4 = a4();
  CharacterTable T4 = compute_table(gd4, "A4");
  CharacterTable G4 = golden_from_rows(
      gd4, "A4",
      {{"1", "1", "1", "1"},
       {"1", "1", "E(3)", "E(3)^2"},
       {"1", "1", "E(3)^2", "E(3)"},
       {"3", "-1", "0", "0"}});
  CHECK(tables_match_up_to_galois(T4, G4));

  auto gd5 = a5();
  CharacterTable T5 = compute_table(gd5, "A5");
  CharacterTable G5 = golden_from_rows(
      gd5, "A5",
      {{"1", "1", "1", "1", "1"},
       {"3", "-1", "0", "-E(5)^2-E(5)^3", "-E(5)-E(5)^4"},
       {"3", "-1", "0", "-E(5)-E(5)^4", "-E(5)^2-E(5)^3"},
       {"4", "0", "1", "-1", "-1"},
       {"5", "1", "-1", "0", "0"}});
  CHECK(tables_match_up_to_galois(T5, G5));
  // degrees 1, 3, 3, 4, 5 in canonical order
  std::vector<long> degs;
  for (int i = 0; i < 5; ++i)
    degs.push_back(T5.degree(i).get_num().get_si());
  CHECK(degs == std::vector<long>{1, 3, 3, 4, 5});
}

TEST_CASE("central characters of S3") {
  auto gd = s3();
  CharacterTable T = compute_table(gd, "S3");
  CentralCharTable om = central_characters(T);
  CHECK(om.omega[0] == std::vector<Cyclo>{Cyclo(1), Cyclo(3), Cyclo(2)});
  CHECK(om.omega[1] == std::vector<Cyclo>{Cyclo(1), Cyclo(-3), Cyclo(2)});
  CHECK(om.omega[2] == std::vector<Cyclo>{Cyclo(1), Cyclo(0), Cyclo(-1)});
}

TEST_CASE("central character column at the identity is 1") {
  auto gd = a4();
  CharacterTable T = compute_table(gd, "A4");
  CentralCharTable om = central_characters(T);
  for (const auto &row : om.omega)
    CHECK(row[0] == Cyclo(1));
  // A4 row of degree 3: (1, -1, 0, 0)
  CHECK(om.omega[3] ==
        std::vector<Cyclo>{Cyclo(1), Cyclo(-1), Cyclo(0), Cyclo(0)});
}

TEST_CASE("orthogonality verification and a corrupted table") {
  auto gd = s3();
  CharacterTable T = compute_table(gd, "S3");
  CHECK(verify_orthogonality(T).ok);
  CharacterTable bad = T;
  bad.irr[2] = bad.irr[1]; // duplicate a row
  VerifyReport rep = verify_orthogonality(bad);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("second orthogonality diagonal gives centralizer orders") {
  auto gd = s3();
  CharacterTable T = compute_table(gd, "S3");
  for (int K = 0; K < 3; ++K) {
    Cyclo s;
    for (int i = 0; i < 3; ++i)
      s += T.value(i, K) * T.value(i, K).conj();
    CHECK(s == Cyclo(T.classes[static_cast<size_t>(K)].centralizer));
  }
}

TEST_CASE("table determinant") {
  auto gd = s3();
  CharacterTable T = compute_table(gd, "S3");
  DeterminantResult det = table_determinant(T);
  CHECK(det.conjugate_pairs == 0);
  CHECK((det.value == Cyclo(6) || det.value == Cyclo(-6)));
  CHECK(det.check);

  auto c3 = group_of("degree 3\n(1,2,3)\n");
  CharacterTable T3 = compute_table(c3, "C3");
  DeterminantResult det3 = table_determinant(T3);
  CHECK(det3.conjugate_pairs == 1);
  CHECK(det3.value * det3.value == Cyclo(-27));
  CHECK(det3.check);

  auto t = group_of("degree 1\n");
  CharacterTable T1 = compute_table(t, "1");
  CHECK(table_determinant(T1).value == Cyclo(1));
}

TEST_CASE("structure report: S3") {
  auto gd = s3();
  CharacterTable T = compute_table(gd, "S3");
  StructureReport rep = structure_report(T);
  CHECK(rep.derived_subgroup == ClassSet{0, 2}); // 1a and 3a
  CHECK(rep.derived_order == 3);
  CHECK(rep.centre == ClassSet{0});
  CHECK(rep.centre_order == 1);
  CHECK(rep.linear_count == 2);
  CHECK(rep.solvable);
  CHECK_FALSE(rep.nilpotent);
  // normal subgroups: 1, A3, S3
  REQUIRE(rep.normal_subgroups.size() == 3);
  CHECK(rep.normal_subgroups[0].order == 1);
  CHECK(rep.normal_subgroups[1].order == 3);
  CHECK(rep.normal_subgroups[2].order == 6);
}

TEST_CASE("structure report: A5 is simple and not solvable") {
  auto gd = a5();
  CharacterTable T = compute_table(gd, "A5");
  StructureReport rep = structure_report(T);
  CHECK(rep.normal_subgroups.size() == 2);
  CHECK_FALSE(rep.solvable);
  CHECK_FALSE(rep.nilpotent);
  CHECK(rep.linear_count == 1);
  CHECK(rep.derived_order == 60);
}

TEST_CASE("structure report: abelian C4") {
  auto gd = group_of("degree 4\n(1,2,3,4)\n");
  CharacterTable T = compute_table(gd, "C4");
  StructureReport rep = structure_report(T);
  CHECK(rep.linear_count == 4);
  CHECK(rep.centre_order == 4);
  CHECK(rep.solvable);
  CHECK(rep.nilpotent);
}

TEST_CASE("commutator counts against brute force") {
  for (auto gd : {s3(), a4()}) {
    CharacterTable T = compute_table(gd, "G");
    std::vector<Integer> kappa = commutator_counts(T);
    // kappa(x_K) counts pairs for one fixed element, so divide the
    // per-class tally by |K|
    std::vector<Integer> brute(static_cast<size_t>(gd.cc.count()), 0);
    for (const auto &a : gd.G.elements())
      for (const auto &b : gd.G.elements()) {
        Perm comm = a.inverse() * b.inverse() * a * b;
        ++brute[static_cast<size_t>(gd.cc.class_of(gd.G, comm))];
      }
    for (int K = 0; K < gd.cc.count(); ++K)
      brute[static_cast<size_t>(K)] /= gd.cc.sizes[static_cast<size_t>(K)];
    CHECK(kappa == brute);
  }
  // S3 values from the worked example
  auto gd = s3();
  CharacterTable T = compute_table(gd, "S3");
  CHECK(commutator_counts(T) ==
        std::vector<Integer>{Integer(18), Integer(0), Integer(9)});
}

TEST_CASE("kappa(1) counts commuting pairs") {
  auto gd = a4();
  CharacterTable T = compute_table(gd, "A4");
  std::vector<Integer> kappa = commutator_counts(T);
  CHECK(kappa[0] == Integer(gd.cc.count()) * gd.G.order());
}

TEST_CASE("A5 is perfect: every class is a commutator class") {
  auto gd = a5();
  CharacterTable T = compute_table(gd, "A5");
  for (const auto &k : commutator_counts(T))
    CHECK(k > 0);
}

TEST_CASE("galois conjugation permutes rows") {
  auto gd = a5();
  CharacterTable T = compute_table(gd, "A5");
  auto id = galois_conjugate_table(T, 1);
  for (int i = 0; i < T.irr_count(); ++i)
    CHECK(id[static_cast<size_t>(i)] == i);
  // k = 2 swaps the two degree-3 rows (alpha <-> alpha*)
  auto p2 = galois_conjugate_table(T, 7); // 7 = 2 mod 5, coprime to 30
  CHECK(p2[1] == 2);
  CHECK(p2[2] == 1);
  CHECK(p2[0] == 0);
  CHECK(p2[3] == 3);
  CHECK(p2[4] == 4);
}

TEST_CASE("S4 table is rational, fixed by every Galois twist") {
  auto gd = group_of("degree 4\n(1,2)\n(1,2,3,4)\n");
  CharacterTable T = compute_table(gd, "S4");
  for (long k = 1; k < T.exponent; ++k) {
    if (gcd_long(k, T.exponent) != 1)
      continue;
    auto perm = galois_conjugate_table(T, k);
    for (int i = 0; i < T.irr_count(); ++i)
      CHECK(perm[static_cast<size_t>(i)] == i);
  }
}

TEST_CASE("Brauer permutation lemma: fixed rows = fixed classes") {
  auto gd = a5();
  CharacterTable T = compute_table(gd, "A5");
  for (long k = 1; k < T.exponent; ++k) {
    if (gcd_long(k, T.exponent) != 1)
      continue;
    auto perm = galois_conjugate_table(T, k);
    long fixed_rows = 0;
    for (int i = 0; i < T.irr_count(); ++i)
      if (perm[static_cast<size_t>(i)] == i)
        ++fixed_rows;
    long fixed_classes = 0;
    for (int K = 0; K < gd.cc.count(); ++K)
      if (gd.cc.power_class(gd.G, K, k) == K)
        ++fixed_classes;
    CHECK(fixed_rows == fixed_classes);
  }
}

TEST_CASE("structure constants recovered from the table") {
  for (auto gd : {s3(), a4(), a5()}) {
    CharacterTable T = compute_table(gd, "G");
    auto from_group = structure_constants(gd.G, gd.cc);
    auto from_table = structure_constants_from_table(T);
    CHECK(from_group.a == from_table.a);
  }
}

TEST_CASE("central character eigen relation") {
  auto gd = s3();
  CharacterTable T = compute_table(gd, "S3");
  auto sc = structure_constants(gd.G, gd.cc);
  CentralCharTable om = central_characters(T);
  for (int i = 0; i < T.irr_count(); ++i)
    for (int K = 0; K < 3; ++K)
      for (int L = 0; L < 3; ++L) {
        Cyclo lhs = om.omega[static_cast<size_t>(i)][static_cast<size_t>(K)] *
                    om.omega[static_cast<size_t>(i)][static_cast<size_t>(L)];
        Cyclo rhs;
        for (int M = 0; M < 3; ++M)
          rhs += Cyclo(sc.at(K, L, M)) *
                 om.omega[static_cast<size_t>(i)][static_cast<size_t>(M)];
        CHECK(lhs == rhs);
      }
}

TEST_CASE("regular character decomposes as sum of chi(1) chi") {
  auto gd = a4();
  CharacterTable T = compute_table(gd, "A4");
  int one = T.identity_class();
  std::vector<Cyclo> reg(static_cast<size_t>(T.class_count()), Cyclo(0));
  for (int i = 0; i < T.irr_count(); ++i)
    for (int K = 0; K < T.class_count(); ++K)
      reg[static_cast<size_t>(K)] += T.value(i, one) * T.value(i, K);
  CHECK(reg[static_cast<size_t>(one)] == Cyclo(T.group_order));
  for (int K = 0; K < T.class_count(); ++K)
    if (K != one)
      CHECK(reg[static_cast<size_t>(K)].is_zero());
}

TEST_CASE("degrees divide the group order and the centre index") {
  for (auto gd : {s3(), a4(), a5()}) {
    CharacterTable T = compute_table(gd, "G");
    StructureReport rep = structure_report(T);
    long zi = T.group_order / rep.centre_order;
    for (int i = 0; i < T.irr_count(); ++i) {
      long d = T.degree(i).get_num().get_si();
      CHECK(T.group_order % d == 0);
      CHECK(zi % d == 0);
    }
  }
}
