#include <doctest.h>

#include <set>

#include "charblock/perm.hpp"

using namespace charblock;

namespace {

PermGroup s3() {
  return PermGroup::generated(
      {Perm::from_cycles(3, "(1,2)"), Perm::from_cycles(3, "(1,2,3)")});
}

PermGroup a4() {
  return PermGroup::generated(
      {Perm::from_cycles(4, "(1,2)(3,4)"), Perm::from_cycles(4, "(1,2,3)")});
}

} // namespace

TEST_CASE("cycle notation round trip") {
  Perm g = Perm::from_cycles(5, "(1,2,3)(4,5)");
  CHECK(g.order() == 6);
  CHECK(Perm::from_cycles(5, g.to_cycle_string()) == g);
  CHECK(Perm(4).to_cycle_string() == "()");
  CHECK_THROWS(Perm::from_cycles(3, "(1,4)"));
  CHECK_THROWS(Perm::from_cycles(3, "(1,2)(2,3)"));
}

TEST_CASE("enumeration: S3, A4, trivial, cap") {
  CHECK(s3().order() == 6);
  // closure oracle for A4: naive pairwise-product closure over Perms
  {
    std::set<Perm> closure{Perm(4)};
    std::vector<Perm> gens = {Perm::from_cycles(4, "(1,2)(3,4)"),
                              Perm::from_cycles(4, "(1,2,3)")};
    for (const auto &g : gens)
      closure.insert(g);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Perm> items(closure.begin(), closure.end());
      for (const auto &a : items)
        for (const auto &b : items)
          if (closure.insert(a * b).second)
            grew = true;
    }
    CHECK(closure.size() == 12);
    CHECK(a4().order() == 12);
  }
  CHECK(PermGroup::generated({Perm(5)}).order() == 1);
  CHECK_THROWS_WITH(
      PermGroup::generated({Perm::from_cycles(6, "(1,2,3,4,5,6)")}, 5),
      "group too large");
  CHECK_THROWS(PermGroup::generated(
      {Perm::from_cycles(3, "(1,2)"), Perm::from_cycles(4, "(1,2)")}));
}

TEST_CASE("conjugacy data for S3 and A4") {
  auto G = s3();
  auto cc = conjugacy_data(G);
  REQUIRE(cc.count() == 3);
  CHECK(cc.sizes == std::vector<long>{1, 3, 2});
  CHECK(cc.centralizer_orders == std::vector<long>{6, 2, 3});
  CHECK(cc.names == std::vector<std::string>{"1a", "2a", "3a"});
  CHECK(cc.inverse_map == std::vector<int>{0, 1, 2});

  auto A = a4();
  auto cca = conjugacy_data(A);
  REQUIRE(cca.count() == 4);
  CHECK(cca.sizes == std::vector<long>{1, 3, 4, 4});
  CHECK(cca.names == std::vector<std::string>{"1a", "2a", "3a", "3b"});
  // the two order-3 classes are mutually inverse in A4
  CHECK(cca.inverse_map[2] == 3);
  CHECK(cca.inverse_map[3] == 2);

  auto T = PermGroup::generated({Perm(1)});
  CHECK(conjugacy_data(T).count() == 1);
}

TEST_CASE("class sizes sum to the order, size * centralizer = order") {
  for (auto G : {s3(), a4()}) {
    auto cc = conjugacy_data(G);
    long sum = 0;
    for (int i = 0; i < cc.count(); ++i) {
      sum += cc.sizes[static_cast<size_t>(i)];
      CHECK(cc.sizes[static_cast<size_t>(i)] *
                cc.centralizer_orders[static_cast<size_t>(i)] ==
            G.order());
    }
    CHECK(sum == G.order());
  }
}

TEST_CASE("class_of is conjugation invariant") {
  auto G = a4();
  auto cc = conjugacy_data(G);
  for (long e = 0; e < G.order(); e += 3) {
    const Perm &x = G.element(e);
    for (const auto &g : G.elements())
      CHECK(cc.class_of(G, x.conjugated_by(g)) == cc.class_of(G, x));
  }
}

TEST_CASE("p_parts") {
  // element of order 6: g_2 = g^3, g_{2'} = g^4
  Perm g = Perm::from_cycles(6, "(1,2,3,4,5,6)");
  auto [g2, g2p] = p_parts(g, 2);
  CHECK(g2 == g.power(3));
  CHECK(g2p == g.power(4));
  CHECK(g2.order() == 2);
  CHECK(g2p.order() == 3);
  CHECK(g2 * g2p == g);
  // order coprime to p
  Perm h = Perm::from_cycles(3, "(1,2,3)");
  auto [h2, h2p] = p_parts(h, 2);
  CHECK(h2.is_identity());
  CHECK(h2p == h);
  auto [i3, i3p] = p_parts(Perm(4), 3);
  CHECK(i3.is_identity());
  CHECK(i3p.is_identity());
  CHECK_THROWS(p_parts(h, 4));
}

TEST_CASE("p_parts properties on all of S4") {
  auto G = PermGroup::generated(
      {Perm::from_cycles(4, "(1,2)"), Perm::from_cycles(4, "(1,2,3,4)")});
  for (const auto &g : G.elements())
    for (int p : {2, 3}) {
      auto [gp, gpp] = p_parts(g, p);
      CHECK(gp * gpp == g);
      CHECK(gpp * gp == g);
      CHECK(static_cast<long>(gp.order()) * gpp.order() == g.order());
      CHECK(p_part(gp.order(), p) == gp.order());
      CHECK(gpp.order() % p != 0);
    }
}

TEST_CASE("p-regular classes of S3") {
  auto G = s3();
  auto cc = conjugacy_data(G);
  CHECK(p_regular_classes(cc, 2) == std::vector<int>{0, 2}); // 1a, 3a
  CHECK(p_regular_classes(cc, 3) == std::vector<int>{0, 1}); // 1a, 2a
  CHECK(p_regular_classes(cc, 5) == std::vector<int>{0, 1, 2});
}

TEST_CASE("sylow subgroups") {
  auto G = s3();
  // S3, p = 3: the cyclic subgroup of order 3, by brute force over all
  // p-subgroups for the oracle
  auto gens = sylow_p_subgroup(G.elements(), 3);
  auto sub = subgroup_closure(gens, 3);
  CHECK(sub.size() == 3);
  std::set<Perm> expect{Perm(3), Perm::from_cycles(3, "(1,2,3)"),
                        Perm::from_cycles(3, "(1,3,2)")};
  CHECK(std::set<Perm>(sub.begin(), sub.end()) == expect);

  // p does not divide |S|: trivial subgroup
  auto t = sylow_p_subgroup(G.elements(), 5);
  CHECK(subgroup_closure(t, 3).size() == 1);

  // a 2-group is its own Sylow 2-subgroup (V4 inside A4)
  auto A = a4();
  std::vector<Perm> v4;
  for (const auto &g : A.elements())
    if (g.is_identity() || g.order() == 2)
      v4.push_back(g);
  REQUIRE(v4.size() == 4);
  auto sg = sylow_p_subgroup(v4, 2);
  CHECK(subgroup_closure(sg, 4).size() == 4);

  // Sylow subgroup of S4 at p = 2 has order 8
  auto S4 = PermGroup::generated(
      {Perm::from_cycles(4, "(1,2)"), Perm::from_cycles(4, "(1,2,3,4)")});
  CHECK(subgroup_closure(sylow_p_subgroup(S4.elements(), 2), 4).size() == 8);
}

TEST_CASE("p-sections") {
  auto G = s3();
  auto cc = conjugacy_data(G);
  // S3, p=3: {1a,3a} (p-part trivial gives the p-regular section of 1 is
  // {1a,2a}); classes grouped by the class of their p-part
  auto sec3 = p_section_partition(G, cc, 3);
  REQUIRE(sec3.size() == 2);
  CHECK(sec3[0] == std::vector<int>{0, 1}); // section of 1: p-regular
  CHECK(sec3[1] == std::vector<int>{2});
  auto sec2 = p_section_partition(G, cc, 2);
  REQUIRE(sec2.size() == 2);
  CHECK(sec2[0] == std::vector<int>{0, 2});
  CHECK(sec2[1] == std::vector<int>{1});
  // p does not divide |G|: a single section
  auto sec5 = p_section_partition(G, cc, 5);
  REQUIRE(sec5.size() == 1);
  CHECK(sec5[0] == std::vector<int>{0, 1, 2});

  // section of 1 equals the p-regular classes, via the p-parts oracle
  for (int p : {2, 3}) {
    auto sec = p_section_partition(G, cc, p);
    CHECK(sec[0] == p_regular_classes(cc, p));
  }
}

TEST_CASE("group file parsing") {
  PermGroup G = parse_group_text("# symmetric group on 3 points\n"
                                 "degree 3\n"
                                 "(1,2)\n"
                                 "\n"
                                 "(1,2,3)\n");
  CHECK(G.order() == 6);
  CHECK_THROWS(parse_group_text("(1,2)\n"));
  CHECK_THROWS(parse_group_text("degree 0\n"));
}
