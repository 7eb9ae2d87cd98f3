#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "charblock/io.hpp"

using namespace charblock;

namespace {

const std::string kData = CHARBLOCK_DATA_DIR;

} // namespace

TEST_CASE("character table files round-trip exactly") {
  for (auto name : {"s3.tbl", "a4.tbl", "s4.tbl", "sl23.tbl", "a5.tbl",
                    "psl27.tbl"}) {
    CharacterTable T = read_table_file(kData + "/golden/" + name);
    json j = table_to_json(T);
    CharacterTable back = table_from_json(j);
    CHECK(back.name == T.name);
    CHECK(back.group_order == T.group_order);
    CHECK(back.exponent == T.exponent);
    CHECK(back.irr == T.irr);
    REQUIRE(back.classes.size() == T.classes.size());
    for (size_t i = 0; i < T.classes.size(); ++i) {
      CHECK(back.classes[i].name == T.classes[i].name);
      CHECK(back.classes[i].size == T.classes[i].size);
      CHECK(back.classes[i].centralizer == T.classes[i].centralizer);
      CHECK(back.classes[i].order == T.classes[i].order);
      CHECK(back.classes[i].powermaps == T.classes[i].powermaps);
    }
    // byte-level fixpoint of write . parse
    CHECK(table_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("Brauer table files round-trip exactly") {
  for (auto name : {"s3_p2.btbl", "a5_p2.btbl", "psl27_p7.btbl"}) {
    BrauerTable B = read_brauer_file(kData + "/brauer/" + name);
    json j = brauer_to_json(B);
    BrauerTable back = brauer_from_json(j);
    CHECK(back.name == B.name);
    CHECK(back.prime == B.prime);
    CHECK(back.star_conductor == B.star_conductor);
    CHECK(back.star_factor == B.star_factor);
    CHECK(back.class_names == B.class_names);
    CHECK(back.ibr == B.ibr);
  }
}

TEST_CASE("malformed files are rejected with errors") {
  std::string tmp = "/tmp/charblock_io_test.json";
  {
    std::ofstream out(tmp);
    out << "{ \"name\": \"broken\""; // truncated
  }
  CHECK_THROWS(read_table_file(tmp));
  {
    std::ofstream out(tmp);
    out << "{ \"name\": \"x\", \"order\": 6, \"exponent\": 6, "
           "\"classes\": [], \"irr\": [] }";
  }
  CHECK_THROWS(read_table_file(tmp)); // sizes do not add up
  {
    // wrong centralizer breaks |K| * |C| = |G|
    CharacterTable T = read_table_file(kData + "/golden/s3.tbl");
    json j = table_to_json(T);
    j["classes"][1]["centralizer"] = 4;
    CHECK_THROWS(table_from_json(j));
  }
  {
    std::ofstream out(tmp);
    out << "{ \"values\": [\"E(5\"] }";
  }
  CHECK_THROWS(read_class_function_file(tmp));
  std::remove(tmp.c_str());
}

TEST_CASE("class function files") {
  std::vector<Cyclo> vals = {Cyclo(2), Cyclo(0),
                             Cyclo::parse("-E(5)-E(5)^4")};
  json j = class_function_to_json("test", vals);
  CHECK(class_function_from_json(j) == vals);
}

TEST_CASE("decomposition output shape") {
  CharacterTable T = read_table_file(kData + "/golden/s3.tbl");
  BrauerTable B = read_brauer_file(kData + "/brauer/s3_p3.btbl");
  StarMap star(3, T.exponent);
  BlockPartition bp = block_partition(T, 3, star);
  DecompData dd = decomposition_and_cartan(T, B, &bp);
  json j = decomposition_to_json(bp, dd);
  REQUIRE(j.contains("blocks"));
  REQUIRE(j["blocks"].size() == 1);
  CHECK(j["blocks"][0]["defect"] == 1);
  CHECK(j["blocks"][0]["irr"].size() == 3);
  CHECK(j["blocks"][0]["D"].size() == 3);
  CHECK(j["blocks"][0]["C"].size() == 2);
}
