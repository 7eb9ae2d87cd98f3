#include "charblock/io.hpp"

#include <fstream>
#include <stdexcept>

namespace charblock {

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error &e) {
    throw std::runtime_error("parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const json &j, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

json table_to_json(const CharacterTable &T) {
  json j;
  j["name"] = T.name;
  j["order"] = T.group_order;
  j["exponent"] = T.exponent;
  json classes = json::array();
  for (const auto &c : T.classes) {
    json jc;
    jc["name"] = c.name;
    jc["size"] = c.size;
    jc["centralizer"] = c.centralizer;
    jc["order"] = c.order;
    json pm = json::object();
    for (const auto &[p, idx] : c.powermaps)
      pm[std::to_string(p)] = idx;
    jc["powermaps"] = pm;
    classes.push_back(jc);
  }
  j["classes"] = classes;
  json irr = json::array();
  for (const auto &row : T.irr) {
    json jr = json::array();
    for (const auto &v : row)
      jr.push_back(v.to_string());
    irr.push_back(jr);
  }
  j["irr"] = irr;
  return j;
}

CharacterTable table_from_json(const json &j) {
  CharacterTable T;
  try {
    T.name = j.at("name").get<std::string>();
    T.group_order = j.at("order").get<long>();
    T.exponent = j.at("exponent").get<long>();
    for (const auto &jc : j.at("classes")) {
      ClassInfo c;
      c.name = jc.at("name").get<std::string>();
      c.size = jc.at("size").get<long>();
      c.centralizer = jc.at("centralizer").get<long>();
      c.order = jc.at("order").get<int>();
      if (jc.contains("powermaps"))
        for (auto it = jc["powermaps"].begin(); it != jc["powermaps"].end();
             ++it)
          c.powermaps[std::stoi(it.key())] = it.value().get<int>();
      T.classes.push_back(std::move(c));
    }
    for (const auto &jr : j.at("irr")) {
      std::vector<Cyclo> row;
      for (const auto &v : jr)
        row.push_back(Cyclo::parse(v.get<std::string>()));
      T.irr.push_back(std::move(row));
    }
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("malformed table file: ") + e.what());
  }
  T.check_basic();
  return T;
}

CharacterTable read_table_file(const std::string &path) {
  return table_from_json(read_json_file(path));
}

void write_table_file(const CharacterTable &T, const std::string &path) {
  write_json_file(table_to_json(T), path);
}

json brauer_to_json(const BrauerTable &B) {
  json j;
  j["name"] = B.name;
  j["prime"] = B.prime;
  j["star"] = {{"conductor", B.star_conductor}, {"factor", B.star_factor}};
  j["classes"] = B.class_names;
  json ibr = json::array();
  for (const auto &row : B.ibr) {
    json jr = json::array();
    for (const auto &v : row)
      jr.push_back(v.to_string());
    ibr.push_back(jr);
  }
  j["ibr"] = ibr;
  return j;
}

BrauerTable brauer_from_json(const json &j) {
  BrauerTable B;
  try {
    B.name = j.at("name").get<std::string>();
    B.prime = j.at("prime").get<int>();
    B.star_conductor = j.at("star").at("conductor").get<long>();
    B.star_factor = j.at("star").at("factor").get<std::vector<int>>();
    B.class_names = j.at("classes").get<std::vector<std::string>>();
    for (const auto &jr : j.at("ibr")) {
      std::vector<Cyclo> row;
      for (const auto &v : jr)
        row.push_back(Cyclo::parse(v.get<std::string>()));
      B.ibr.push_back(std::move(row));
    }
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("malformed Brauer table file: ") +
                             e.what());
  }
  if (!is_prime(B.prime))
    throw std::runtime_error("Brauer table: prime field is not prime");
  return B;
}

BrauerTable read_brauer_file(const std::string &path) {
  return brauer_from_json(read_json_file(path));
}

void write_brauer_file(const BrauerTable &B, const std::string &path) {
  write_json_file(brauer_to_json(B), path);
}

json decomposition_to_json(const BlockPartition &bp, const DecompData &dd) {
  json blocks = json::array();
  for (const auto &blk : bp.blocks) {
    json jb;
    json irr = json::array();
    for (int i : blk.irr)
      irr.push_back(i + 1); // 1-based, matching printed tables
    json ibr = json::array();
    for (int i : blk.ibr)
      ibr.push_back(i + 1);
    jb["irr"] = irr;
    jb["ibr"] = ibr;
    jb["defect"] = blk.defect;
    jb["heights"] = blk.heights;
    json D = json::array();
    for (int i : blk.irr) {
      json row = json::array();
      for (int j : blk.ibr)
        row.push_back(dd.D[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      D.push_back(row);
    }
    jb["D"] = D;
    json C = json::array();
    for (int a : blk.ibr) {
      json row = json::array();
      for (int b : blk.ibr)
        row.push_back(dd.C[static_cast<size_t>(a)][static_cast<size_t>(b)]);
      C.push_back(row);
    }
    jb["C"] = C;
    blocks.push_back(jb);
  }
  json j;
  j["blocks"] = blocks;
  return j;
}

json class_function_to_json(const std::string &name,
                            const std::vector<Cyclo> &values) {
  json j;
  j["name"] = name;
  json v = json::array();
  for (const auto &x : values)
    v.push_back(x.to_string());
  j["values"] = v;
  return j;
}

std::vector<Cyclo> class_function_from_json(const json &j) {
  std::vector<Cyclo> out;
  try {
    for (const auto &v : j.at("values"))
      out.push_back(Cyclo::parse(v.get<std::string>()));
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("malformed class function file: ") +
                             e.what());
  }
  return out;
}

std::vector<Cyclo> read_class_function_file(const std::string &path) {
  return class_function_from_json(read_json_file(path));
}

} // namespace charblock
