#ifndef CHARBLOCK_IO_HPP
#define CHARBLOCK_IO_HPP

#include <string>

#include <json.hpp>

#include "charblock/blocks.hpp"
#include "charblock/chartab.hpp"

namespace charblock {

using nlohmann::json;

// ---- character table files -------------------------------------------
// {name, order, exponent, classes:[{name,size,centralizer,order,
//  powermaps:{"p":index}}], irr:[["cyclo",...],...]}

json table_to_json(const CharacterTable &T);
CharacterTable table_from_json(const json &j);
CharacterTable read_table_file(const std::string &path);
void write_table_file(const CharacterTable &T, const std::string &path);

// ---- Brauer table files ------------------------------------------------
// {name, prime, star:{conductor, factor:[F_p coeffs]}, classes:[names],
//  ibr:[["cyclo",...],...]}

json brauer_to_json(const BrauerTable &B);
BrauerTable brauer_from_json(const json &j);
BrauerTable read_brauer_file(const std::string &path);
void write_brauer_file(const BrauerTable &B, const std::string &path);

// ---- decomposition output ----------------------------------------------
// {blocks:[{irr:[...], ibr:[...], defect, heights:[...], D:[[...]],
//  C:[[...]]}]}

json decomposition_to_json(const BlockPartition &bp, const DecompData &dd);

// ---- class function files ----------------------------------------------
// {name, values:["cyclo",...]} over the table's class order

json class_function_to_json(const std::string &name,
                            const std::vector<Cyclo> &values);
std::vector<Cyclo> class_function_from_json(const json &j);
std::vector<Cyclo> read_class_function_file(const std::string &path);

json read_json_file(const std::string &path);
void write_json_file(const json &j, const std::string &path);

} // namespace charblock

#endif
