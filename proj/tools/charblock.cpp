// Command-line front end: exact character tables, table-derived structure,
// and p-modular block data for small permutation groups.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "charblock/blocks.hpp"
#include "charblock/charops.hpp"
#include "charblock/chartab.hpp"
#include "charblock/fpg.hpp"
#include "charblock/io.hpp"

using namespace charblock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

long order_cap() {
  if (const char *env = std::getenv("CHARBLOCK_MAX_ORDER"))
    return std::atol(env);
  return kDefaultOrderCap;
}

GroupData load_group(const std::string &path) {
  return make_group_data(parse_group_file(path, order_cap()));
}

std::string pad(const std::string &s, size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

std::string display(const Cyclo &v) {
  if (v.is_zero())
    return "."; // printed tables use a dot for zero
  return v.to_string();
}

// appendix-style layout: |K| and |C_G(x_K)| header rows, then the rows
void print_table_text(const CharacterTable &T, std::ostream &os) {
  int k = T.class_count();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"K"}, sizes{"|K|"}, cents{"|C(x_K)|"};
  for (const auto &c : T.classes) {
    head.push_back(c.name);
    sizes.push_back(std::to_string(c.size));
    cents.push_back(std::to_string(c.centralizer));
  }
  cells.push_back(head);
  cells.push_back(sizes);
  cells.push_back(cents);
  for (int i = 0; i < T.irr_count(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1)};
    for (int K = 0; K < k; ++K)
      row.push_back(display(T.value(i, K)));
    cells.push_back(row);
  }
  std::vector<size_t> width(static_cast<size_t>(k) + 1, 0);
  for (const auto &row : cells)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  os << T.name << "  |G| = " << T.group_order << "  exponent " << T.exponent
     << "\n";
  for (size_t r = 0; r < cells.size(); ++r) {
    if (r == 3) {
      for (size_t c = 0; c <= static_cast<size_t>(k); ++c)
        os << std::string(width[c] + 2, '-');
      os << "\n";
    }
    for (size_t c = 0; c < cells[r].size(); ++c)
      os << "  " << pad(cells[r][c], width[c]);
    os << "\n";
  }
}

void print_brauer_text(const BrauerTable &B, std::ostream &os) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"K"};
  for (const auto &n : B.class_names)
    head.push_back(n);
  cells.push_back(head);
  for (int i = 0; i < B.ibr_count(); ++i) {
    std::vector<std::string> row{"phi." + std::to_string(i + 1)};
    for (const auto &v : B.ibr[static_cast<size_t>(i)])
      row.push_back(display(v));
    cells.push_back(row);
  }
  std::vector<size_t> width(head.size(), 0);
  for (const auto &row : cells)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  os << B.name << "  mod " << B.prime << "\n";
  for (const auto &row : cells) {
    for (size_t c = 0; c < row.size(); ++c)
      os << "  " << pad(row[c], width[c]);
    os << "\n";
  }
}

std::string class_set_names(const CharacterTable &T, const ClassSet &s) {
  std::string out = "{";
  bool first = true;
  for (int k : s) {
    if (!first)
      out += ",";
    out += T.classes[static_cast<size_t>(k)].name;
    first = false;
  }
  return out + "}";
}

std::string fq_str(const FqField &F, const FqElem &e) {
  if (F.degree() == 1)
    return std::to_string(e.c[0]);
  return F.to_string(e);
}

int run_verify(const CharacterTable &T, const std::string &format,
               std::ostream &os) {
  VerifyReport rep = verify_orthogonality(T);
  Rational burnside(0);
  for (int i = 0; i < T.irr_count(); ++i)
    burnside += T.degree(i) * T.degree(i);
  if (burnside != Rational(T.group_order)) {
    rep.failures.push_back("sum of squared degrees != |G|");
    rep.ok = false;
  }
  try {
    central_characters(T);
  } catch (const std::exception &e) {
    rep.ok = false;
    rep.failures.push_back(e.what());
  }
  if (format == "json") {
    json j;
    j["ok"] = rep.ok;
    j["failures"] = rep.failures;
    os << j.dump(2) << "\n";
  } else if (format == "text") {
    if (rep.ok)
      os << "table verifies: orthogonality, degree sum, central character "
            "integrality\n";
    for (const auto &f : rep.failures)
      os << "FAIL: " << f << "\n";
  }
  return rep.ok ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact character tables and p-blocks of finite groups"};
  app.require_subcommand(1);
  std::string format = "text";
  unsigned long seed = 0;
  app.add_option("--format", format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized internals");

  std::string group_file, table_file, brauer_file, sub_file, char_file,
      dgens_file, out_file;
  int prime = 0;

  auto *classes = app.add_subcommand("classes", "conjugacy class data")->fallthrough();
  classes->add_option("group", group_file)->required();

  auto *chartab = app.add_subcommand("chartab", "ordinary character table")->fallthrough();
  chartab->add_option("group", group_file)->required();
  chartab->add_option("-o,--output", out_file, "write the table file here");

  auto *verify = app.add_subcommand("verify", "verify a table file")->fallthrough();
  verify->add_option("table", table_file)->required();

  auto *blocks = app.add_subcommand("blocks", "p-block partition")->fallthrough();
  blocks->add_option("table", table_file)->required();
  blocks->add_option("-p", prime, "the prime")->required();
  blocks->add_option("-g,--group", group_file,
                     "group file for defect groups and local data");

  auto *decompose_cmd =
      app.add_subcommand("decompose", "decomposition and Cartan matrices")->fallthrough();
  decompose_cmd->add_option("table", table_file)->required();
  decompose_cmd->add_option("brauer", brauer_file)->required();
  decompose_cmd->add_option("-o,--output", out_file,
                        "write the decomposition JSON here");

  auto *induce_cmd = app.add_subcommand("induce", "induce a class function")->fallthrough();
  induce_cmd->add_option("group", group_file)->required();
  induce_cmd->add_option("subgroup", sub_file)->required();
  induce_cmd->add_option("charfile", char_file)->required();

  auto *indblock = app.add_subcommand("induced-block", "induced p-blocks")->fallthrough();
  indblock->add_option("group", group_file)->required();
  indblock->add_option("subgroup", sub_file)->required();
  indblock->add_option("-p", prime, "the prime")->required();

  auto *brhom = app.add_subcommand("brauer-hom", "Brauer homomorphism")->fallthrough();
  brhom->add_option("group", group_file)->required();
  brhom->add_option("psubgroup", sub_file)->required();

  auto *robinson = app.add_subcommand(
      "robinson", "block count with a normal defect group")->fallthrough();
  robinson->add_option("group", group_file)->required();
  robinson->add_option("-p", prime, "the prime")->required();
  robinson
      ->add_option("-D,--defect-group", dgens_file,
                   "generators of the normal p-subgroup (group file)")
      ->required();

  auto *frob = app.add_subcommand("frobenius-kernel",
                                  "Frobenius kernel from characters")->fallthrough();
  frob->add_option("group", group_file)->required();
  frob->add_option("subgroup", sub_file)->required();

  auto *oracle = app.add_subcommand("oracle", "group algebra verification")->fallthrough();
  oracle->add_option("group", group_file)->required();
  oracle->add_option("-p", prime, "the prime")->required();

  auto *report = app.add_subcommand("report", "table-derived structure")->fallthrough();
  report->add_option("table", table_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostream &os = std::cout;
  try {
    if (classes->parsed()) {
      GroupData gd = load_group(group_file);
      auto infos = class_infos(gd.G, gd.cc);
      if (format == "json") {
        json j = json::array();
        for (const auto &c : infos) {
          json jc{{"name", c.name},
                  {"size", c.size},
                  {"centralizer", c.centralizer},
                  {"order", c.order}};
          json pm = json::object();
          for (auto [p, idx] : c.powermaps)
            pm[std::to_string(p)] = idx;
          jc["powermaps"] = pm;
          j.push_back(jc);
        }
        os << j.dump(2) << "\n";
      } else {
        os << "|G| = " << gd.G.order() << ", " << infos.size()
           << " classes\n";
        for (const auto &c : infos)
          os << "  " << pad(c.name, 4)
             << "  |K| = " << pad(std::to_string(c.size), 6)
             << "  |C(x)| = " << pad(std::to_string(c.centralizer), 6)
             << "  order " << c.order << "\n";
      }
      return kExitOk;
    }

    if (chartab->parsed()) {
      GroupData gd = load_group(group_file);
      std::string name = group_file;
      auto slash = name.find_last_of('/');
      if (slash != std::string::npos)
        name = name.substr(slash + 1);
      auto dot = name.find_last_of('.');
      if (dot != std::string::npos)
        name = name.substr(0, dot);
      CharacterTable T = compute_table(gd, name, seed);
      if (!out_file.empty())
        write_table_file(T, out_file);
      if (format == "json")
        os << table_to_json(T).dump(2) << "\n";
      else
        print_table_text(T, os);
      return kExitOk;
    }

    if (verify->parsed()) {
      CharacterTable T = read_table_file(table_file);
      return run_verify(T, format, os);
    }

    if (blocks->parsed()) {
      CharacterTable T = read_table_file(table_file);
      if (!is_prime(prime))
        throw std::runtime_error("p must be prime");
      StarMap star(prime, T.exponent);
      BlockPartition bp = block_partition(T, prime, star);
      std::optional<GroupData> gd;
      if (!group_file.empty()) {
        gd = load_group(group_file);
        block_local_data(bp, T, *gd, star);
      }
      const FqField &F = star.field();
      if (format == "json") {
        json j;
        j["prime"] = prime;
        json jb = json::array();
        for (const auto &b : bp.blocks) {
          json x;
          json irr = json::array();
          for (int i : b.irr)
            irr.push_back(i + 1);
          x["irr"] = irr;
          x["defect"] = b.defect;
          x["heights"] = b.heights;
          x["principal"] = b.principal;
          json lam = json::array();
          for (const auto &l : b.lambda)
            lam.push_back(fq_str(F, l));
          x["lambda"] = lam;
          if (gd) {
            json dc = json::array();
            for (int K : b.defect_classes)
              dc.push_back(T.classes[static_cast<size_t>(K)].name);
            x["defect_classes"] = dc;
            x["defect_group_order"] = b.defect_group_order;
            json gens = json::array();
            for (const auto &g : b.defect_group_gens)
              gens.push_back(g.to_cycle_string());
            x["defect_group"] = gens;
          }
          jb.push_back(x);
        }
        j["blocks"] = jb;
        os << j.dump(2) << "\n";
      } else {
        os << bp.block_count() << " block(s) at p = " << prime << "\n";
        for (int bi = 0; bi < bp.block_count(); ++bi) {
          const Block &b = bp.blocks[static_cast<size_t>(bi)];
          os << "block " << bi + 1 << (b.principal ? " (principal)" : "")
             << ": defect " << b.defect << ", irr {";
          for (size_t i = 0; i < b.irr.size(); ++i)
            os << (i ? "," : "") << "X." << b.irr[i] + 1;
          os << "}, lambda (";
          for (size_t K = 0; K < b.lambda.size(); ++K)
            os << (K ? "," : "") << fq_str(F, b.lambda[K]);
          os << ")\n";
          if (gd) {
            os << "  defect classes ";
            ClassSet dc(b.defect_classes.begin(), b.defect_classes.end());
            os << class_set_names(T, dc) << ", defect group of order "
               << b.defect_group_order << " = <";
            for (size_t i = 0; i < b.defect_group_gens.size(); ++i)
              os << (i ? ", " : "")
                 << b.defect_group_gens[i].to_cycle_string();
            os << ">\n";
          }
        }
      }
      return kExitOk;
    }

    if (decompose_cmd->parsed()) {
      CharacterTable T = read_table_file(table_file);
      BrauerTable B = read_brauer_file(brauer_file);
      StarMap star(B.prime, T.exponent);
      BlockPartition bp = block_partition(T, B.prime, star);
      DecompData dd = decomposition_and_cartan(T, B, &bp);
      PrincipalIndecomposables pi = principal_indecomposables(dd, T, B);
      json j = decomposition_to_json(bp, dd);
      j["cartan_det"] = dd.cartan_det.get_str();
      j["cartan_det_ok"] = dd.cartan_det_ok;
      j["principal_indecomposables_ok"] = pi.ok;
      if (!out_file.empty())
        write_json_file(j, out_file);
      if (format == "json") {
        os << j.dump(2) << "\n";
      } else {
        print_brauer_text(B, os);
        os << "\ndet C = " << dd.cartan_det.get_str() << " ("
           << (dd.cartan_det_ok ? "matches" : "MISMATCH")
           << " prod |C_G(x_K)|_p)\n";
        for (int bi = 0; bi < bp.block_count(); ++bi) {
          const Block &b = bp.blocks[static_cast<size_t>(bi)];
          os << "block " << bi + 1 << ": defect " << b.defect << ", irr {";
          for (size_t i = 0; i < b.irr.size(); ++i)
            os << (i ? "," : "") << "X." << b.irr[i] + 1;
          os << "}, ibr {";
          for (size_t i = 0; i < b.ibr.size(); ++i)
            os << (i ? "," : "") << "phi." << b.ibr[i] + 1;
          os << "}\n  D_B:";
          for (int i : b.irr) {
            os << " [";
            for (size_t c = 0; c < b.ibr.size(); ++c)
              os << (c ? " " : "")
                 << dd.D[static_cast<size_t>(i)]
                        [static_cast<size_t>(b.ibr[c])];
            os << "]";
          }
          os << "\n";
          BrauerTreeResult tree = brauer_tree(bp, bi, dd, T, B.prime);
          if (tree.ok && !tree.edges.empty()) {
            os << "  Brauer tree edges:";
            for (auto [u, v] : tree.edges)
              os << " (" << u + 1 << "-" << v + 1 << ")";
            if (tree.exceptional_vertex >= 0)
              os << ", exceptional vertex " << tree.exceptional_vertex + 1
                 << " of multiplicity " << tree.exceptional_multiplicity;
            os << "\n";
          }
        }
        if (!pi.ok)
          for (const auto &f : pi.failures)
            os << "FAIL: " << f << "\n";
      }
      return (dd.cartan_det_ok && pi.ok) ? kExitOk : kExitVerification;
    }

    if (induce_cmd->parsed()) {
      GroupData gd = load_group(group_file);
      GroupData hd = load_group(sub_file);
      CharacterTable TG = compute_table(gd, "G", seed);
      CharacterTable TH = compute_table(hd, "H", seed);
      FusionMap fus = build_fusion(gd, hd);
      std::vector<Cyclo> vals = read_class_function_file(char_file);
      if (vals.size() != static_cast<size_t>(TH.class_count()))
        throw std::runtime_error(
            "class function length does not match the subgroup");
      ClassFunction ind =
          induce(class_function(TH, std::move(vals)), TH, TG, fus);
      Decomposition dec = decompose(ind);
      if (format == "json") {
        json j = class_function_to_json("induced", ind.values);
        json coeffs = json::array();
        for (const auto &c : dec.coeffs)
          coeffs.push_back(c.to_string());
        j["decomposition"] = coeffs;
        j["is_character"] = dec.is_character;
        j["is_generalized"] = dec.is_generalized;
        os << j.dump(2) << "\n";
      } else {
        os << "induced values:";
        for (const auto &v : ind.values)
          os << " " << display(v);
        os << "\ndecomposition over Irr(G):";
        for (const auto &c : dec.coeffs)
          os << " " << c.to_string();
        os << (dec.is_character ? "  (a character)"
               : dec.is_generalized ? "  (a generalized character)"
                                    : "  (not a generalized character)")
           << "\n";
      }
      return kExitOk;
    }

    if (indblock->parsed()) {
      if (!is_prime(prime))
        throw std::runtime_error("p must be prime");
      GroupData gd = load_group(group_file);
      GroupData hd = load_group(sub_file);
      CharacterTable TG = compute_table(gd, "G", seed);
      CharacterTable TH = compute_table(hd, "H", seed);
      StarMap star(prime, gd.G.exponent());
      auto scG = structure_constants(gd.G, gd.cc);
      BlockPartition bg = block_partition(TG, prime, star);
      BlockPartition bh = block_partition(TH, prime, star);
      const FqField &F = star.field();
      json out = json::array();
      for (int b = 0; b < bh.block_count(); ++b) {
        InducedBlockResult r =
            induced_block(gd, TG, scG, bg, hd, TH, bh, b, star);
        json x;
        x["h_block"] = b + 1;
        x["principal"] = bh.blocks[static_cast<size_t>(b)].principal;
        x["defined"] = r.defined;
        if (r.defined) {
          x["g_block"] = r.g_block + 1;
          x["g_block_principal"] =
              bg.blocks[static_cast<size_t>(r.g_block)].principal;
          json lam = json::array();
          for (const auto &l : r.lambda_values)
            lam.push_back(fq_str(F, l));
          x["lambda"] = lam;
        } else {
          x["reason"] = r.reason;
        }
        out.push_back(x);
        if (format != "json") {
          os << "block " << b + 1 << " of H"
             << (bh.blocks[static_cast<size_t>(b)].principal ? " (principal)"
                                                             : "")
             << ": ";
          if (r.defined) {
            os << "b^G = block " << r.g_block + 1 << " of G"
               << (bg.blocks[static_cast<size_t>(r.g_block)].principal
                       ? " (principal)"
                       : "")
               << ", lambda (";
            for (size_t K = 0; K < r.lambda_values.size(); ++K)
              os << (K ? "," : "") << fq_str(F, r.lambda_values[K]);
            os << ")\n";
          } else {
            os << "undefined (" << r.reason << ")\n";
          }
        }
      }
      if (format == "json")
        os << out.dump(2) << "\n";
      return kExitOk;
    }

    if (brhom->parsed()) {
      GroupData gd = load_group(group_file);
      PermGroup P = parse_group_file(sub_file, order_cap());
      long po = P.order();
      int p = 2;
      while (p <= po && po % p != 0)
        ++p;
      if (po == 1)
        p = 2;
      StarMap star(p, gd.G.exponent());
      BrauerHomResult res = brauer_homomorphism(gd, P.generators(), p, star);
      auto ninfos = class_infos(res.N.G, res.N.cc);
      if (format == "json") {
        json j;
        j["normalizer_order"] = res.N.G.order();
        json img = json::array();
        for (int K = 0; K < gd.cc.count(); ++K) {
          json row = json::array();
          for (int i = 0; i < res.N.cc.count(); ++i)
            row.push_back(fq_str(
                star.field(),
                res.image[static_cast<size_t>(K)][static_cast<size_t>(i)]));
          img.push_back(row);
        }
        j["image"] = img;
        json names = json::array();
        for (const auto &c : ninfos)
          names.push_back(c.name);
        j["normalizer_classes"] = names;
        os << j.dump(2) << "\n";
      } else {
        os << "|P| = " << po << ", N = N_G(P) of order " << res.N.G.order()
           << "\n";
        for (int K = 0; K < gd.cc.count(); ++K) {
          os << "beta_P(" << gd.cc.names[static_cast<size_t>(K)] << "^) = ";
          bool any = false;
          for (int i = 0; i < res.N.cc.count(); ++i) {
            const FqElem &c =
                res.image[static_cast<size_t>(K)][static_cast<size_t>(i)];
            if (c.is_zero())
              continue;
            if (any)
              os << " + ";
            os << ninfos[static_cast<size_t>(i)].name << "^";
            any = true;
          }
          os << (any ? "" : "0") << "\n";
        }
      }
      return kExitOk;
    }

    if (robinson->parsed()) {
      if (!is_prime(prime))
        throw std::runtime_error("p must be prime");
      GroupData gd = load_group(group_file);
      PermGroup D = parse_group_file(dgens_file, order_cap());
      long count = robinson_block_count(gd, prime, D.generators());
      if (format == "json") {
        json j{{"blocks_with_defect_group_D", count}};
        os << j.dump(2) << "\n";
      } else {
        os << count << " block(s) with defect group D (|D| = " << D.order()
           << ") at p = " << prime << "\n";
      }
      return kExitOk;
    }

    if (frob->parsed()) {
      GroupData gd = load_group(group_file);
      GroupData hd = load_group(sub_file);
      CharacterTable TG = compute_table(gd, "G", seed);
      FrobeniusKernelResult res = frobenius_kernel(gd, TG, hd);
      if (format == "json") {
        json j;
        j["order"] = res.order;
        json cls = json::array();
        for (int K : res.kernel_classes)
          cls.push_back(TG.classes[static_cast<size_t>(K)].name);
        j["classes"] = cls;
        os << j.dump(2) << "\n";
      } else {
        os << "Frobenius kernel of order " << res.order << ", classes "
           << class_set_names(TG, res.kernel_classes) << "\n";
      }
      return kExitOk;
    }

    if (oracle->parsed()) {
      if (!is_prime(prime))
        throw std::runtime_error("p must be prime");
      GroupData gd = load_group(group_file);
      if (gd.G.order() > kOracleOrderCap)
        throw std::runtime_error("group exceeds the oracle order cap");
      CharacterTable T = compute_table(gd, "G", seed);
      StarMap star(prime, T.exponent);
      BlockPartition bp = block_partition(T, prime, star);
      block_local_data(bp, T, gd, star);
      GroupAlgebra A(gd, star.field());
      OracleReport rep = verify_block_idempotents(A, bp, T);
      CentreRadical cr = centre_radical(A, bp, T);
      if (format == "json") {
        json j;
        j["ok"] = rep.ok;
        j["failures"] = rep.failures;
        j["blocks"] = bp.block_count();
        j["centre_dim"] = cr.centre_dim;
        j["radical_dim"] = cr.radical_dim;
        j["nilpotency_index"] = cr.nilpotency_index;
        os << j.dump(2) << "\n";
      } else {
        os << bp.block_count() << " block(s); dim Z(FG) = " << cr.centre_dim
           << ", dim J(Z(FG)) = " << cr.radical_dim << ", J^"
           << cr.nilpotency_index << " = 0\n";
        if (rep.ok)
          os << "block idempotents verify: e_B^2 = e_B, orthogonality, "
                "centrality, sum 1, primitivity via locality\n";
        for (const auto &f : rep.failures)
          os << "FAIL: " << f << "\n";
      }
      return rep.ok ? kExitOk : kExitVerification;
    }

    if (report->parsed()) {
      CharacterTable T = read_table_file(table_file);
      int rc = run_verify(T, "none", os);
      StructureReport rep = structure_report(T);
      DeterminantResult det = table_determinant(T);
      std::vector<Integer> kappa = commutator_counts(T);
      if (format == "json") {
        json j;
        j["order"] = T.group_order;
        j["linear_count"] = rep.linear_count;
        j["derived_order"] = rep.derived_order;
        j["centre_order"] = rep.centre_order;
        j["solvable"] = rep.solvable;
        j["nilpotent"] = rep.nilpotent;
        json ns = json::array();
        for (const auto &n : rep.normal_subgroups) {
          json x;
          x["order"] = n.order;
          json cls = json::array();
          for (int k : n.classes)
            cls.push_back(T.classes[static_cast<size_t>(k)].name);
          x["classes"] = cls;
          ns.push_back(x);
        }
        j["normal_subgroups"] = ns;
        j["determinant"] = det.value.to_string();
        j["determinant_check"] = det.check;
        json kap = json::array();
        for (const auto &x : kappa)
          kap.push_back(x.get_str());
        j["commutator_counts"] = kap;
        os << j.dump(2) << "\n";
      } else {
        print_table_text(T, os);
        os << "\nnormal subgroups:";
        for (const auto &n : rep.normal_subgroups)
          os << "  " << class_set_names(T, n.classes) << " of order "
             << n.order;
        os << "\nderived subgroup "
           << class_set_names(T, rep.derived_subgroup) << " of order "
           << rep.derived_order << "; centre "
           << class_set_names(T, rep.centre) << " of order "
           << rep.centre_order << "\n";
        os << "|lin(G)| = " << rep.linear_count
           << (rep.solvable ? "; solvable" : "; not solvable")
           << (rep.nilpotent ? "; nilpotent" : "; not nilpotent") << "\n";
        os << "det X(G) = " << det.value.to_string() << " (consistency "
           << (det.check ? "ok" : "FAILED") << ", " << det.conjugate_pairs
           << " conjugate row pairs)\n";
        os << "commutator counts:";
        for (size_t k = 0; k < kappa.size(); ++k)
          os << " " << T.classes[k].name << ":" << kappa[k].get_str();
        os << "\n";
      }
      return (rc == kExitOk && det.check) ? kExitOk : kExitVerification;
    }
  } catch (const VerificationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
