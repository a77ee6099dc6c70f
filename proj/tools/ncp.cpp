// ncp: verify, tabulate and export k-divisible noncrossing partition data.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncp/cache.hpp"
#include "ncp/error.hpp"
#include "ncp/export.hpp"
#include "ncp/verify.hpp"

namespace {

using namespace ncp;

struct TypeArgs {
  std::string type;
  int rank = 0;
  int m = 0;
};

void add_type_options(CLI::App* cmd, TypeArgs& t) {
  cmd->add_option("--type", t.type, "Family letter (A, B, D, I2, H, F) or a full name such as A3 or I2(5)")->required();
  cmd->add_option("--rank", t.rank, "Rank, when --type is a family letter");
  cmd->add_option("--m", t.m, "Dihedral order for I2");
}

CoxeterType resolve_type(const TypeArgs& t) {
  std::string s = t.type;
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "I" || s == "I2") {
    if (t.m <= 0) throw Error(ErrorKind::InvalidArgument, "I2 needs --m");
    return parse_coxeter_type("I2(" + std::to_string(t.m) + ")");
  }
  if (s.size() == 1) {
    if (t.rank <= 0) throw Error(ErrorKind::InvalidArgument, "--type " + t.type + " needs --rank");
    return parse_coxeter_type(s + std::to_string(t.rank));
  }
  const CoxeterType ct = parse_coxeter_type(s);
  if (t.rank > 0 && t.rank != ct.rank) throw Error(ErrorKind::InvalidArgument, "--rank disagrees with --type " + t.type);
  return ct;
}

std::vector<int> parse_perm(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "--gamma-perm expects comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

std::vector<Family> parse_families(const std::string& s) {
  std::vector<Family> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    for (auto& c : item) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (item.empty()) continue;
    if (item == "A") out.push_back(Family::A);
    else if (item == "B" || item == "C") out.push_back(Family::B);
    else if (item == "D") out.push_back(Family::D);
    else if (item == "I" || item == "I2") out.push_back(Family::I2);
    else if (item == "H" || item == "H3") out.push_back(Family::H3);
    else if (item == "F" || item == "F4") out.push_back(Family::F4);
    else throw Error(ErrorKind::UnsupportedType, "unknown family '" + item + "'");
  }
  return out;
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::Io, "cannot open " + out + " for writing");
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write to " + out + " failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with k-divisible noncrossing partitions of finite Coxeter groups"};
  app.require_subcommand(1);

  std::string cache_dir;
  bool no_cache = false;
  std::size_t max_elements = kDefaultElementCap;
  std::string gamma_perm;
  bool timings = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cache-dir", cache_dir, "Cache directory (default: NCP_CACHE_DIR or ~/.cache/ncp)");
    cmd->add_flag("--no-cache", no_cache, "Neither read nor write the cache");
    cmd->add_option("--max-elements", max_elements, "Refuse posets larger than this");
    cmd->add_option("--gamma-perm", gamma_perm, "Order of the simple generators in gamma, e.g. 2,0,1");
  };

  TypeArgs vt;
  int vk = 1;
  std::string vmethod = "both", vformat = "text", vout;
  auto* verify = app.add_subcommand("verify", "Check the Mobius number identity for one (W, k)");
  add_type_options(verify, vt);
  verify->add_option("-k", vk, "Fuss parameter")->check(CLI::PositiveNumber);
  verify->add_option("--method", vmethod, "recursion, shelling or both")
      ->check(CLI::IsMember({"recursion", "shelling", "both"}));
  verify->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vout, "Output file (default stdout)");
  verify->add_flag("--timings", timings, "Include stage timings");
  add_common(verify);

  std::string families = "A,B,D,I2,H3", tmethod = "both", tformat = "text", tout;
  int max_rank = 4, max_k = 3, max_m = 12;
  auto* table = app.add_subcommand("table", "Verify a grid of cases and print a table");
  table->add_option("--families", families, "Comma-separated families (A,B,D,I2,H3,F4); empty for none");
  table->add_option("--max-rank", max_rank, "Largest rank");
  table->add_option("--max-k", max_k, "Largest k");
  table->add_option("--max-m", max_m, "Largest dihedral order");
  table->add_option("--method", tmethod, "recursion, shelling or both")
      ->check(CLI::IsMember({"recursion", "shelling", "both"}));
  table->add_option("--format", tformat, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_option("--out", tout, "Output file (default stdout)");
  add_common(table);

  TypeArgs et;
  int ek = 1;
  std::string eobject, eformat = "json", eout;
  auto* exp = app.add_subcommand("export", "Write a group, NC(W), NC^(k)(W) or a labeling as JSON or DOT");
  exp->add_option("object", eobject, "group, nc, nck or labeling")
      ->required()
      ->check(CLI::IsMember({"group", "nc", "nck", "labeling"}));
  add_type_options(exp, et);
  exp->add_option("-k", ek, "Fuss parameter")->check(CLI::PositiveNumber);
  exp->add_option("--format", eformat, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("--out", eout, "Output file (default stdout)");
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::optional<ResultCache> cache;
    if (!no_cache) cache.emplace(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir), std::cerr);
    ResultCache* cp = cache ? &*cache : nullptr;

    if (verify->parsed()) {
      VerifyOptions o;
      o.method = parse_method(vmethod);
      o.gamma_perm = parse_perm(gamma_perm);
      o.max_elements = max_elements;
      const auto r = verify_cached(resolve_type(vt), vk, o, cp);
      write_output(vformat == "json" ? to_json(r, timings).dump(2) + "\n" : to_text(r, timings), vout);
      return r.passed() ? 0 : 1;
    }
    if (table->parsed()) {
      TableOptions o;
      o.families = parse_families(families);
      o.max_rank = max_rank;
      o.max_k = max_k;
      o.max_dihedral = max_m;
      o.verify.method = parse_method(tmethod);
      o.verify.gamma_perm = parse_perm(gamma_perm);
      o.verify.max_elements = max_elements;
      const auto cells = cmd_table(o, cp);
      write_output(render_table(cells, tformat), tout);
      for (const auto& c : cells)
        if (c.report && !c.report->passed()) return 1;
      return 0;
    }
    ExportOptions o;
    o.k = ek;
    o.gamma_perm = parse_perm(gamma_perm);
    o.max_elements = max_elements;
    write_output(cmd_export(parse_export_object(eobject), resolve_type(et), eformat, o), eout);
    return 0;
  } catch (const Error& e) {
    std::cerr << "ncp: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ncp: " << e.what() << '\n';
    return 2;
  }
}
