#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ncp/cache.hpp"
#include "ncp/error.hpp"
#include "ncp/export.hpp"
#include "ncp/verify.hpp"

using namespace ncp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("ncp-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + needle.size())) ++n;
  return n;
}

}  // namespace

TEST_CASE("verify small cases") {
  auto a1 = cmd_verify(CoxeterType::A(2), 1);
  CHECK(a1.rhs_formula == 2);
  CHECK(a1.lhs_mobius_upper == 2);
  CHECK(a1.lhs_mobius_lower == 2);
  REQUIRE(a1.lhs_falling_chain.has_value());
  CHECK(*a1.lhs_falling_chain == 2);
  CHECK(a1.passed());

  auto a2 = cmd_verify(CoxeterType::A(2), 2);
  CHECK(a2.rhs_formula == 5);
  CHECK(a2.upper_size == 12);
  CHECK(a2.passed());

  auto b2 = cmd_verify(CoxeterType::B(2), 2);
  CHECK(b2.rhs_formula == 7);
  CHECK(b2.upper_size == 15);
  CHECK(b2.passed());
  CHECK(b2.sign_n_minus_1);
  CHECK_FALSE(b2.sign_n);
}

TEST_CASE("methods") {
  auto r = cmd_verify(CoxeterType::I2(5), 2, {Method::Recursion, {}, kDefaultElementCap});
  CHECK_FALSE(r.lhs_falling_chain.has_value());
  CHECK_FALSE(r.el_base.has_value());
  CHECK(r.passed());
  auto s = cmd_verify(CoxeterType::I2(5), 2, {Method::Shelling, {}, kDefaultElementCap});
  CHECK(s.lhs_falling_chain.has_value());
  CHECK(s.passed());
  CHECK(parse_method("both") == Method::Both);
  CHECK_THROWS_AS(parse_method("magic"), Error);
}

TEST_CASE("gamma permutation does not change the numbers") {
  auto base = cmd_verify(CoxeterType::A(3), 2);
  auto perm = cmd_verify(CoxeterType::A(3), 2, {Method::Both, {2, 0, 1}, kDefaultElementCap});
  CHECK(perm.lhs_mobius_upper == base.lhs_mobius_upper);
  CHECK(perm.passed());
}

TEST_CASE("unsupported inputs") {
  CHECK_THROWS_AS(cmd_verify(CoxeterType::D(3), 1), Error);
  CHECK_THROWS_AS(cmd_verify(CoxeterType::A(2), 0), Error);
  try {
    cmd_verify(CoxeterType::A(4), 3, {Method::Both, {}, 100});
    FAIL("expected ScaleExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ScaleExceeded);
  }
}

TEST_CASE("passed requires equality and EL") {
  auto r = cmd_verify(CoxeterType::A(2), 1);
  REQUIRE(r.passed());
  auto bad = r;
  bad.all_equal = false;
  CHECK_FALSE(bad.passed());
  bad = r;
  bad.el_lex_abw = false;
  CHECK_FALSE(bad.passed());
  bad = r;
  bad.el_base = std::nullopt;
  bad.el_lex_abw = std::nullopt;
  CHECK(bad.passed());
}

TEST_CASE("JSON round trip") {
  auto r = cmd_verify(CoxeterType::H3(), 2);
  auto back = report_from_json(to_json(r));
  CHECK(to_json(back) == to_json(r));
  CHECK_FALSE(to_json(r).contains("timings"));
  CHECK(to_json(r, true).contains("timings"));
  auto text = to_text(r);
  CHECK(text.substr(text.size() - 5) == "PASS\n");
}

TEST_CASE("table") {
  TableOptions o;
  o.families = {Family::A};
  o.max_rank = 2;
  o.max_k = 2;
  auto cells = cmd_table(o);
  CHECK(cells.size() == 4);
  for (const auto& c : cells) {
    REQUIRE(c.report.has_value());
    CHECK(c.report->passed());
  }
  auto csv = render_table(cells, "csv");
  CHECK(csv.rfind("family,rank,k,lhs,rhs,pass,m,lhs_lower,lhs_falling,el,elements\n", 0) == 0);
  CHECK(count_of(csv, "\n") == 5);
  CHECK(nlohmann::json::parse(render_table(cells, "json")).size() == 4);

  o.families = {};
  CHECK(cmd_table(o).empty());
  CHECK(count_of(render_table({}, "csv"), "\n") == 1);
  CHECK_THROWS_AS(render_table(cells, "xml"), Error);

  o.families = {Family::A};
  o.max_rank = 4;
  o.max_k = 3;
  o.verify.max_elements = 500;
  auto capped = cmd_table(o);
  bool skipped = false;
  for (const auto& c : capped) skipped = skipped || !c.report;
  CHECK(skipped);
}

TEST_CASE("export") {
  auto dot = cmd_export(ExportObject::Nc, CoxeterType::A(2), "dot");
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count_of(dot, "->") == 6);
  CHECK(count_of(dot, "label=") >= 5 + 6);

  auto g = nlohmann::json::parse(cmd_export(ExportObject::Group, CoxeterType::A(1), "json"));
  CHECK(g["elements"].size() == 2);
  CHECK(g["reflections"].size() == 1);
  CHECK(cmd_export(ExportObject::Group, CoxeterType::A(2), "dot").rfind("graph cayley", 0) == 0);

  ExportOptions eo;
  eo.k = 2;
  auto lab = nlohmann::json::parse(cmd_export(ExportObject::Labeling, CoxeterType::A(2), "json", eo));
  CHECK(lab["labels"].size() == 7);
  auto nck = nlohmann::json::parse(cmd_export(ExportObject::Nck, CoxeterType::A(2), "json", eo));
  CHECK(nck["delta_sequences"].size() == 12);

  CHECK_THROWS_AS(cmd_export(ExportObject::Nc, CoxeterType::A(2), "svg"), Error);
  CHECK_THROWS_AS(parse_export_object("matrix"), Error);
}

TEST_CASE("cache") {
  TempDir tmp;
  std::ostringstream warn;
  ResultCache cache(tmp.path, warn);
  const VerifyOptions o;

  auto first = verify_cached(CoxeterType::B(2), 2, o, &cache);
  CHECK_FALSE(first.from_cache);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(tmp.path)) files.push_back(e.path());
  REQUIRE(files.size() == 1);
  const std::string name = files[0].filename().string();
  CHECK(name.find(std::string("_v") + kCodeVersion) != std::string::npos);
  CHECK(name.find("both") != std::string::npos);

  auto hit = verify_cached(CoxeterType::B(2), 2, o, &cache);
  CHECK(hit.from_cache);
  CHECK(to_json(hit) == to_json(cmd_verify(CoxeterType::B(2), 2, o)));
  CHECK(warn.str().empty());

  SUBCASE("corrupt entry is discarded and recomputed") {
    {
      std::ofstream f(files[0], std::ios::trunc);
      f << "{\"key\": \"garbage";
    }
    auto again = verify_cached(CoxeterType::B(2), 2, o, &cache);
    CHECK_FALSE(again.from_cache);
    CHECK(again.passed());
    CHECK(warn.str().find("corrupt") != std::string::npos);
    CHECK(verify_cached(CoxeterType::B(2), 2, o, &cache).from_cache);
  }

  SUBCASE("tampered payload fails the checksum") {
    auto entry = nlohmann::json::parse(std::ifstream(files[0]));
    entry["payload"]["report"]["rhs_formula"] = 8;
    std::ofstream(files[0], std::ios::trunc) << entry.dump();
    auto again = verify_cached(CoxeterType::B(2), 2, o, &cache);
    CHECK_FALSE(again.from_cache);
    CHECK(again.rhs_formula == 7);
    CHECK(warn.str().find("checksum") != std::string::npos);
  }

  SUBCASE("method is part of the key") {
    auto rec = verify_cached(CoxeterType::B(2), 2, {Method::Recursion, {}, kDefaultElementCap}, &cache);
    CHECK_FALSE(rec.from_cache);
  }

  SUBCASE("no cache") {
    CHECK_FALSE(verify_cached(CoxeterType::B(2), 2, o, nullptr).from_cache);
  }
}

TEST_CASE("unwritable cache directory") {
  TempDir tmp;
  const fs::path blocker = tmp.path / "file";
  std::ofstream(blocker) << "x";
  std::ostringstream warn;
  ResultCache cache(blocker / "sub", warn);
  auto r = verify_cached(CoxeterType::A(2), 1, {}, &cache);
  CHECK(r.passed());
  CHECK(warn.str().find("not writable") != std::string::npos);
}

TEST_CASE("checksum") {
  CHECK(payload_checksum(nlohmann::json::object()).size() == 8);
  CHECK(payload_checksum({{"a", 1}}) != payload_checksum({{"a", 2}}));
}
