#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "goodfilt/chars.hpp"
#include "goodfilt/jantzen.hpp"
#include "goodfilt/json_io.hpp"
#include "goodfilt/rootsys.hpp"
#include "goodfilt/verifier.hpp"
#include "json.hpp"

using goodfilt::Int;
using goodfilt::rootsys::build;
using goodfilt::rootsys::TypeLabel;
using goodfilt::rootsys::Weight;
using nlohmann::json;
namespace chars = goodfilt::chars;
namespace jantzen = goodfilt::jantzen;
namespace json_io = goodfilt::json_io;
namespace verifier = goodfilt::verifier;

TEST_CASE("weight and combo rendering") {
  CHECK(json_io::weight_json(Weight{1, 2}) == "[1,2]");
  CHECK(json_io::weight_json(Weight{-3, 0, 7}) == "[-3,0,7]");

  auto a2 = build(TypeLabel::A, 2);
  chars::WeylCombo combo;
  combo[Weight{1, 1}] = 1;
  combo[Weight{0, 0}] = -1;
  auto parsed = json::parse(json_io::combo_json(combo));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["weight"] == json::array({0, 0}));
  CHECK(parsed[0]["coeff"] == -1);
  CHECK(parsed[1]["weight"] == json::array({1, 1}));
  CHECK(parsed[1]["coeff"] == 1);

  auto m = chars::freudenthal(a2, Weight{1, 1});
  auto mj = json::parse(json_io::multiset_json(m));
  REQUIRE(mj.is_array());
  bool saw_zero = false;
  for (const auto& row : mj)
    if (row["weight"] == json::array({0, 0})) {
      saw_zero = true;
      CHECK(row["mult"] == 2);
    }
  CHECK(saw_zero);
}

TEST_CASE("root system rendering") {
  auto b2 = build(TypeLabel::B, 2);
  auto parsed = json::parse(json_io::rootsys_json(b2));
  CHECK(parsed["type"] == "B");
  CHECK(parsed["rank"] == 2);
  CHECK(parsed["coxeter_number"] == 4);
  CHECK(parsed["alpha0"] == json::array({1, 0}));
  CHECK(parsed["alpha0_coroot"] == json::array({2, 1}));
  CHECK(parsed["rho"] == json::array({1, 1}));
  CHECK(parsed["weyl_order"] == 8);
  CHECK(parsed["weyl_order_exact"] == true);
  CHECK(parsed["positive_roots"] == 4);
}

TEST_CASE("sum formula and factor rendering") {
  auto a2 = build(TypeLabel::A, 2);
  auto out = jantzen::jsf(a2, 3, Weight{1, 1});
  auto parsed = json::parse(json_io::jsf_json(out));
  CHECK(parsed["lambda"] == json::array({1, 1}));
  CHECK(parsed["p"] == 3);
  CHECK(parsed["simple"] == false);
  REQUIRE(parsed["combo"].size() == 1);
  CHECK(parsed["combo"][0]["weight"] == json::array({0, 0}));
  CHECK(parsed["combo"][0]["coeff"] == 1);

  auto fm = jantzen::composition_factors(a2, 3, Weight{1, 1});
  auto fj = json::parse(json_io::factor_map_json(Weight{1, 1}, fm));
  CHECK(fj["lambda"] == json::array({1, 1}));
  CHECK(fj["exact"] == true);
  REQUIRE(fj["factors"].size() == 2);
  CHECK(fj["factors"][0]["weight"] == json::array({0, 0}));
  CHECK(fj["factors"][0]["mult"] == 1);
}

TEST_CASE("criteria panel rendering") {
  auto a2 = build(TypeLabel::A, 2);
  auto text = json_io::criteria_json(a2, 3, 2, Weight{7, 5});
  auto parsed = json::parse(text);
  CHECK(parsed["system"] == "A2");
  CHECK(parsed["p"] == 3);
  CHECK(parsed["r"] == 2);
  CHECK(parsed["guarantee"]["rule"] == "digit_split");
  CHECK(parsed["guarantee"]["digits"] ==
        json::array({"small_pairing", "small_pairing"}));
  CHECK(parsed["mu_window"]["lo"] == 22);
  CHECK(parsed["mu_window"]["hi"] == 28);
  CHECK(parsed["predicates"].contains("nabla_pr_simple"));
  CHECK(parsed["predicates"]["satz9_simple"].is_boolean());

  auto g2 = build(TypeLabel::G, 2);
  auto gp = json::parse(json_io::criteria_json(g2, 3, 1, Weight{1, 0}));
  CHECK(gp["predicates"]["satz9_simple"].is_null());
  CHECK(gp["mu_window"].is_null());
}

TEST_CASE("case report rendering") {
  auto a2 = build(TypeLabel::A, 2);
  auto report = verifier::verify_rank(a2, 3);
  auto parsed = json::parse(json_io::case_report_json(report));
  CHECK(parsed["system"] == "A2");
  CHECK(parsed["p"] == 3);
  REQUIRE(parsed["results"].size() == 9);
  CHECK(parsed["results"][0]["lambda"] == json::array({0, 0}));
  CHECK(parsed["results"][0]["verdict"] == "cleared_by_bound");
  CHECK(parsed["results"][0]["reason"]["rule"] == "small_pairing");
  CHECK(parsed["survivors_after_bounds"] == json::array({json::array({2, 2})}));
  CHECK(parsed["survivors_after_simplicity"] == json::array());
  CHECK(parsed["summary"]["total"] == 9);
  CHECK(parsed["summary"]["undetermined"] == 0);
  CHECK(parsed["summary"]["all_cleared"] == true);
  CHECK(parsed["notes"].is_array());

  auto g2 = build(TypeLabel::G, 2);
  auto gp = json::parse(json_io::case_report_json(verifier::verify_rank(g2, 7)));
  CHECK(gp["summary"]["all_cleared"] == false);
  bool saw_witness = false;
  for (const auto& row : gp["results"])
    if (row["verdict"] == "undetermined") {
      REQUIRE(row.contains("witnesses"));
      REQUIRE_FALSE(row["witnesses"].empty());
      CHECK(row["witnesses"][0]["sigma"] == json::array({2, 0}));
      saw_witness = true;
    }
  CHECK(saw_witness);
}

TEST_CASE("counterexample rendering") {
  auto parsed = json::parse(
      json_io::counterexample_json(verifier::counterexample_check(3)));
  CHECK(parsed["n"] == 3);
  CHECK(parsed["p"] == 3);
  CHECK(parsed["mu"] == json::array({1, 1, 0}));
  CHECK(parsed["lambda"] == json::array({3, 3, 0}));
  CHECK(parsed["pairing"] == 6);
  CHECK(parsed["bound"] == 6);
  CHECK(parsed["pairing_ok"] == true);
  CHECK(parsed["mu_not_simple"] == true);
  CHECK(parsed["confirmed"] == true);
  auto conclusion = parsed["conclusion"].get<std::string>();
  CHECK(conclusion.find("St_1") != std::string::npos);
  CHECK(conclusion.find("L(5,5,2)") != std::string::npos);
}

TEST_CASE("simple character cache round trip") {
  auto a2 = build(TypeLabel::A, 2);
  jantzen::clear_caches();
  auto chl = jantzen::simple_char(a2, 3, Weight{1, 1});
  auto key = jantzen::simple_char_cache_key(a2, 3, Weight{1, 1});
  CHECK(key == "A/2/3/(1,1)");
  REQUIRE(jantzen::simple_char_cache_snapshot().count(key) == 1);

  auto path = (std::filesystem::temp_directory_path() / "goodfilt_cache_rt.json").string();
  json_io::save_simple_char_cache(path);

  jantzen::clear_caches();
  CHECK(jantzen::simple_char_cache_snapshot().empty());
  json_io::load_simple_char_cache(path);
  auto snapshot = jantzen::simple_char_cache_snapshot();
  REQUIRE(snapshot.count(key) == 1);
  CHECK(snapshot.at(key) == chl);

  std::ifstream in(path);
  json on_disk = json::parse(in);
  CHECK(on_disk.contains("simple_characters"));
  CHECK(on_disk["simple_characters"].contains(key));

  std::remove(path.c_str());
  jantzen::clear_caches();
}

TEST_CASE("cache file edge cases") {
  jantzen::clear_caches();
  json_io::load_simple_char_cache("/nonexistent/goodfilt_missing_cache.json");
  CHECK(jantzen::simple_char_cache_snapshot().empty());

  auto path = (std::filesystem::temp_directory_path() / "goodfilt_cache_bad.json").string();
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(json_io::load_simple_char_cache(path), goodfilt::Error);
  std::remove(path.c_str());
}
