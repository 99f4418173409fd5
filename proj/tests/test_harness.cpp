#include <doctest.h>

#include "dpcy/harness.hpp"

using namespace dpcy;

namespace {

Json entry(const char* id, Json expected) {
  return {{"case_id", id}, {"suite", "table1"}, {"operation", "table1"}, {"params", {{"row", 9}}},
          {"expected", expected}};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("shipped registry loads") {
  auto reg = Registry::load(default_registry_path());
  CHECK(reg.cases().size() >= 40);
  CHECK(reg.select("census").size() == 7);
  CHECK(reg.select("").size() == reg.cases().size());
  CHECK(reg.select("nodes").size() == 9);
  for (const auto& c : reg.cases())
    for (const auto& [k, v] : c.expected.items()) CHECK(v.contains("tag"));
}

TEST_CASE("untagged, duplicate and malformed entries are refused") {
  Json ok = entry("a", {{"h3", {{"value", 24}, {"tag", "paper"}}}});
  CHECK_NOTHROW(Registry::from_json(Json::array({ok})));
  CHECK_THROWS_AS(Registry::from_json(Json::array({entry("a", {{"h3", 24}})})), AlgebraError);
  CHECK_THROWS_AS(Registry::from_json(Json::array({entry("a", {{"h3", {{"value", 24}}}})})), AlgebraError);
  CHECK_THROWS_AS(Registry::from_json(Json::array({entry("a", {{"h3", {{"value", 24}, {"tag", "guess"}}}})})),
                  AlgebraError);
  CHECK_THROWS_AS(Registry::from_json(Json::array({ok, ok})), AlgebraError);
  Json bad_op = ok;
  bad_op["operation"] = "flop";
  CHECK_THROWS_AS(Registry::from_json(Json::array({bad_op})), AlgebraError);
  CHECK_THROWS_AS(Registry::from_json(Json::object()), AlgebraError);
}

TEST_CASE("unknown case") {
  auto reg = Registry::load(default_registry_path());
  try {
    reg.find("nosuchcase");
    FAIL("expected an error");
  } catch (const AlgebraError& e) {
    CHECK(std::string(e.what()).find("unknown case") != std::string::npos);
  }
}

TEST_CASE("table row 9 passes") {
  auto reg = Registry::load(default_registry_path());
  auto rep = run_case(reg.find("table1-row9"));
  CHECK(rep["status"] == "pass");
  CHECK(rep["computed"]["h3"] == 24);
  CHECK(rep["computed"]["h0"] == 9);
  CHECK(rep["computed"]["chi"] == -50);
}

TEST_CASE("projected F1 census case passes") {
  auto reg = Registry::load(default_registry_path());
  auto rep = run_case(reg.find("prop2.1-F1"));
  CHECK(rep["status"] == "pass");
  CHECK(rep["computed"]["census"] == Json({{"2", 11}, {"3", 1}}));
}

TEST_CASE("failing comparisons produce a diff") {
  auto reg = Registry::from_json(Json::array({entry("wrong", {{"h3", {{"value", 25}, {"tag", "derived"}}}})}));
  auto rep = run_case(reg.find("wrong"));
  CHECK(rep["status"] == "fail");
  REQUIRE(rep["diff"].size() == 1);
  CHECK(rep["diff"][0]["computed"] == 24);
}

TEST_CASE("reports are byte identical without timing") {
  auto reg = Registry::load(default_registry_path());
  RunOptions opts;
  opts.timing = false;
  for (const char* id : {"census-D6-projected", "nodes-D6-projected-22", "table1-row3"})
    CHECK(run_case(reg.find(id), opts).dump() == run_case(reg.find(id), opts).dump());
}

TEST_CASE("seed sweep") {
  auto reg = Registry::load(default_registry_path());
  auto sweep = sweep_case(reg.find("census-D6-projected"));
  CHECK(sweep["status"] == "stable");
  CHECK(sweep["runs"].size() == 5);
}

TEST_CASE("computation errors become failing reports") {
  auto reg = Registry::from_json(Json::array(
      {{{"case_id", "bad"}, {"suite", "x"}, {"operation", "census"}, {"params", {{"surface", "D9"}}},
        {"expected", {{"census", {{"value", 1}, {"tag", "trivial"}}}}}}}));
  auto rep = run_case(reg.find("bad"));
  CHECK(rep["status"] == "fail");
  CHECK(rep.contains("error"));
}

}
