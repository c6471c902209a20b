#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "rmgeo/cli.hpp"
#include "rmgeo/exact.hpp"
#include "rmgeo/qforms.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rmgeo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect = 0) {
  args.push_back("--json");
  Result r = run(args);
  CHECK_MESSAGE(r.code == expect, r.err);
  return json::parse(r.out);
}

// No float anywhere; `_numeric` fields are decimal strings.
void check_no_floats(const json& j, const std::string& key = "") {
  if (j.is_object() || j.is_array()) {
    for (const auto& [k, v] : j.items()) check_no_floats(v, j.is_object() ? k : key);
    return;
  }
  CHECK_FALSE(j.is_number_float());
  if (key.size() > 8 && key.ends_with("_numeric")) {
    REQUIRE(j.is_string());
    std::size_t used = 0;
    std::stod(j.get<std::string>(), &used);
    CHECK(used == j.get<std::string>().size());
  }
}

}  // namespace

TEST_CASE("classify output") {
  Result r = run({"classify", "--sx", "sqrt(5)", "--sy", "-sqrt(5)", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"bmt\":\"rm_torus\",\"d\":5,\"mt\":\"rm_torus\",\"dynamical\":\"closed_rm\"}\n");
  json j = run_json({"classify", "--sx", "1/2", "--sy", "generic:e"});
  CHECK(j["bmt"] == "borel");
  CHECK(j["mt"] == "full_gl2");
  j = run_json({"classify", "--matrix", "1,1,sqrt(2),-sqrt(2)", "--field", "sqrt(2)"});
  CHECK(j["bmt"] == "rm_torus");
  CHECK(j["d"] == 2);
  j = run_json({"classify", "--matrix", "1,0,0,1"});
  CHECK(j["mt"] == "split_torus");
  CHECK(j["dynamical"] == "closed_cuspidal");
  CHECK(run({"classify", "--matrix", "1,sqrt(3),0,1", "--field", "sqrt(2)"}).code == 3);
  CHECK(run({"classify", "--matrix", "1,2,3"}).code == 2);
  CHECK(run({"classify", "--sx", "0", "--sy", "0"}).code == 3);
}

TEST_CASE("continued fractions and equivalence") {
  CHECK(run({"cf", "sqrt(2)"}).out == "[1; (2)]\n");
  CHECK(run({"cf", "-7/3"}).out == "[-3; 1, 2]\n");
  json j = run_json({"cf", "(1+sqrt(5))/2"});
  CHECK(j["period"] == json::array({1}));
  Result r = run({"equiv", "sqrt(2)", "sqrt(3)"});
  CHECK(r.code == 1);
  CHECK(r.out == "inequivalent\n");
  r = run({"equiv", "sqrt(2)", "-sqrt(2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");
  CHECK(run({"equiv", "generic:e", "1"}).code == 3);
}

TEST_CASE("class groups, units and geodesics") {
  json j = run_json({"classgroup", "40"});
  CHECK(j["h_plus"] == 2);
  CHECK(j["h_wide"] == 2);
  CHECK(j["unit"]["norm"] == -1);
  j = run_json({"classgroup", "12"});
  CHECK(j["h_plus"] == 2);
  CHECK(j["h_wide"] == 1);
  CHECK(j["cycles"].size() == 2);
  CHECK(run({"classgroup", "16"}).code == 3);
  CHECK(run({"classgroup", "x"}).code == 2);

  j = run_json({"units", "61"});
  CHECK(rmgeo::parse_number(j["epsilon"].get<std::string>()) == rmgeo::parse_number("(39+5*sqrt(61))/2"));

  // Slopes re-parse to roots of the first form of their cycle.
  j = run_json({"geodesics", "60"});
  CHECK(j.size() == rmgeo::class_group(60).order());
  for (const auto& g : j) {
    const auto& f = g["cycle"][0];
    const rmgeo::Number a = f[0].get<long>(), b = f[1].get<long>(), c = f[2].get<long>();
    for (const auto& s : g["slopes"]) {
      const rmgeo::Number x = rmgeo::parse_number(s.get<std::string>());
      CHECK(a * x * x + b * x + c == rmgeo::Number(0));
    }
  }
}

TEST_CASE("census") {
  CHECK(run_json({"census", "--dmax", "4"}) == json::array());
  json j = run_json({"census", "--dmax", "5"});
  REQUIRE(j.size() == 1);
  CHECK(j[0]["D"] == 5);
  CHECK(j[0]["h_plus"] == 1);
  j = run_json({"census", "--dmax", "41"});
  bool found = false;
  long last = 0;
  for (const auto& row : j) {
    CHECK(row["D"].get<long>() > last);
    last = row["D"].get<long>();
    if (row["D"] == 40) {
      found = true;
      CHECK(row["h_plus"] == 2);
    }
  }
  CHECK(found);
}

TEST_CASE("nct subcommands") {
  json j = run_json({"nct", "equiv", "sqrt(2)", "sqrt(2)/2"});
  CHECK(j["morita_equivalent"] == true);
  CHECK(j["lilac_iso"] == true);
  CHECK(run({"nct", "equiv", "sqrt(2)", "1/3"}).code == 1);
  j = run_json({"nct", "member", "3+2*sqrt(2)", "--theta", "sqrt(2)"});
  CHECK(j["m"] == 3);
  CHECK(j["n"] == 2);
  CHECK(run({"nct", "member", "1/2", "--theta", "sqrt(2)"}).code == 1);
  CHECK(run({"nct", "member", "sqrt(3)", "--theta", "sqrt(2)"}).code == 3);
  j = run_json({"nct", "levels", "3"});
  CHECK(j["count"] == 48);
  CHECK(j["count_by_enumeration"] == 48);
  CHECK(run({"nct", "levels", "1"}).code == 3);
  CHECK(run({"nct"}).code == 2);
}

TEST_CASE("hilbert and siegel") {
  json j = run_json({"hilbert", "--E", "x^2 - 2", "--F", "x^4 - 10*x^2 + 1"});
  CHECK(j["sqrt_d_E"] == "(a^3 - 9*a)/2");
  REQUIRE(j["rm_types"].size() == 4);
  for (const auto& t : j["rm_types"]) CHECK(t["valid"] == true);
  CHECK(run({"hilbert", "--E", "x^2 - 2", "--F", "x^4 - 2"}).code == 3);
  j = run_json({"siegel", "--K", "x^4 - 2", "--psi-bound", "1"});
  CHECK(j["dims"] == json::array({1, 1, 2}));
  CHECK(j["psi_search"]["found"] == true);
  CHECK(j["psi_search"]["verdict"] == "accepted");
  CHECK(run({"siegel", "--K", "x^4 + 1"}).code == 3);
  CHECK(run({"siegel", "--K", "x^4 - 4"}).code == 3);  // reducible
}

TEST_CASE("usage errors, determinism and the exact-value contract") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify", "--sx", "sqrt(5", "--sy", "1"}).code == 2);
  CHECK(run({"cf", "--help"}).code == 0);

  const std::vector<std::vector<std::string>> cmds = {
      {"classify", "--sx", "sqrt(3)", "--sy", "-sqrt(3)"},
      {"cf", "sqrt(19)"},
      {"equiv", "sqrt(2)", "1+sqrt(2)"},
      {"classgroup", "136"},
      {"units", "92"},
      {"geodesics", "120"},
      {"census", "--dmax", "60"},
      {"nct", "equiv", "sqrt(3)", "2+sqrt(3)"},
      {"nct", "member", "1/3", "--theta", "1/3"},
      {"nct", "levels", "6"},
      {"hilbert", "--E", "x", "--F", "x^2 - 3"},
      {"siegel", "--K", "x^4 - 2", "--psi-bound", "1"},
  };
  for (auto args : cmds) {
    const Result a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    args.push_back("--json");
    const Result c = run(args), d = run(args);
    CHECK(c.out == d.out);
    check_no_floats(json::parse(c.out));
  }
}

TEST_CASE("environment variables") {
  setenv("RMGEO_PRECISION", "5", 1);
  json j = run_json({"units", "5"});
  CHECK(j["regulator_numeric"] == "0.48121");
  setenv("RMGEO_PRECISION", "many", 1);
  CHECK(run({"units", "5"}).code == 2);
  unsetenv("RMGEO_PRECISION");
  setenv("RMGEO_STEP_BUDGET", "10", 1);
  CHECK(run({"classgroup", "1001"}).code == 3);
  unsetenv("RMGEO_STEP_BUDGET");
  rmgeo::set_step_budget(50'000'000);
  CHECK(run({"classgroup", "1001"}).code == 0);
}
