#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fibkit/cli.hpp"
#include "fibkit/serialize.hpp"

using namespace fibkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const Run r = run(std::move(args));
  REQUIRE(r.code == kOk);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("nim classify ell 2 gives two representations") {
  const Json j = run_json({"nim", "classify", "--ell", "2", "--format", "json"});
  CHECK(j["count"] == 2);
  CHECK(j["reps"][0]["rank"] == 2);
  CHECK(j["reps"][1]["rank"] == 4);
  for (const auto& r : j["reps"]) {
    const NimRep rep = nim_rep_from_json(r["rep"]);
    CHECK(to_json(rep).dump() == r["rep"].dump());
    CHECK(verify(rep).empty());
    CHECK(to_json(set_partition_from_json(r["partition"])).dump() == r["partition"].dump());
  }
}

TEST_CASE("aniso scan 1,9 singles out 1 + x1x2") {
  const Json j = run_json({"aniso", "scan", "--params", "1,9"});
  REQUIRE(j["ribbon_candidates"].size() == 2);
  CHECK(j["ribbon_candidates"][0] == "1 + x1x2");
  CHECK(to_json(scan_report_from_json(j)).dump() == j.dump());
}

TEST_CASE("pentagon gives two solutions with alpha = 1") {
  const Json j = run_json({"pentagon"});
  REQUIRE(j["count"] == 2);
  for (const auto& s : j["solutions"]) {
    const FibAssociator a = associator_from_json(s);
    CHECK(a.alpha.is_one());
    CHECK(s["pentagon_failures"].empty());
    Json back = to_json(a);
    for (const auto& [key, value] : back.items()) CHECK(s[key].dump() == value.dump());
  }
}

TEST_CASE("fibcat alias") {
  CHECK(run({"fibcat", "pentagon"}).out == run({"pentagon"}).out);
}

TEST_CASE("braidings gives four pairs") {
  const Json j = run_json({"braidings"});
  REQUIRE(j["count"] == 4);
  std::vector<int> ms;
  for (const auto& p : j["pairs"]) {
    const FibBraiding b = braiding_from_json(p);
    ms.push_back(b.exponent());
    CHECK(p["hexagon_failures"].empty());
  }
  CHECK(ms == std::vector<int>{1, 9, 3, 7});
}

TEST_CASE("modular-data round trip") {
  for (const char* m : {"1", "3", "7", "9"}) {
    const Json j = run_json({"modular-data", "--m", m});
    CHECK(to_json(modular_data_from_json(j)).dump() == j.dump());
    for (const char* key : {"a", "u", "rho", "dimX", "DimC", "S", "T", "xi_squared"}) CHECK(j.contains(key));
  }
  CHECK(run({"modular-data", "--m", "5"}).code == kUsageError);
  CHECK(run({"modular-data"}).code == kUsageError);
}

TEST_CASE("sl2-check selects u^-2") {
  const Json j = run_json({"sl2-check"});
  CHECK(j["consistent"] == true);
  CHECK(j["selected"] == "u^-2");
  CHECK(j["results"].size() == 4);
  // modular-data still emits the rejected convention on request
  const Json forced = Json::parse(run({"modular-data", "--m", "1", "--convention", "u^2"}).out);
  CHECK(forced["convention"] == "u^2");
}

TEST_CASE("nim brute agrees with classify") {
  for (const char* ell : {"1", "2", "3"}) {
    const Json brute = run_json({"nim", "brute", "--ell", ell});
    const Json classified = run_json({"nim", "classify", "--ell", ell});
    REQUIRE(brute["count"] == classified["count"]);
    std::vector<std::string> a, b;
    for (const auto& r : brute["reps"]) {
      REQUIRE(!r["partition"].is_null());
      a.push_back(r["partition"]["text"]);
    }
    for (const auto& r : classified["reps"]) b.push_back(r["partition"]["text"]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("jobs do not change output") {
  CHECK(run({"--jobs", "1", "nim", "brute", "--ell", "3"}).out == run({"--jobs", "4", "nim", "brute", "--ell", "3"}).out);
  CHECK(run({"--jobs", "1", "aniso", "scan", "--params", "1,1,9"}).out ==
        run({"--jobs", "3", "aniso", "scan", "--params", "1,1,9"}).out);
}

TEST_CASE("repeated runs are byte identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"pentagon"}, {"braidings"}, {"voa", "catalog"}, {"nim", "dot", "--ell", "2"}, {"voa", "m35-factor"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("nim dot") {
  const Run all = run({"nim", "dot", "--ell", "2"});
  CHECK(all.code == kOk);
  CHECK(all.out.find("graph") != std::string::npos);
  CHECK(all.out.find("style=dashed") != std::string::npos);
  const Run one = run({"nim", "dot", "--ell", "3", "--partition", "1,2|3"});
  CHECK(one.code == kOk);
  CHECK(one.out.find("// {{1,2},{3}}") != std::string::npos);
  const Json j = run_json({"nim", "dot", "--ell", "3", "--partition", "1,2|3", "--format", "json"});
  CHECK(j["reps"][0]["rank"] == 4);
  CHECK(run({"nim", "dot", "--ell", "3", "--partition", "1|1"}).code == kUsageError);
  CHECK(run({"pentagon", "--format", "dot"}).code == kUsageError);
}

TEST_CASE("voa minimal") {
  const Json j = run_json({"voa", "minimal", "--p", "3", "--q", "5"});
  const VoaModel m = voa_model_from_json(j);
  CHECK(to_json(m).dump() == j.dump());
  CHECK(m.c == ratio(-3, 5));
  const Json only_c = run_json({"voa", "minimal", "--p", "2", "--q", "5", "--c"});
  CHECK(only_c["c"] == "-22/5");
  CHECK(!only_c.contains("fusion"));
  const Json w = run_json({"voa", "minimal", "--p", "2", "--q", "5", "--weights"});
  CHECK(w["weights"] == Json::array({"0", "-1/5"}));
  CHECK(run({"voa", "minimal", "--p", "2", "--q", "4"}).code == kUsageError);
}

TEST_CASE("voa a1 extension") {
  const Json j = run_json({"voa", "a1", "--k", "8", "--extend", "0,8"});
  CHECK(j["orbits"].size() == 5);
  CHECK(j["local_spectrum"] == Json::array({"0", "1/5", "3/5", "3/5"}));
  CHECK(to_json(extension_report_from_json(j), affine_a1(8)).dump() == j.dump());
  const Json model = run_json({"voa", "a1", "--k", "3"});
  CHECK(to_json(voa_model_from_json(model)).dump() == model.dump());
  CHECK(run({"voa", "a1", "--k", "8", "--extend", "0,9"}).code == kUsageError);
}

TEST_CASE("voa extend on a product") {
  const Json j = run_json({"voa", "extend", "--model", "a1_3*a1_1", "--currents", "0:0,3:1"});
  CHECK(j["currents_integral"] == true);
  int local = 0;
  for (const auto& o : j["orbits"]) local += o["local"].get<bool>();
  CHECK(local == 2);
}

TEST_CASE("voa fib-type") {
  CHECK(run_json({"voa", "fib-type", "--model", "m25"})["exponents"] == Json::array({1}));
  CHECK(run_json({"voa", "fib-type", "--model", "g21"})["exponents"] == Json::array({3}));
  CHECK(run_json({"voa", "fib-type", "--model", "f41"})["exponents"] == Json::array({7}));
  CHECK(run_json({"voa", "fib-type", "--model", "a18ext"})["exponents"] == Json::array({7}));
  CHECK(run_json({"voa", "fib-type", "--model", "a18ext"})["ell"] == 2);
  CHECK(run_json({"voa", "fib-type", "--model", "g21ext"})["exponents"] == Json::array({3}));
  const Run bad = run({"voa", "fib-type", "--model", "m35"});
  CHECK(bad.code == kVerificationFailure);
  CHECK(Json::parse(bad.out)["status"] == "fail");
  CHECK(run({"voa", "fib-type", "--model", "nosuch"}).code == kUsageError);
}

TEST_CASE("voa m35-factor and catalog") {
  const Json j = run_json({"voa", "m35-factor"});
  CHECK(j["fib_exponents"] == Json::array({9}));
  const Json c = run_json({"voa", "catalog"});
  for (const auto& check : c["checks"]) CHECK(check["holds"] == true);
}

TEST_CASE("text output") {
  const Run r = run({"--format", "text", "voa", "minimal", "--p", "2", "--q", "5", "--c"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("c = -22/5") != std::string::npos);
  CHECK(run({"--format", "text", "aniso", "scan", "--params", "1,9"}).out.find("1 + x1x2 -> ribbon") !=
        std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kUsageError);
  CHECK(run({"frobnicate"}).code == kUsageError);
  CHECK(run({"pentagon", "--bogus"}).code == kUsageError);
  CHECK(run({"--format", "xml", "pentagon"}).code == kUsageError);
  CHECK(run({"nim"}).code == kUsageError);
  CHECK(run({"nim", "brute", "--ell", "4"}).code == kUsageError);
  CHECK(run({"aniso", "scan", "--params", "1,2"}).code == kUsageError);
  const Run bad = run({"pentagon", "--bogus"});
  CHECK(bad.err.find("Usage") != std::string::npos);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("out file") {
  const std::string path = "test_cli_out.json";
  const Run r = run({"--out", path, "pentagon"});
  CHECK(r.code == kOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run({"pentagon"}).out);
  std::remove(path.c_str());
}
