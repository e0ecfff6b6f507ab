#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "asymptospec/cli.hpp"

using namespace asymptospec;
using cli::RunConfig;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const char* tag) {
  fs::path d = fs::temp_directory_path() / (std::string("asymptospec_test_") + tag);
  fs::create_directories(d);
  return d;
}

int entry(std::vector<std::string> args) {
  std::vector<const char*> argv{"asymptospec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::main_entry(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("config parsing: flat key-value and JSON forms") {
  const auto c1 = cli::parse_config_text(
      "analysis: spectrum\n"
      "net: delta\n"
      "m: 2\n"
      "grid: -0.5,0,0.5   # three points\n"
      "topology: C1\n",
      "inline");
  CHECK(c1.analysis == "spectrum");
  CHECK(c1.m == 2);
  CHECK(c1.topology == "C1");
  CHECK(c1.grid == std::vector<double>{-0.5, 0.0, 0.5});
  CHECK(c1.rungs == 13);  // defaults survive

  const auto c2 = cli::parse_config_text(
      R"({"analysis":"experiment","experiment":"sumlaw","j":1,"j2":0,
          "times":[0.5,1.25],"check":true})",
      "inline");
  CHECK(c2.experiment == "sumlaw");
  CHECK(c2.j == 1);
  CHECK(c2.check);
  CHECK(c2.times == std::vector<double>{0.5, 1.25});
}

TEST_CASE("config parsing: rejection with location info") {
  CHECK_THROWS_WITH_AS(
      cli::parse_config_text("analysis: spectrum\nbogus: 1\n", "f.cfg"),
      doctest::Contains("f.cfg:2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      cli::parse_config_text(R"({"analysis":"spectrum","bogus":1})", "f.json"),
      doctest::Contains("bogus"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(cli::parse_config_text("analysis: spectrum\nm: two\n",
                                              "f.cfg"),
                       doctest::Contains("bad value"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      cli::parse_config_text("analysis: spectrum\nrungs: 3\neps0: 2\n", "f"),
      doctest::Contains("rungs must be >= 6"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_config_text("analysis: nope\n", "f"),
                  std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_config_file("/nonexistent/path.cfg"),
                  std::invalid_argument);
}

TEST_CASE("normalize is canonical and round-trips") {
  RunConfig c;
  c.analysis = "spectrum";
  c.m = 3;
  c.grid = {0.0, 0.25};
  const std::string n1 = cli::normalize(c);
  const auto back = cli::parse_config_text(n1, "normalized");
  CHECK(cli::normalize(back) == n1);
  CHECK(nlohmann::json::parse(n1)["m"] == 3);
}

TEST_CASE("run: spectrum CSV layout and byte determinism") {
  RunConfig c;
  c.analysis = "spectrum";
  c.net = "delta";
  c.m = 1;
  c.topology = "C0";
  c.grid = {0.0};
  const auto out1 = cli::run(c);
  const auto out2 = cli::run(c);
  CHECK(out1.exit_code == 0);
  CHECK(out1.csv == out2.csv);
  CHECK(out1.summary_json == out2.summary_json);
  CHECK(out1.csv.substr(0, 12) == "x,r,status\n0");
  CHECK(out1.csv.find("diverges") != std::string::npos);
  const auto j = nlohmann::json::parse(out1.summary_json);
  CHECK(j["points"][0]["R"].get<double>() == doctest::Approx(1.0).epsilon(0.05));
  CHECK(j["config"]["net"] == "delta");
  CHECK(j["exit_code"] == 0);
}

TEST_CASE("run: expectation grading drives the exit code") {
  RunConfig c;
  c.analysis = "experiment";
  c.experiment = "delta_powers";
  c.m_list = {1};
  c.check = true;
  CHECK(cli::run(c).exit_code == 0);

  // quadrature-limited estimate cannot hit a 1e-3 tolerance
  c.m_list = {2};
  c.tol = 1e-3;
  const auto out = cli::run(c);
  CHECK(out.exit_code == 2);
  CHECK(nlohmann::json::parse(out.summary_json)["pass"] == false);
}

TEST_CASE("run_and_write places both artifacts in the output directory") {
  const auto dir = temp_dir("write");
  RunConfig c;
  c.analysis = "experiment";
  c.experiment = "strength";
  c.net = "heaviside";
  c.out = dir.string();
  const auto out = cli::run_and_write(c);
  CHECK(slurp(out.csv_path) == out.csv);
  CHECK(slurp(out.summary_path) == out.summary_json);
  CHECK(fs::path(out.csv_path).filename() == "strength.csv");
  CHECK(fs::path(out.summary_path).filename() == "strength_summary.json");

  // ASYMPTOSPEC_OUT is the fallback when no directory is configured
  const auto dir2 = temp_dir("envout");
  setenv("ASYMPTOSPEC_OUT", dir2.c_str(), 1);
  c.out.clear();
  const auto out2 = cli::run_and_write(c);
  unsetenv("ASYMPTOSPEC_OUT");
  CHECK(fs::path(out2.csv_path).parent_path() == dir2);
  CHECK(fs::exists(out2.csv_path));
}

TEST_CASE("main_entry: verbs, overrides, failure modes") {
  const auto dir = temp_dir("main");
  CHECK(entry({"spectrum", "--net", "delta:m=1", "--grid", "0", "--out",
               dir.string()}) == 0);
  CHECK(slurp(dir / "spectrum.csv").substr(0, 11) == "x,r,status\n");

  CHECK(entry({"classify", "--net", "smooth", "--out", dir.string()}) == 0);
  CHECK(entry({"experiment", "delta_powers", "--m-list", "1", "--check",
               "--out", dir.string()}) == 0);
  CHECK(entry({"experiment", "delta_powers", "--m-list", "2", "--tol", "0.001",
               "--check", "--out", dir.string()}) == 2);

  // config seeds, flags override
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "net: delta\nm: 2\ntopology: C0\ngrid: 0\n";
  CHECK(entry({"spectrum", "--config", cfg.string(), "--m", "1", "--out",
               dir.string()}) == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "spectrum_summary.json"));
  CHECK(j["config"]["m"] == 1);

  CHECK(entry({"spectrum", "--config", "/nope.cfg"}) == 1);
  CHECK(entry({"spectrum", "--net", "delta", "--ladder", "oops"}) == 1);
  CHECK(entry({"nonsense-verb"}) != 0);
  CHECK(entry({"experiment", "transport", "--nonlinearity", "cubic"}) == 1);
}

TEST_CASE("expectations registry parses and covers the experiment families") {
  const auto reg = nlohmann::json::parse(cli::expectations_registry());
  CHECK(reg.contains("delta_powers"));
  CHECK(reg.contains("example4"));
  CHECK(reg.contains("strength"));
  CHECK(reg.contains("sum_law"));
  CHECK(reg["example4"]["scaled_smooth"]["R"] == 1.0);
}

TEST_CASE("every public operation is reachable from some CLI verb") {
  const auto ops = cli::operation_registry();
  CHECK(ops.size() >= 24);
  const std::vector<std::string> verbs{
      "spectrum", "wavefront", "classify", "experiment", "check-all",
      "--config", "all verbs"};
  for (const auto& [op, verb] : ops) {
    CAPTURE(op);
    CHECK(!verb.empty());
    bool known = false;
    for (const auto& v : verbs) known = known || verb.rfind(v, 0) == 0;
    CHECK(known);
  }
}
