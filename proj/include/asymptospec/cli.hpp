#pragma once

#include <string>
#include <utility>
#include <vector>

namespace asymptospec {
namespace cli {

// Flat, declarative run description. Everything has a documented default so a
// minimal config is just an analysis plus a net.
struct RunConfig {
  std::string analysis;       // spectrum | wavefront | classify | experiment | check-all
  std::string experiment;     // delta_powers | transport | blowup | sumlaw | strength

  double eps0 = 0.0625;       // ladder: eps_i = eps0 * q^i
  double q = 0.5;
  int rungs = 13;
  std::string scale = "power";  // power | gevrey
  double sigma = 1.0;           // gevrey parameter

  std::string net = "delta";  // delta | delta_deriv | heaviside | abs | smooth
                              // | scaled_smooth | scaled_smooth_log
  int m = 1;                  // delta power
  int k = 0;                  // delta-derivative order
  double x0 = 0.0;            // feature location
  double r = 1.0;             // scaled_smooth exponent

  std::string topology = "C0";  // C0 | C1 | C<p> | Dprime
  std::vector<double> grid;     // analysis base points (default set per verb)

  std::string nonlinearity = "dissipative";  // dissipative | sqrt_exp | log
  double s = 0.5;
  double T = 2.0;
  std::vector<double> times{0.25, 0.5, 1.0};
  int j = 0, j2 = 0;             // sum-law derivative orders
  std::vector<int> m_list{1, 2, 3};

  double tol = 0.15;
  unsigned seed = 1;
  int jobs = 1;
  std::string out;            // output directory; ASYMPTOSPEC_OUT or "." if empty
  bool check = false;         // grade against the expectations registry
};

// Accepts JSON (content starting with '{') or flat "key: value" lines;
// unknown keys and invalid values are rejected with location info.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& where);

// Canonical JSON serialization (stable key order) of a config.
std::string normalize(const RunConfig& c);

struct RunOutcome {
  int exit_code = 0;          // 0 ok, 2 expectation failures, 1 error
  std::string csv;            // primary table
  std::string summary_json;   // result record
  std::string csv_path, summary_path;  // set once written
};

// Execute the analysis; does not touch the filesystem.
RunOutcome run(const RunConfig& c);

// Execute and persist <analysis>.csv / <analysis>_summary.json in the output
// directory; returns the outcome with paths filled in.
RunOutcome run_and_write(const RunConfig& c);

// The bundled expectations registry (paper target values), as JSON text.
const std::string& expectations_registry();

// Library operation -> CLI verb coverage map, for the reachability check.
std::vector<std::pair<std::string, std::string>> operation_registry();

int main_entry(int argc, const char* const* argv);

}  // namespace cli
}  // namespace asymptospec
