#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "asymptospec/cli.hpp"

namespace asymptospec {
namespace cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) parts.push_back(tok);
  return parts;
}

void apply_ladder(RunConfig& c, const std::string& spec) {
  const auto p = split(spec, ',');
  if (p.size() != 3)
    throw std::invalid_argument("--ladder expects eps0,q,rungs, got " + spec);
  c.eps0 = std::stod(p[0]);
  c.q = std::stod(p[1]);
  c.rungs = std::stoi(p[2]);
}

void apply_scale(RunConfig& c, const std::string& spec) {
  if (spec == "power") {
    c.scale = "power";
    return;
  }
  if (spec.rfind("gevrey", 0) == 0) {
    c.scale = "gevrey";
    const std::size_t colon = spec.find(':');
    if (colon != std::string::npos) c.sigma = std::stod(spec.substr(colon + 1));
    return;
  }
  throw std::invalid_argument("--scale expects power or gevrey:<sigma>");
}

// "delta", "delta:m=2", "delta_deriv:k=1,x0=0.5", "scaled_smooth:r=1.5"
void apply_net(RunConfig& c, const std::string& spec) {
  const std::size_t colon = spec.find(':');
  c.net = spec.substr(0, colon);
  if (colon == std::string::npos) return;
  for (const auto& kv : split(spec.substr(colon + 1), ',')) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--net: expected key=value, got " + kv);
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "m") c.m = std::stoi(val);
    else if (key == "k") c.k = std::stoi(val);
    else if (key == "x0") c.x0 = std::stod(val);
    else if (key == "r") c.r = std::stod(val);
    else throw std::invalid_argument("--net: unknown parameter '" + key + "'");
  }
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> v;
  for (const auto& p : split(s, ',')) v.push_back(std::stod(p));
  return v;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  for (const auto& p : split(s, ',')) v.push_back(std::stoi(p));
  return v;
}

}  // namespace

int main_entry(int argc, const char* const* argv) {
  RunConfig c;
  // The config file (if any) seeds the defaults; explicit flags then override.
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string a = argv[i];
      if (a == "--config") {
        if (i + 1 >= argc)
          throw std::invalid_argument("--config requires a path");
        c = parse_config_file(argv[i + 1]);
      } else if (a.rfind("--config=", 0) == 0) {
        c = parse_config_file(a.substr(9));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Asymptotic regularity analysis of eps-parametrized nets"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, ladder_spec, scale_spec, net_spec;
  std::string grid_spec, times_spec, mlist_spec;
  app.add_option("--config", config_path,
                 "config file, JSON or 'key: value' lines");
  app.add_option("--out", c.out, "output directory (default ASYMPTOSPEC_OUT)");
  app.add_option("--ladder", ladder_spec, "eps ladder as eps0,q,rungs");
  app.add_option("--scale", scale_spec, "asymptotic scale: power|gevrey:sigma");
  app.add_option("--seed", c.seed, "rng seed");
  app.add_option("--jobs", c.jobs, "worker count");
  app.add_option("--tol", c.tol, "grading tolerance");
  app.add_flag("--check", c.check, "grade against the expectations registry");

  auto add_net_opts = [&](CLI::App* sub) {
    sub->add_option("--net", net_spec,
                    "net spec, e.g. delta:m=2 or delta_deriv:k=1,x0=0.5");
    sub->add_option("--m", c.m, "delta power");
    sub->add_option("--k", c.k, "delta-derivative order");
    sub->add_option("--x0", c.x0, "feature location");
    sub->add_option("--r", c.r, "scaled-smooth exponent");
  };

  CLI::App* sp = app.add_subcommand("spectrum", "parametric singular spectrum");
  add_net_opts(sp);
  sp->add_option("--topology", c.topology, "target topology: C<p>|Dprime");
  sp->add_option("--grid", grid_spec, "base points, comma separated");

  CLI::App* wf = app.add_subcommand("wavefront", "frequential wave front set");
  add_net_opts(wf);
  wf->add_option("--grid", grid_spec, "base points, comma separated");

  CLI::App* cl = app.add_subcommand("classify", "moderateness/regularity class");
  add_net_opts(cl);

  CLI::App* ex = app.add_subcommand("experiment", "named experiment");
  std::string experiment_name;
  ex->add_option("name", experiment_name,
                 "delta_powers|transport|blowup|sumlaw|strength")
      ->required();
  add_net_opts(ex);
  ex->add_option("--topology", c.topology, "target topology: C<p>|Dprime");
  ex->add_option("--grid", grid_spec, "base points, comma separated");
  ex->add_option("--nonlinearity", c.nonlinearity, "dissipative|sqrt_exp|log");
  ex->add_option("--s", c.s, "blow-up cutoff exponent");
  ex->add_option("--T", c.T, "time horizon");
  ex->add_option("--times", times_spec, "slice times, comma separated");
  ex->add_option("--j", c.j, "first sum-law derivative order");
  ex->add_option("--j2", c.j2, "second sum-law derivative order");
  ex->add_option("--m-list", mlist_spec, "delta powers, comma separated");

  CLI::App* ca =
      app.add_subcommand("check-all", "run the bundled expectation suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (!ladder_spec.empty()) apply_ladder(c, ladder_spec);
    if (!scale_spec.empty()) apply_scale(c, scale_spec);
    if (!net_spec.empty()) apply_net(c, net_spec);
    if (!grid_spec.empty()) c.grid = parse_doubles(grid_spec);
    if (!times_spec.empty()) c.times = parse_doubles(times_spec);
    if (!mlist_spec.empty()) c.m_list = parse_ints(mlist_spec);

    if (sp->parsed()) c.analysis = "spectrum";
    else if (wf->parsed()) c.analysis = "wavefront";
    else if (cl->parsed()) c.analysis = "classify";
    else if (ca->parsed()) c.analysis = "check-all";
    else {
      c.analysis = "experiment";
      c.experiment = experiment_name;
    }

    const RunOutcome out = run_and_write(c);
    std::cout << out.csv;
    std::cerr << "wrote " << out.csv_path << " and " << out.summary_path
              << "\n";
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cli
}  // namespace asymptospec
