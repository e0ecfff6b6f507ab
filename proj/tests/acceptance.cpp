// End-to-end acceptance run: reproduces the headline numbers of every worked
// example on the default ladder and prints one PASS/FAIL line per criterion.
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "asymptospec/classify.hpp"
#include "asymptospec/cli.hpp"
#include "asymptospec/corpus.hpp"
#include "asymptospec/experiments.hpp"
#include "asymptospec/frequential.hpp"
#include "asymptospec/net.hpp"
#include "asymptospec/spectrum.hpp"

using namespace asymptospec;
using experiments::Nonlinearity;
using local_spectrum::FiberEndpoint;
using local_spectrum::FiberKind;
using local_spectrum::LocalAnalyzer;
using local_spectrum::TargetTopology;

namespace {

const EpsLadder kLadder = EpsLadder::standard();
const nets::AsymptoticScale kPower = nets::AsymptoticScale::power();

struct Criterion {
  std::string label;
  std::function<bool(std::string&)> body;
};

local_spectrum::CriticalResult critical(const nets::GeneralizedNet& u,
                                        const TargetTopology& top, double x,
                                        double r_max = 16.0) {
  local_spectrum::AnalyzerOptions opt;
  opt.r_max = r_max;
  LocalAnalyzer a(u, kPower, kLadder, top, opt);
  return a.critical(x);
}

bool close(double got, double want, double tol, std::string& note) {
  if (std::abs(got - want) <= tol) return true;
  note += " [got " + std::to_string(got) + ", want " + std::to_string(want) +
          " +/- " + std::to_string(tol) + "]";
  return false;
}

double radius_key(const local_spectrum::CriticalResult& c) {
  switch (c.kind) {
    case FiberKind::Empty: return -1.0;
    case FiberKind::Finite: return c.R;
    case FiberKind::Infinite: return 1e9;
    default: return -1.0;
  }
}

// --- criteria ----------------------------------------------------------------

bool c1_delta_powers(std::string& note) {
  const auto rows = experiments::run_delta_powers(
      {1, 2, 3},
      {TargetTopology::C(0), TargetTopology::C(1), TargetTopology::Dprime()},
      kLadder, 0.15);
  bool ok = true;
  for (const auto& r : rows) {
    if (!r.pass) {
      ok = false;
      note += " [m=" + std::to_string(r.m) + " " + r.topology + ": R=" +
              std::to_string(r.R_estimated) + " endpoint=" +
              r.endpoint_estimated + "]";
    }
  }
  return ok;
}

bool c2_example4(std::string& note) {
  auto jet_rule = [](double x, int order) {
    return (Jet::variable(x, order)).cos() + 2.0;
  };
  const auto plain = nets::make_scaled_smooth(
      [](double eps) { return 1.0 / eps; }, jet_rule);
  const auto logged = nets::make_scaled_smooth(
      [](double eps) { return std::abs(std::log(eps)) / eps; }, jet_rule);

  const auto cp = critical(plain, TargetTopology::C(0), 0.0);
  const auto cl = critical(logged, TargetTopology::C(0), 0.0);
  bool ok = cp.kind == FiberKind::Finite && cl.kind == FiberKind::Finite;
  ok = ok && close(cp.R, 1.0, 0.10, note);
  ok = ok && close(cl.R, 1.0, 0.15, note);
  // infimum attained (N closed) for the plain scaling only
  if (cp.endpoint != FiberEndpoint::HalfOpen) {
    ok = false;
    note += " [plain scaling: infimum should be attained]";
  }
  if (cl.endpoint != FiberEndpoint::Closed) {
    ok = false;
    note += " [log scaling: infimum should not be attained]";
  }
  return ok;
}

bool c3_dissipative(std::string& note) {
  experiments::TransportProblem p{
      Nonlinearity::Dissipative, nets::make_delta(2, nets::default_mollifier()),
      2.0};
  const auto u = experiments::solve_transport(p);
  bool ok = true;
  for (double t : {0.25, 0.5, 1.0}) {
    const auto slice = nets::slice_t(u, t);
    for (double x : {-0.5, -0.25, 0.0, 0.25, 0.5}) {
      if (critical(slice, TargetTopology::Dprime(), x).kind !=
          FiberKind::Empty) {
        ok = false;
        note += " [nonempty at (" + std::to_string(x) + "," +
                std::to_string(t) + ")]";
      }
    }
  }
  const auto c0 = critical(p.initial, TargetTopology::Dprime(), 0.0);
  ok = ok && c0.kind == FiberKind::Finite && close(c0.R, 1.0, 0.15, note);
  return ok;
}

bool c4_sqrt_exp(std::string& note) {
  const nets::Mollifier& phi = nets::default_mollifier();
  bool ok = true;
  experiments::TransportProblem pd{Nonlinearity::SqrtExp,
                                   nets::embed_delta_derivative(0, 0.0, phi),
                                   2.0};
  const auto ud = experiments::solve_transport(pd);
  for (double t : {0.5, 1.0})
    if (critical(nets::slice_t(ud, t), TargetTopology::Dprime(), 0.0).kind !=
        FiberKind::Empty) {
      ok = false;
      note += " [delta data: spectrum should die at t=" + std::to_string(t) +
              "]";
    }

  experiments::TransportProblem pp{Nonlinearity::SqrtExp,
                                   nets::embed_delta_derivative(1, 0.0, phi),
                                   2.0};
  const auto up = experiments::solve_transport(pp);
  for (double t : {0.5, 1.0}) {
    const auto c = critical(nets::slice_t(up, t), TargetTopology::Dprime(), 0.0);
    ok = ok && c.kind == FiberKind::Finite && close(c.R, 1.0, 0.15, note);
  }
  return ok;
}

bool c5_log_growth(std::string& note) {
  bool ok = true;
  for (int m : {1, 2}) {
    experiments::TransportProblem p{
        Nonlinearity::LogGrowth, nets::make_delta(m, nets::default_mollifier()),
        2.0};
    const auto u = experiments::solve_transport(p);
    for (double t : {0.25, 0.5, 1.0}) {
      const double want = m * std::exp(t) - 1.0;
      const auto c = critical(nets::slice_t(u, t), TargetTopology::Dprime(),
                              0.0);
      if (c.kind != FiberKind::Finite || std::abs(c.R - want) > 0.10 * want) {
        ok = false;
        note += " [m=" + std::to_string(m) + " t=" + std::to_string(t) +
                ": R=" + std::to_string(c.kind == FiberKind::Finite ? c.R
                                                                    : -1.0) +
                " want " + std::to_string(want) + "]";
      }
    }
  }
  return ok;
}

bool c6_blowup(std::string& note) {
  experiments::BlowupProblem p;  // s = 0.5
  const auto u = experiments::solve_blowup(p);
  bool ok = true;
  for (double t : {0.25, 0.5, 0.75}) {
    const auto c = critical(nets::slice_t(u, t), TargetTopology::C(0), 0.0,
                            8.0);
    if (c.kind != FiberKind::Finite || c.R > 0.1) {
      ok = false;
      note += " [pre-blow-up fiber at t=" + std::to_string(t) +
              " should be {0}]";
    }
  }
  for (double t : {1.2, 1.5}) {
    const auto slice = nets::slice_t(u, t);
    for (double x : {0.1, 0.5}) {
      const auto c = critical(slice, TargetTopology::C(0), x, 8.0);
      ok = ok && c.kind == FiberKind::Finite && close(c.R, 0.5, 0.15, note);
    }
    if (critical(slice, TargetTopology::C(0), -0.5, 8.0).kind !=
        FiberKind::Empty) {
      ok = false;
      note += " [x=-0.5 should stay regular at t=" + std::to_string(t) + "]";
    }
  }
  return ok;
}

bool c7_strength(std::string& note) {
  const nets::Mollifier& phi = nets::default_mollifier();
  struct Case {
    const char* name;
    nets::GeneralizedNet net;
    int n;
  };
  const std::vector<Case> cases = {
      {"jump", corpus::heaviside_net(0.0), 1},
      {"kink", nets::embed_classical(nets::PiecewiseSmooth::abs_kink(0.0), phi),
       0},
      {"delta", nets::make_delta(1, phi), 2},
      {"delta_prime", nets::embed_delta_derivative(1, 0.0, phi), 3},
  };
  bool ok = true;
  for (const auto& c : cases) {
    try {
      const auto st = experiments::strength_of_singularity(c.net, 0.0, kLadder);
      if (st.n != c.n || std::abs(st.R - c.n) > 0.2) {
        ok = false;
        note += std::string(" [") + c.name + ": n=" + std::to_string(st.n) +
                " R=" + std::to_string(st.R) + " want " + std::to_string(c.n) +
                "]";
      }
    } catch (const std::exception& e) {
      ok = false;
      note += std::string(" [") + c.name + ": " + e.what() + "]";
    }
  }
  return ok;
}

bool c8_sum_law(std::string& note) {
  bool ok = true;
  for (int j : {0, 1}) {
    for (int k : {0, 1}) {
      experiments::SumLawProblem p;
      p.u0 = experiments::PointSource::deriv_delta(j, -1.0);
      p.v0 = experiments::PointSource::deriv_delta(k, +1.0);
      const auto w = experiments::solve_rauch_reed(p);
      const auto st = experiments::strength_of_singularity(
          nets::slice_t(w, 1.25), 0.0, kLadder);
      if (std::abs(st.R - (j + k + 2)) > 0.2) {
        ok = false;
        note += " [j=" + std::to_string(j) + " k=" + std::to_string(k) +
                ": R=" + std::to_string(st.R) + "]";
      }
    }
  }
  for (int m : {1, 2}) {
    for (int n : {1, 2}) {
      experiments::SumLawProblem p;
      p.u0 = experiments::PointSource::power_delta(m, -1.0);
      p.v0 = experiments::PointSource::power_delta(n, +1.0);
      const auto w = experiments::solve_rauch_reed(p);
      const auto c =
          critical(nets::slice_t(w, 1.25), TargetTopology::C(1), 0.0);
      if (c.kind != FiberKind::Finite || c.R > m + n + 0.15) {
        ok = false;
        note += " [powers m=" + std::to_string(m) + " n=" + std::to_string(n) +
                ": R=" + std::to_string(radius_key(c)) + " exceeds " +
                std::to_string(m + n) + "]";
      }
    }
  }
  return ok;
}

bool c9_wavefront(std::string& note) {
  const std::vector<double> grid{-0.5, -0.25, 0.0, 0.25, 0.5};
  const auto fam = asymptotics::RegularitySequenceFamily::bounded();
  bool ok = true;
  for (int m : {1, 2, 3}) {
    const auto wf = frequential::wavefront_estimate(
        nets::make_delta(m, nets::default_mollifier()), grid, kLadder, fam);
    const bool exact = wf.base_projection == std::vector<double>{0.0} &&
                       wf.singular.size() == 2 && wf.flagged(0.0, +1) &&
                       wf.flagged(0.0, -1);
    if (!exact) {
      ok = false;
      note += " [delta^" + std::to_string(m) + ": wavefront != {(0,+1),(0,-1)}]";
    }
    // base projection must coincide with the frequentially singular points
    std::vector<double> proj;
    for (double x : grid)
      if (wf.flagged(x, +1) || wf.flagged(x, -1)) proj.push_back(x);
    if (proj != wf.base_projection) {
      ok = false;
      note += " [projection mismatch for delta^" + std::to_string(m) + "]";
    }
  }
  const auto wfs =
      frequential::wavefront_estimate(corpus::smooth_net(1.0), grid, kLadder,
                                      fam);
  if (!wfs.singular.empty()) {
    ok = false;
    note += " [smooth net flagged]";
  }
  return ok;
}

bool c10_property_suites(std::string& note) {
  bool ok = true;
  const DomainBox K(-1.0, 1.0);
  const auto fam = asymptotics::RegularitySequenceFamily::bounded();

  // fibers grow with the topology strength (weak <= C0 <= C1)
  int idx = 0;
  for (const auto& u : corpus::make_corpus(7, 20)) {
    const double x = u.singular_x.empty() ? 0.0 : u.singular_x.front();
    const double r0 = radius_key(critical(u, TargetTopology::C(0), x));
    const double r1 = radius_key(critical(u, TargetTopology::C(1), x));
    const double rd = radius_key(critical(u, TargetTopology::Dprime(), x));
    if (!(r0 <= r1 + 0.1 && rd <= r0 + 0.1)) {
      ok = false;
      note += " [monotonicity broken on net " + std::to_string(idx) + "]";
    }
    ++idx;
  }

  // spectrum projects exactly onto the singular support
  const std::vector<double> grid{-0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75};
  for (const auto& u : corpus::make_corpus(21, 5)) {
    const auto supp = local_spectrum::singular_support(
        u, kPower, grid, TargetTopology::C(0), kLadder);
    const auto spec = local_spectrum::singular_spectrum(
        u, kPower, grid, TargetTopology::C(0), kLadder);
    if (spec.singular_support != supp) {
      ok = false;
      note += " [projection inequality]";
    }
  }

  // singular supports are subadditive and stable under differentiation
  {
    std::mt19937 rng(99);
    const double cell = 0.25;
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = corpus::random_net(rng);
      const auto v = corpus::random_net(rng);
      const auto su = local_spectrum::singular_support(
          u, kPower, grid, TargetTopology::C(0), kLadder);
      const auto sv = local_spectrum::singular_support(
          v, kPower, grid, TargetTopology::C(0), kLadder);
      const auto ssum = local_spectrum::singular_support(
          nets::net_add(u, v), kPower, grid, TargetTopology::C(0), kLadder);
      auto near_some = [&](double x, const std::vector<double>& s) {
        for (double y : s)
          if (std::abs(x - y) <= cell + 1e-9) return true;
        return false;
      };
      for (double x : ssum)
        if (!near_some(x, su) && !near_some(x, sv)) {
          ok = false;
          note += " [subadditivity broken at " + std::to_string(x) + "]";
        }
      if (u.max_order >= 1) {
        const auto du = nets::net_derive(u, MultiIndex::dx(1));
        for (double x : local_spectrum::singular_support(
                 du, kPower, grid, TargetTopology::C(0), kLadder))
          if (!near_some(x, su)) {
            ok = false;
            note += " [derivative support escaped at " + std::to_string(x) +
                    "]";
          }
      }
    }
  }

  // powers: R(u^p) <= p R(u) within tolerance on the two classic nets
  for (const auto* name : {"delta", "jump"}) {
    const auto u = std::string(name) == "delta"
                       ? nets::make_delta(1, nets::default_mollifier())
                       : corpus::heaviside_net(0.0);
    const double ru =
        std::max(0.0, radius_key(critical(u, TargetTopology::C(0), 0.0)));
    for (int p : {2, 3}) {
      const double rp =
          radius_key(critical(nets::net_pow(u, p), TargetTopology::C(0), 0.0));
      if (rp > p * ru + 0.15) {
        ok = false;
        note += std::string(" [") + name + "^" + std::to_string(p) +
                ": R=" + std::to_string(rp) + "]";
      }
    }
  }

  // classification flags form a chain
  for (const auto& u : corpus::make_corpus(13, 20)) {
    const int l_max = std::min(2, u.max_order);
    const auto v = asymptotics::classify(u, K, l_max, fam, kLadder);
    const bool chain = (!v.negligible || v.slow_scale) &&
                       (!v.slow_scale || v.g_infinity) &&
                       (!v.g_infinity || v.g_regular) &&
                       (!v.g_regular || v.moderate);
    if (!chain) {
      ok = false;
      note += " [classification chain violated]";
    }
  }
  return ok;
}

bool c11_hygiene(std::string& note) {
  bool ok = true;

  // pure powers fit exactly
  for (double b : {-3.0, -1.0, 2.0}) {
    std::vector<std::pair<double, double>> s;
    for (double e : kLadder.values) s.push_back({e, 0.8 * std::pow(e, b)});
    const auto fit = asymptotics::fit_valuation(s);
    if (std::abs(fit.slope - b) > 1e-10 || fit.residual > 1e-10) {
      ok = false;
      note += " [power fit off at b=" + std::to_string(b) + "]";
    }
  }

  // analytic vs finite-difference derivatives
  {
    const auto u = nets::make_delta(1, nets::default_mollifier());
    nets::GeneralizedNet fd = u;
    fd.mode = nets::DerivativeMode::FiniteDifference;
    const double eps = 0.0625;
    for (double x : {0.2 * eps, 0.6 * eps}) {
      const double a = u.eval(x, eps, 2), b = fd.eval(x, eps, 2);
      if (std::abs(a - b) > 1e-4 * std::max(1.0, std::abs(a))) {
        ok = false;
        note += " [FD derivative mismatch]";
      }
    }
  }

  // closed-form vs RK4 transport
  for (auto nl : {Nonlinearity::Dissipative, Nonlinearity::SqrtExp,
                  Nonlinearity::LogGrowth}) {
    experiments::TransportProblem p{
        nl, nets::make_delta(1, nets::default_mollifier()), 2.0};
    const auto u = experiments::solve_transport(p);
    const double closed = u.eval(Point{0.05, 0.8}, 0.0625);
    const double rk4 = experiments::transport_rk4(p, 0.05, 0.8, 0.0625);
    if (std::abs(closed - rk4) > 1e-4 * std::max(1.0, std::abs(closed))) {
      ok = false;
      note += " [transport closed form vs RK4 mismatch]";
    }
  }

  // CLI output is byte-deterministic
  {
    cli::RunConfig c;
    c.analysis = "spectrum";
    c.net = "delta";
    c.grid = {0.0};
    const auto o1 = cli::run(c), o2 = cli::run(c);
    if (o1.csv != o2.csv || o1.summary_json != o2.summary_json) {
      ok = false;
      note += " [CLI output not deterministic]";
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 delta-power spectra (C0 / C1 / weak)", c1_delta_powers},
      {"2 scaled-net endpoints (plain vs log)", c2_example4},
      {"3 dissipative transport", c3_dissipative},
      {"4 sqrt-growth transport", c4_sqrt_exp},
      {"5 logarithmic growth m*e^t - 1", c5_log_growth},
      {"6 regularized blow-up", c6_blowup},
      {"7 singularity strength readout", c7_strength},
      {"8 interaction sum law", c8_sum_law},
      {"9 wavefront m-independence", c9_wavefront},
      {"10 property suites", c10_property_suites},
      {"11 numerical hygiene", c11_hygiene},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note += std::string(" [exception: ") + e.what() + "]";
    }
    std::printf("%s criterion %s%s\n", ok ? "PASS" : "FAIL", c.label.c_str(),
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (failed == 0) std::printf("all %zu criteria passed\n", criteria.size());
  else std::printf("%d criteria failed\n", failed);
  return failed;
}
