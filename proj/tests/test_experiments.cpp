#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "asymptospec/corpus.hpp"
#include "asymptospec/experiments.hpp"
#include "asymptospec/net.hpp"

using namespace asymptospec;
using experiments::Nonlinearity;
using local_spectrum::FiberKind;
using local_spectrum::LocalAnalyzer;
using local_spectrum::TargetTopology;

namespace {

const EpsLadder kLadder = EpsLadder::standard();
const nets::AsymptoticScale kPower = nets::AsymptoticScale::power();

local_spectrum::CriticalResult critical_at(const nets::GeneralizedNet& u2d,
                                           double x, double t,
                                           const TargetTopology& top) {
  LocalAnalyzer a(nets::slice_t(u2d, t), kPower, kLadder, top);
  return a.critical(x);
}

}  // namespace

TEST_CASE("closed-form transport solutions match RK4 to 1e-4") {
  const nets::Mollifier& phi = nets::default_mollifier();
  for (auto nl : {Nonlinearity::Dissipative, Nonlinearity::SqrtExp,
                  Nonlinearity::LogGrowth}) {
    experiments::TransportProblem p{nl, nets::make_delta(1, phi), 2.0};
    const auto u = experiments::solve_transport(p);
    for (double x : {0.02, 0.05}) {
      for (double t : {0.3, 0.7, 1.4}) {
        const double eps = 0.0625;
        const double closed = u.eval(Point{x, t}, eps);
        const double rk4 = experiments::transport_rk4(p, x, t, eps);
        CHECK(std::abs(closed - rk4) <
              1e-4 * std::max(1.0, std::abs(closed)));
      }
    }
  }
}

TEST_CASE("dissipative damping wipes out the weak singularity") {
  experiments::TransportProblem p{
      Nonlinearity::Dissipative, nets::make_delta(2, nets::default_mollifier()),
      2.0};
  const auto u = experiments::solve_transport(p);
  for (double t : {0.25, 1.0})
    CHECK(critical_at(u, 0.0, t, TargetTopology::Dprime()).kind ==
          FiberKind::Empty);

  // ... while the initial data is genuinely singular
  LocalAnalyzer a0(p.initial, kPower, kLadder, TargetTopology::Dprime());
  const auto c0 = a0.critical(0.0);
  REQUIRE(c0.kind == FiberKind::Finite);
  CHECK(c0.R == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("sqrt growth keeps the delta-prime singularity at radius one") {
  const nets::Mollifier& phi = nets::default_mollifier();
  experiments::TransportProblem pd{Nonlinearity::SqrtExp,
                                   nets::embed_delta_derivative(0, 0.0, phi),
                                   2.0};
  const auto ud = experiments::solve_transport(pd);
  CHECK(critical_at(ud, 0.0, 0.5, TargetTopology::Dprime()).kind ==
        FiberKind::Empty);

  experiments::TransportProblem pp{Nonlinearity::SqrtExp,
                                   nets::embed_delta_derivative(1, 0.0, phi),
                                   2.0};
  const auto up = experiments::solve_transport(pp);
  const auto c = critical_at(up, 0.0, 1.0, TargetTopology::Dprime());
  REQUIRE(c.kind == FiberKind::Finite);
  CHECK(c.R == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("logarithmic growth inflates the radius like m e^t - 1") {
  experiments::TransportProblem p{
      Nonlinearity::LogGrowth, nets::make_delta(1, nets::default_mollifier()),
      2.0};
  const auto u = experiments::solve_transport(p);
  for (double t : {0.25, 1.0}) {
    const double want = std::exp(t) - 1.0;
    const auto c = critical_at(u, 0.0, t, TargetTopology::Dprime());
    REQUIRE(c.kind == FiberKind::Finite);
    CHECK(std::abs(c.R - want) <= 0.10 * want);
  }
}

TEST_CASE("blow-up cutoff profile") {
  const double eps = 0.01, s = 0.5;
  const double cap = std::pow(eps, -s);
  CHECK(experiments::blowup_cutoff(0.0, eps, s) == 1.0);
  CHECK(experiments::blowup_cutoff(0.5 * cap, eps, s) == 1.0);
  CHECK(experiments::blowup_cutoff(cap + 1.5, eps, s) == 0.0);
  const double mid = experiments::blowup_cutoff(cap + 0.5, eps, s);
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
}

TEST_CASE("regularized blow-up: singularity appears past t = 1") {
  experiments::BlowupProblem p;  // s = 0.5
  const auto u = experiments::solve_blowup(p);
  local_spectrum::AnalyzerOptions opt;
  opt.r_max = 8.0;

  {
    LocalAnalyzer a(nets::slice_t(u, 0.5), kPower, kLadder,
                    TargetTopology::C(0), opt);
    const auto c = a.critical(0.0);
    REQUIRE(c.kind == FiberKind::Finite);
    CHECK(c.R <= 0.1);  // only the jump itself: fiber {0}
  }
  {
    LocalAnalyzer a(nets::slice_t(u, 1.2), kPower, kLadder,
                    TargetTopology::C(0), opt);
    const auto c = a.critical(0.1);
    REQUIRE(c.kind == FiberKind::Finite);
    CHECK(c.R == doctest::Approx(0.5).epsilon(0.3));
    CHECK(a.critical(-0.5).kind == FiberKind::Empty);
  }
}

TEST_CASE("strength readout rounds the C^1 radius") {
  const nets::Mollifier& phi = nets::default_mollifier();

  const auto h = corpus::heaviside_net(0.0);
  const auto sh = experiments::strength_of_singularity(h, 0.0, kLadder);
  CHECK(sh.n == 1);

  const auto dd = nets::embed_delta_derivative(1, 0.0, phi);
  const auto sd = experiments::strength_of_singularity(dd, 0.0, kLadder);
  CHECK(sd.n == 3);
  CHECK(std::abs(sd.R - 3.0) <= 0.2);

  // regular points are rejected rather than reported as strength 0
  const auto s = corpus::smooth_net(1.0);
  CHECK_THROWS_AS(experiments::strength_of_singularity(s, 0.3, kLadder),
                  std::invalid_argument);
}

TEST_CASE("interacting point sources obey the sum law") {
  experiments::SumLawProblem p;  // two plain jumps-to-be: j = k = 0
  const auto w = experiments::solve_rauch_reed(p);
  const auto slice = nets::slice_t(w, 1.25);
  const auto st = experiments::strength_of_singularity(slice, 0.0, kLadder);
  CHECK(st.n == 2);
  CHECK(std::abs(st.R - 2.0) <= 0.2);

  // before the characteristics meet there is nothing at the meeting point
  LocalAnalyzer a(nets::slice_t(w, 0.5), kPower, kLadder, TargetTopology::C(1));
  CHECK(a.critical(0.0).kind == FiberKind::Empty);

  experiments::SumLawProblem bad;
  bad.T = 1.0;
  CHECK_THROWS_AS(experiments::solve_rauch_reed(bad), std::invalid_argument);
}

TEST_CASE("delta-power table grades itself") {
  const auto rows = experiments::run_delta_powers(
      {1, 2},
      {TargetTopology::C(0), TargetTopology::C(1), TargetTopology::Dprime()},
      kLadder);
  CHECK(rows.size() == 6);
  for (const auto& r : rows) {
    CAPTURE(r.m);
    CAPTURE(r.topology);
    CHECK(r.pass);
  }
}
