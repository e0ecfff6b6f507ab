#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "asymptospec/corpus.hpp"
#include "asymptospec/net.hpp"
#include "asymptospec/spectrum.hpp"

using namespace asymptospec;
using local_spectrum::ConvStatus;
using local_spectrum::FiberEndpoint;
using local_spectrum::FiberKind;
using local_spectrum::LocalAnalyzer;
using local_spectrum::TargetTopology;

namespace {

const EpsLadder kLadder = EpsLadder::standard();
const nets::AsymptoticScale kPower = nets::AsymptoticScale::power();

double fiber_R(const nets::GeneralizedNet& u, const TargetTopology& top,
               double x = 0.0) {
  LocalAnalyzer a(u, kPower, kLadder, top);
  const auto c = a.critical(x);
  REQUIRE(c.kind == FiberKind::Finite);
  return c.R;
}

// comparable radius for inclusion checks: empty fibers sort below everything
double radius_key(const local_spectrum::CriticalResult& c) {
  switch (c.kind) {
    case FiberKind::Empty: return -1.0;
    case FiberKind::Finite: return c.R;
    case FiberKind::Infinite: return 1e9;
    default: return -1.0;
  }
}

}  // namespace

TEST_CASE("direct convergence tests on a uniformly scaled smooth net") {
  const auto u = corpus::scaled_smooth_net(1.0, 1.0);  // eps^{-1} (cos+2)
  const DomainBox V(-0.25, 0.25);
  const auto top = TargetTopology::C(0);

  auto at = [&](double r) {
    return local_spectrum::test_convergence(u, kPower, r, V, top, kLadder);
  };
  CHECK(at(0.5).status == ConvStatus::Diverges);
  CHECK(at(1.0).status == ConvStatus::ConvergesNonzero);
  CHECK(at(1.0).exact);
  CHECK(at(1.5).status == ConvStatus::ConvergesToZero);
  CHECK(at(1.5).converges());
}

TEST_CASE("delta-power fibers against the closed forms") {
  const nets::Mollifier& phi = nets::default_mollifier();
  SUBCASE("C^p radius m + p with closed fiber") {
    for (int m : {1, 2}) {
      const auto u = nets::make_delta(m, phi);
      for (int p : {0, 1}) {
        LocalAnalyzer a(u, kPower, kLadder, TargetTopology::C(p));
        const auto c = a.critical(0.0);
        REQUIRE(c.kind == FiberKind::Finite);
        CHECK(c.R == doctest::Approx(m + p).epsilon(0.05));
        CHECK(c.endpoint == FiberEndpoint::Closed);
        CHECK_FALSE(c.contradiction);
      }
    }
  }
  SUBCASE("weak fiber: empty for delta, open radius m-1 for powers") {
    LocalAnalyzer a1(nets::make_delta(1, phi), kPower, kLadder,
                     TargetTopology::Dprime());
    CHECK(a1.critical(0.0).kind == FiberKind::Empty);

    LocalAnalyzer a2(nets::make_delta(2, phi), kPower, kLadder,
                     TargetTopology::Dprime());
    const auto c = a2.critical(0.0);
    REQUIRE(c.kind == FiberKind::Finite);
    CHECK(c.R == doctest::Approx(1.0).epsilon(0.05));
    CHECK(c.endpoint == FiberEndpoint::HalfOpen);
  }
  SUBCASE("away from the feature every fiber is empty") {
    LocalAnalyzer a(nets::make_delta(2, phi), kPower, kLadder,
                    TargetTopology::C(1));
    CHECK(a.critical(0.5).kind == FiberKind::Empty);
  }
}

TEST_CASE("mollified jump: C^0 radius 0, C^1 radius 1") {
  const auto h = corpus::heaviside_net(0.0);
  CHECK(fiber_R(h, TargetTopology::C(0)) == doctest::Approx(0.0).epsilon(0.05));
  CHECK(fiber_R(h, TargetTopology::C(1)) == doctest::Approx(1.0).epsilon(0.05));
  LocalAnalyzer a(h, kPower, kLadder, TargetTopology::Dprime());
  CHECK(a.critical(0.0).kind == FiberKind::Empty);
}

TEST_CASE("endpoint attainment distinguishes the two Example-4 scalings") {
  const auto plain = corpus::scaled_smooth_net(1.0, 1.0);
  LocalAnalyzer ap(plain, kPower, kLadder, TargetTopology::C(0));
  const auto cp = ap.critical(0.0);
  REQUIRE(cp.kind == FiberKind::Finite);
  CHECK(cp.R == doctest::Approx(1.0).epsilon(0.01));
  CHECK(cp.endpoint == FiberEndpoint::HalfOpen);  // infimum attained

  const auto logged = nets::make_scaled_smooth(
      [](double eps) { return std::abs(std::log(eps)) / eps; },
      [](double x, int order) { return (Jet::variable(x, order)).cos() + 2.0; });
  LocalAnalyzer al(logged, kPower, kLadder, TargetTopology::C(0));
  const auto cl = al.critical(0.0);
  REQUIRE(cl.kind == FiberKind::Finite);
  CHECK(cl.R == doctest::Approx(1.0).epsilon(0.15));
  CHECK(cl.endpoint == FiberEndpoint::Closed);  // infimum not attained
}

TEST_CASE("gevrey scale tames the delta immediately") {
  LocalAnalyzer a(nets::make_delta(1, nets::default_mollifier()),
                  nets::AsymptoticScale::gevrey(1.0), kLadder,
                  TargetTopology::C(0));
  const auto v = a.test_at(0.5, 0.0);
  CHECK(v.converges());
  const auto c = a.critical(0.0);
  REQUIRE(c.kind == FiberKind::Finite);
  CHECK(c.R < 0.1);
}

TEST_CASE("singular support and spectrum agree (projection property)") {
  const auto u = nets::net_add(nets::make_delta(1, nets::default_mollifier()),
                               corpus::heaviside_net(0.5));
  const std::vector<double> grid{-0.5, -0.25, 0.0, 0.25, 0.5};
  const auto top = TargetTopology::C(0);

  const auto supp =
      local_spectrum::singular_support(u, kPower, grid, top, kLadder);
  CHECK(supp == std::vector<double>{0.0, 0.5});

  const auto res =
      local_spectrum::singular_spectrum(u, kPower, grid, top, kLadder);
  CHECK(res.singular_support == supp);
  for (const auto& p : res.points) {
    const bool in_supp =
        std::find(supp.begin(), supp.end(), p.x) != supp.end();
    CHECK(p.in_singular_support() == in_supp);
    // sampled verdict at r=0 must match the fiber emptiness
    CHECK((p.sampled[0] == ConvStatus::Diverges) == in_supp);
  }
  REQUIRE(res.sup_R().has_value());
  CHECK(*res.sup_R() == doctest::Approx(1.0).epsilon(0.05));
  CHECK(res.points[2].fiber_string().substr(0, 3) == "[0,");
}

TEST_CASE("fiber radius is monotone in the topology strength") {
  auto nets_under_test = corpus::make_corpus(5, 6);
  for (const auto& u : nets_under_test) {
    const double x = u.singular_x.empty() ? 0.0 : u.singular_x.front();
    LocalAnalyzer a0(u, kPower, kLadder, TargetTopology::C(0));
    LocalAnalyzer a1(u, kPower, kLadder, TargetTopology::C(1));
    LocalAnalyzer ad(u, kPower, kLadder, TargetTopology::Dprime());
    const double r0 = radius_key(a0.critical(x));
    const double r1 = radius_key(a1.critical(x));
    const double rd = radius_key(ad.critical(x));
    CHECK(r0 <= r1 + 0.1);
    CHECK(rd <= r0 + 0.1);
  }
}

TEST_CASE("nonlinear bounds report on a product of classic nets") {
  const auto d = nets::make_delta(1, nets::default_mollifier());
  const auto h = corpus::heaviside_net(0.0);
  const auto rep = local_spectrum::check_nonlinear_bounds(
      d, h, kPower, {-0.25, 0.0, 0.25}, TargetTopology::C(0), kLadder);
  CHECK(rep.all_ok);
  REQUIRE(!rep.products.empty());
  REQUIRE(!rep.powers.empty());
  for (const auto& row : rep.products) CHECK(row.ok);
  for (const auto& row : rep.powers) CHECK(row.ok);
}

TEST_CASE("analyzer input validation") {
  const auto d = nets::make_delta(1, nets::default_mollifier());
  LocalAnalyzer a(d, kPower, kLadder, TargetTopology::C(0));
  CHECK_THROWS_AS(a.critical(5.0), std::invalid_argument);
  CHECK_THROWS_AS(a.test(0.0, DomainBox(-10.0, 10.0)), std::invalid_argument);

  nets::GeneralizedNet st;
  st.domain = DomainBox(-1.0, 1.0, 0.0, 1.0);
  st.evaluator = [](const Point&, double, const MultiIndex&) { return 0.0; };
  CHECK_THROWS_AS(LocalAnalyzer(st, kPower, kLadder, TargetTopology::C(0)),
                  std::invalid_argument);

  CHECK_THROWS_AS(LocalAnalyzer(d, kPower, kLadder, TargetTopology::C(20)),
                  std::invalid_argument);
}
