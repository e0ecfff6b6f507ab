#pragma once

#include <string>
#include <vector>

#include "asymptospec/net.hpp"
#include "asymptospec/spectrum.hpp"

namespace asymptospec {
namespace experiments {

// --- semilinear transport (lambda == 0): d/dt u = F(u) fiberwise in x ------

enum class Nonlinearity { Dissipative, SqrtExp, LogGrowth };

struct TransportProblem {
  Nonlinearity nonlinearity = Nonlinearity::Dissipative;
  nets::GeneralizedNet initial;  // 1D net
  double T = 2.0;
};

// Closed-form solution net on (x, t). Derivatives are analytic (jet
// propagation through the solution formula in either variable).
nets::GeneralizedNet solve_transport(const TransportProblem& p);

// Independent RK4 integration of the fiber ODE, for cross-validation.
double transport_rk4(const TransportProblem& p, double x, double t, double eps,
                     int steps = 4000);

// --- regularized blow-up: d/dt u = chi_eps(u) u^2, u(.,0) = H * phi_eps ----

struct BlowupProblem {
  double s = 0.5;  // cutoff exponent: chi = 1 on |z| <= eps^{-s}
  double T = 2.0;
  DomainBox space = DomainBox(-1.0, 1.0);
};

// Smoothed double-ramp cutoff: 1 on |z| <= eps^{-s}, 0 on |z| >= 1+eps^{-s}.
double blowup_cutoff(double z, double eps, double s);

// Hybrid solution: exact 1/(1/u0 - t) below the cutoff plateau, RK4 with step
// eps^{2s}/4 through the cutoff band, saturation beyond.
nets::GeneralizedNet solve_blowup(const BlowupProblem& p);

// --- strength of a singularity via the C^1 fiber ---------------------------

struct StrengthResult {
  int n = 0;        // rounded fiber radius; strength is -n
  double R = 0.0;   // fitted radius before rounding
  local_spectrum::FiberEndpoint endpoint = local_spectrum::FiberEndpoint::Unknown;
};

// n = round(R_x0) of the C^1 fiber of the (already embedded) net; throws if
// the fit sits further than `round_tol` from an integer.
StrengthResult strength_of_singularity(const nets::GeneralizedNet& f, double x0,
                                       const EpsLadder& ladder,
                                       double round_tol = 0.2,
                                       const local_spectrum::AnalyzerOptions&
                                           opt = {});

// --- Rauch-Reed interacting system -----------------------------------------

struct PointSource {
  enum class Kind { DerivDelta, PowerDelta };
  Kind kind = Kind::DerivDelta;
  int index = 0;       // derivative order j, or power m (>= 1)
  double center = 0.0;

  static PointSource deriv_delta(int j, double c) {
    return {Kind::DerivDelta, j, c};
  }
  static PointSource power_delta(int m, double c) {
    return {Kind::PowerDelta, m, c};
  }
};

struct SumLawProblem {
  PointSource u0 = PointSource::deriv_delta(0, -1.0);
  PointSource v0 = PointSource::deriv_delta(0, +1.0);
  double T = 2.0;
};

// w(x,t) = int_0^t u0_eps(x - tau) v0_eps(x + tau) dtau, with analytic x- and
// t-derivatives; the crossing characteristics interact at (0, 1).
nets::GeneralizedNet solve_rauch_reed(const SumLawProblem& p);

// --- delta-power comparison table ------------------------------------------

struct DeltaPowerRow {
  int m = 1;
  std::string topology;       // "C0", "C1", "Dprime"
  bool empty_expected = false, empty_estimated = false;
  double R_expected = 0.0, R_estimated = 0.0;
  std::string endpoint_expected, endpoint_estimated;  // fiber interval
  bool pass = false;
};

std::vector<DeltaPowerRow> run_delta_powers(
    const std::vector<int>& m_list,
    const std::vector<local_spectrum::TargetTopology>& topologies,
    const EpsLadder& ladder, double tol = 0.15);

}  // namespace experiments
}  // namespace asymptospec
