#include "asymptospec/experiments.hpp"

#include <cmath>
#include <stdexcept>

namespace asymptospec {
namespace experiments {

double blowup_cutoff(double z, double eps, double s) {
  const double a = std::pow(eps, -s);
  const double az = std::abs(z);
  if (az <= a) return 1.0;
  if (az >= a + 1.0) return 0.0;
  const double t = 1.0 - (az - a);  // ramps 1 -> 0 across the unit band
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

nets::GeneralizedNet solve_blowup(const BlowupProblem& p) {
  if (!(p.s > 0.0)) throw std::invalid_argument("solve_blowup: s > 0");
  if (!(p.T > 0.0)) throw std::invalid_argument("solve_blowup: T > 0");
  const double s = p.s;
  nets::GeneralizedNet r;
  r.domain = DomainBox(p.space.lo[0], p.space.hi[0], 0.0, p.T);
  r.max_order = 2;
  r.mode = nets::DerivativeMode::FiniteDifference;
  r.singular_x = {0.0};
  r.evaluator = [s](const Point& pt, double eps, const MultiIndex& a) {
    if (a.total() != 0)
      throw std::invalid_argument("solve_blowup: value evaluator only");
    const nets::Mollifier& phi = nets::default_mollifier();
    const double u0 = phi.cdf(pt[0] / eps);
    if (u0 <= 0.0) return 0.0;
    const double cap = std::pow(eps, -s);
    const double t = pt[1];
    // Exact solution of u' = u^2 while chi == 1: u = 1/(1/u0 - t).
    const double t_cap = 1.0 / u0 - 1.0 / cap;
    if (t <= t_cap) return 1.0 / (1.0 / u0 - t);
    // RK4 through the cutoff band; u saturates below 1 + cap quickly, so the
    // step count is bounded.
    const double h = std::min(std::pow(eps, 2.0 * s) / 4.0, 1e-3);
    const int max_steps = 4096;
    const double want = std::ceil((t - t_cap) / h);
    const int n = want > max_steps ? max_steps : static_cast<int>(want);
    double u = cap;
    auto f = [eps, s](double z) { return blowup_cutoff(z, eps, s) * z * z; };
    for (int i = 0; i < n; ++i) {
      const double k1 = f(u);
      const double k2 = f(u + 0.5 * h * k1);
      const double k3 = f(u + 0.5 * h * k2);
      const double k4 = f(u + h * k3);
      u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      if (u > 2.0 * (1.0 + cap))
        throw std::runtime_error("solve_blowup: overflow past the cutoff band");
    }
    return u;
  };
  return r;
}

}  // namespace experiments
}  // namespace asymptospec
