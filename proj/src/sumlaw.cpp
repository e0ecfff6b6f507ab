#include "asymptospec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asymptospec/quadrature.hpp"

namespace asymptospec {
namespace experiments {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// order-th derivative of the source profile at x
double source_deriv(const PointSource& ps, double x, double eps, int order) {
  const nets::Mollifier& phi = nets::default_mollifier();
  const double y = (x - ps.center) / eps;
  if (std::abs(y) >= 1.0) return 0.0;
  if (ps.kind == PointSource::Kind::DerivDelta)
    return std::pow(eps, -1 - ps.index - order) * phi.deriv(y, ps.index + order);
  return std::pow(eps, -ps.index - order) *
         phi.jet(y, order).pow(ps.index).deriv(order);
}

void validate(const PointSource& ps) {
  if (ps.kind == PointSource::Kind::DerivDelta && ps.index < 0)
    throw std::invalid_argument("solve_rauch_reed: derivative order >= 0");
  if (ps.kind == PointSource::Kind::PowerDelta && ps.index < 1)
    throw std::invalid_argument("solve_rauch_reed: delta power >= 1");
}

}  // namespace

nets::GeneralizedNet solve_rauch_reed(const SumLawProblem& p) {
  validate(p.u0);
  validate(p.v0);
  if (!(p.T >= 1.5))
    throw std::invalid_argument("solve_rauch_reed: T >= 1.5 (interaction at t=1)");
  const PointSource u0 = p.u0, v0 = p.v0;
  // characteristics x = u0.center + t and x = v0.center - t cross here:
  const double x_meet = 0.5 * (u0.center + v0.center);
  const double t_meet = 0.5 * (v0.center - u0.center);
  if (!(t_meet > 0.0))
    throw std::invalid_argument("solve_rauch_reed: v0 must start right of u0");

  nets::GeneralizedNet r;
  r.domain = DomainBox(x_meet - 1.5, x_meet + 1.5, 0.0, p.T);
  r.max_order = 6;
  r.mode = nets::DerivativeMode::Analytic;
  r.singular_x = {x_meet};
  r.evaluator = [u0, v0](const Point& pt, double eps, const MultiIndex& a) {
    if (!a.pure())
      throw std::invalid_argument("solve_rauch_reed: single-axis derivatives");
    const double x = pt[0], t = pt[1];
    if (a.k[1] > 0) {
      // d^n/dt^n w = d^{n-1}/dt^{n-1} [u0(x-t) v0(x+t)]
      const int n = a.k[1] - 1;
      double s = 0.0;
      for (int i = 0; i <= n; ++i)
        s += binom(n, i) * (i % 2 ? -1.0 : 1.0) *
             source_deriv(u0, x - t, eps, i) *
             source_deriv(v0, x + t, eps, n - i);
      return s;
    }
    const int n = a.k[0];
    // integrand support: tau near x - u0.center and near v0.center - x
    const double lo =
        std::max({0.0, x - u0.center - eps, v0.center - x - eps});
    const double hi =
        std::min({t, x - u0.center + eps, v0.center - x + eps});
    if (!(lo < hi)) return 0.0;
    auto f = [&](double tau) {
      double s = 0.0;
      for (int i = 0; i <= n; ++i)
        s += binom(n, i) * source_deriv(u0, x - tau, eps, i) *
             source_deriv(v0, x + tau, eps, n - i);
      return s;
    };
    return quad::integrate(f, lo, hi, eps / 4.0);
  };
  return r;
}

}  // namespace experiments
}  // namespace asymptospec
