#include "asymptospec/experiments.hpp"

#include <cmath>
#include <stdexcept>

namespace asymptospec {
namespace experiments {

namespace {

Jet initial_jet(const nets::GeneralizedNet& u0, double x, double eps, int n) {
  Jet j(n);
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k >= 2) fact *= k;
    j[k] = u0.eval(x, eps, k) / fact;
  }
  return j;
}

// Solution formula as a jet in x (t frozen).
Jet formula_x(Nonlinearity nl, const Jet& u, double t) {
  switch (nl) {
    case Nonlinearity::Dissipative:
      return u * (u * u * (2.0 * t) + 1.0).pow(-0.5);
    case Nonlinearity::SqrtExp:
      return u * std::cosh(t) + (u * u + 1.0).sqrt() * std::sinh(t);
    case Nonlinearity::LogGrowth:
      return (u + 1.0).pow(std::exp(t)) + (-1.0);
  }
  throw std::logic_error("formula_x: unreachable");
}

// Solution formula as a jet in t (x frozen, u0 scalar).
Jet formula_t(Nonlinearity nl, double v, const Jet& t) {
  switch (nl) {
    case Nonlinearity::Dissipative:
      return (t * (2.0 * v * v) + 1.0).pow(-0.5) * v;
    case Nonlinearity::SqrtExp: {
      const Jet e = t.exp(), em = (-t).exp();
      return (e + em) * (0.5 * v) + (e - em) * (0.5 * std::sqrt(1.0 + v * v));
    }
    case Nonlinearity::LogGrowth:
      return (t.exp() * std::log(1.0 + v)).exp() + (-1.0);
  }
  throw std::logic_error("formula_t: unreachable");
}

double rhs(Nonlinearity nl, double u) {
  switch (nl) {
    case Nonlinearity::Dissipative:
      return -u * u * u;
    case Nonlinearity::SqrtExp:
      return std::sqrt(1.0 + u * u);
    case Nonlinearity::LogGrowth:
      return (1.0 + u) * std::log(1.0 + u);
  }
  throw std::logic_error("rhs: unreachable");
}

}  // namespace

nets::GeneralizedNet solve_transport(const TransportProblem& p) {
  if (p.initial.domain.dim != 1)
    throw std::invalid_argument("solve_transport: initial net must be 1D");
  if (!(p.T > 0.0)) throw std::invalid_argument("solve_transport: T > 0");

  if (p.nonlinearity == Nonlinearity::LogGrowth) {
    // the closed form needs u0 > -1 wherever it is evaluated
    const double lo = p.initial.domain.lo[0], hi = p.initial.domain.hi[0];
    for (double eps : {0.0625, 1.0 / 65536.0})
      for (int i = 0; i <= 64; ++i) {
        const double x = lo + (hi - lo) * i / 64.0;
        if (p.initial.eval(x, eps) <= -1.0)
          throw std::invalid_argument(
              "solve_transport: log nonlinearity needs initial data > -1");
      }
  }

  const nets::GeneralizedNet u0 = p.initial;
  const Nonlinearity nl = p.nonlinearity;
  nets::GeneralizedNet r;
  r.domain = DomainBox(u0.domain.lo[0], u0.domain.hi[0], 0.0, p.T);
  r.max_order = u0.max_order;
  r.mode = nets::DerivativeMode::Analytic;
  r.singular_x = u0.singular_x;
  r.evaluator = [u0, nl](const Point& pt, double eps, const MultiIndex& a) {
    if (!a.pure())
      throw std::invalid_argument("solve_transport: single-axis derivatives");
    if (a.k[1] == 0) {
      const int n = a.k[0];
      return formula_x(nl, initial_jet(u0, pt[0], eps, n), pt[1]).deriv(n);
    }
    const int n = a.k[1];
    const double v = u0.eval(pt[0], eps);
    return formula_t(nl, v, Jet::variable(pt[1], n)).deriv(n);
  };
  return r;
}

double transport_rk4(const TransportProblem& p, double x, double t, double eps,
                     int steps) {
  if (steps < 1) throw std::invalid_argument("transport_rk4: steps >= 1");
  double u = p.initial.eval(x, eps);
  const double h = t / steps;
  for (int i = 0; i < steps; ++i) {
    const double k1 = rhs(p.nonlinearity, u);
    const double k2 = rhs(p.nonlinearity, u + 0.5 * h * k1);
    const double k3 = rhs(p.nonlinearity, u + 0.5 * h * k2);
    const double k4 = rhs(p.nonlinearity, u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

}  // namespace experiments
}  // namespace asymptospec
