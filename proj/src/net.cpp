#include "asymptospec/net.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asymptospec/quadrature.hpp"

namespace asymptospec {
namespace nets {

namespace {

int single_axis(const MultiIndex& a) {
  if (!a.pure())
    throw std::invalid_argument("derivative multi-index must be single-axis");
  return a.k[1] > 0 ? 1 : 0;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double GeneralizedNet::eval(const Point& p, double eps, const MultiIndex& a) const {
  if (a.total() > max_order)
    throw std::invalid_argument("derivative order exceeds max_order");
  if (mode == DerivativeMode::Analytic || a.total() == 0)
    return evaluator(p, eps, a);

  // 4th-order central differences with step eps/64, applied axis by axis.
  const int axis = single_axis(a);
  const int n = a.k[axis];
  const double h = eps / 64.0;
  MultiIndex lower = a;
  lower.k[axis] = n - 1;
  auto at = [&](double off) {
    Point q = p;
    q[axis] += off;
    return eval(q, eps, lower);
  };
  return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

// --- delta powers -----------------------------------------------------------

GeneralizedNet make_delta(int m, const Mollifier& phi, DomainBox dom) {
  if (m < 1) throw std::invalid_argument("make_delta: m must be >= 1");
  dom.validate();
  if (!dom.contains(Point{0.0, 0.0}))
    throw std::invalid_argument("make_delta: domain must contain 0");
  GeneralizedNet u;
  u.domain = dom;
  u.singular_x = {0.0};
  u.evaluator = [m, &phi](const Point& p, double eps, const MultiIndex& a) {
    const int k = a.k[0];
    if (a.k[1] != 0) throw std::invalid_argument("make_delta: 1D net");
    const double y = p[0] / eps;
    if (std::abs(y) >= 1.0) return 0.0;
    Jet j = phi.jet(y, k).pow(m);
    return std::pow(eps, -m - k) * j.deriv(k);
  };
  return u;
}

// --- piecewise smooth classical functions -----------------------------------

PiecewiseSmooth::PiecewiseSmooth(std::vector<double> breaks,
                                 std::vector<std::function<double(double)>> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breaks_.size() + 1)
    throw std::invalid_argument("PiecewiseSmooth: need breaks+1 pieces");
  if (!std::is_sorted(breaks_.begin(), breaks_.end()))
    throw std::invalid_argument("PiecewiseSmooth: breaks must be sorted");
}

PiecewiseSmooth PiecewiseSmooth::heaviside(double x0) {
  return PiecewiseSmooth({x0}, {[](double) { return 0.0; },
                                [](double) { return 1.0; }});
}

PiecewiseSmooth PiecewiseSmooth::abs_kink(double x0) {
  return PiecewiseSmooth({x0}, {[x0](double x) { return x0 - x; },
                                [x0](double x) { return x - x0; }});
}

PiecewiseSmooth PiecewiseSmooth::constant(double c) {
  return PiecewiseSmooth({}, {[c](double) { return c; }});
}

PiecewiseSmooth PiecewiseSmooth::smooth(std::function<double(double)> f) {
  return PiecewiseSmooth({}, {std::move(f)});
}

double PiecewiseSmooth::operator()(double x) const {
  const std::size_t i =
      std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin();
  return pieces_[i](x);
}

GeneralizedNet embed_classical(const PiecewiseSmooth& f, const Mollifier& phi,
                               DomainBox dom) {
  dom.validate();
  for (double b : f.breaks()) {
    const double edge = std::min(std::abs(b - dom.lo[0]), std::abs(b - dom.hi[0]));
    if (edge < 1e-12)
      throw std::invalid_argument(
          "embed_classical: singular point on domain boundary");
  }
  GeneralizedNet u;
  u.domain = dom;
  u.singular_x = f.breaks();
  // (f * phi_eps)^(k)(x) = eps^{-k} \int f(x - eps y) phi^(k)(y) dy.
  u.evaluator = [f, &phi](const Point& p, double eps, const MultiIndex& a) {
    const int k = a.k[0];
    if (a.k[1] != 0) throw std::invalid_argument("embed_classical: 1D net");
    const double x = p[0];
    std::vector<double> ybreaks;
    for (double b : f.breaks()) {
      const double yb = (x - b) / eps;
      if (yb > -1.0 && yb < 1.0) ybreaks.push_back(yb);
    }
    const double v = quad::integrate(
        [&](double y) { return f(x - eps * y) * phi.deriv(y, k); }, -1.0, 1.0,
        0.25, ybreaks);
    return v * std::pow(eps, -k);
  };
  return u;
}

GeneralizedNet embed_delta_derivative(int k0, double x0, const Mollifier& phi,
                                      DomainBox dom) {
  if (k0 < 0) throw std::invalid_argument("embed_delta_derivative: k >= 0");
  dom.validate();
  GeneralizedNet u;
  u.domain = dom;
  u.singular_x = {x0};
  u.evaluator = [k0, x0, &phi](const Point& p, double eps, const MultiIndex& a) {
    const int k = a.k[0] + k0;
    if (a.k[1] != 0) throw std::invalid_argument("embed_delta_derivative: 1D net");
    const double y = (p[0] - x0) / eps;
    if (std::abs(y) >= 1.0) return 0.0;
    return std::pow(eps, -1 - k) * phi.deriv(y, k);
  };
  return u;
}

GeneralizedNet make_smooth(std::function<Jet(double, int)> jet_rule,
                           DomainBox dom) {
  return make_scaled_smooth([](double) { return 1.0; }, std::move(jet_rule),
                            dom);
}

GeneralizedNet make_scaled_smooth(std::function<double(double)> eps_factor,
                                  std::function<Jet(double, int)> jet_rule,
                                  DomainBox dom) {
  dom.validate();
  GeneralizedNet u;
  u.domain = dom;
  u.evaluator = [ef = std::move(eps_factor), jr = std::move(jet_rule)](
                    const Point& p, double eps, const MultiIndex& a) {
    const int k = a.k[0];
    if (a.k[1] != 0) throw std::invalid_argument("make_smooth: 1D net");
    return ef(eps) * jr(p[0], k).deriv(k);
  };
  return u;
}

// --- algebra ----------------------------------------------------------------

namespace {

void require_same_domain(const GeneralizedNet& a, const GeneralizedNet& b) {
  if (a.domain.dim != b.domain.dim)
    throw std::invalid_argument("net algebra: domain dimension mismatch");
  for (int i = 0; i < a.domain.dim; ++i)
    if (a.domain.lo[i] != b.domain.lo[i] || a.domain.hi[i] != b.domain.hi[i])
      throw std::invalid_argument("net algebra: domain mismatch");
}

std::vector<double> merge_singular(const std::vector<double>& a,
                                   const std::vector<double>& b) {
  std::vector<double> s = a;
  s.insert(s.end(), b.begin(), b.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

GeneralizedNet net_add(const GeneralizedNet& a, const GeneralizedNet& b) {
  require_same_domain(a, b);
  GeneralizedNet r;
  r.domain = a.domain;
  r.max_order = std::min(a.max_order, b.max_order);
  r.mode = (a.mode == DerivativeMode::Analytic &&
            b.mode == DerivativeMode::Analytic)
               ? DerivativeMode::Analytic
               : DerivativeMode::FiniteDifference;
  r.singular_x = merge_singular(a.singular_x, b.singular_x);
  r.evaluator = [a, b](const Point& p, double eps, const MultiIndex& al) {
    return a.eval(p, eps, al) + b.eval(p, eps, al);
  };
  return r;
}

GeneralizedNet net_mul(const GeneralizedNet& a, const GeneralizedNet& b) {
  require_same_domain(a, b);
  GeneralizedNet r;
  r.domain = a.domain;
  r.max_order = std::min(a.max_order, b.max_order);
  r.mode = (a.mode == DerivativeMode::Analytic &&
            b.mode == DerivativeMode::Analytic)
               ? DerivativeMode::Analytic
               : DerivativeMode::FiniteDifference;
  r.singular_x = merge_singular(a.singular_x, b.singular_x);
  // Leibniz along the (single) derivative axis.
  r.evaluator = [a, b](const Point& p, double eps, const MultiIndex& al) {
    const int n = al.total();
    if (n == 0) return a.eval(p, eps, {}) * b.eval(p, eps, {});
    const int axis = single_axis(al);
    double s = 0.0;
    for (int j = 0; j <= n; ++j) {
      MultiIndex ja{}, jb{};
      ja.k[axis] = j;
      jb.k[axis] = n - j;
      s += binom(n, j) * a.eval(p, eps, ja) * b.eval(p, eps, jb);
    }
    return s;
  };
  return r;
}

GeneralizedNet net_pow(const GeneralizedNet& a, int p) {
  if (p < 1) throw std::invalid_argument("net_pow: p must be >= 1");
  GeneralizedNet r = a;
  r.evaluator = [a, p](const Point& pt, double eps, const MultiIndex& al) {
    const int n = al.total();
    if (n == 0) return std::pow(a.eval(pt, eps, {}), p);
    const int axis = single_axis(al);
    Jet j(n);
    double fact = 1.0;
    for (int k = 0; k <= n; ++k) {
      if (k >= 2) fact *= k;
      MultiIndex ka{};
      ka.k[axis] = k;
      j[k] = a.eval(pt, eps, ka) / fact;
    }
    return j.pow(p).deriv(n);
  };
  return r;
}

GeneralizedNet net_derive(const GeneralizedNet& a, const MultiIndex& alpha) {
  if (alpha.total() > a.max_order)
    throw std::invalid_argument("net_derive: order exceeds max_order");
  GeneralizedNet r = a;
  r.max_order = a.max_order - alpha.total();
  r.evaluator = [a, alpha](const Point& p, double eps, const MultiIndex& al) {
    MultiIndex m = al;
    m.k[0] += alpha.k[0];
    m.k[1] += alpha.k[1];
    return a.eval(p, eps, m);
  };
  return r;
}

GeneralizedNet net_scale_by(const GeneralizedNet& a, const AsymptoticScale& s,
                            double r0) {
  GeneralizedNet r = a;
  r.evaluator = [a, s, r0](const Point& p, double eps, const MultiIndex& al) {
    return s(r0, eps) * a.eval(p, eps, al);
  };
  return r;
}

GeneralizedNet restrict(const GeneralizedNet& u, const DomainBox& v) {
  v.validate();
  if (!u.domain.contains(v))
    throw std::invalid_argument("restrict: box not inside domain");
  GeneralizedNet r = u;
  r.domain = v;
  return r;
}

GeneralizedNet slice_t(const GeneralizedNet& u, double t) {
  if (u.domain.dim != 2)
    throw std::invalid_argument("slice_t: needs a space-time net");
  if (t < u.domain.lo[1] || t > u.domain.hi[1])
    throw std::invalid_argument("slice_t: t outside domain");
  GeneralizedNet r;
  r.domain = DomainBox(u.domain.lo[0], u.domain.hi[0]);
  r.max_order = u.max_order;
  r.mode = u.mode;
  r.singular_x = u.singular_x;
  r.evaluator = [u, t](const Point& p, double eps, const MultiIndex& a) {
    if (a.k[1] != 0)
      throw std::invalid_argument("slice_t: x-derivatives only");
    return u.eval(Point{p[0], t}, eps, a);
  };
  return r;
}

}  // namespace nets
}  // namespace asymptospec
