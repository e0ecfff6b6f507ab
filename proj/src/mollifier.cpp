#include "asymptospec/mollifier.hpp"

#include <algorithm>
#include <cmath>

#include "asymptospec/quadrature.hpp"

namespace asymptospec {
namespace nets {

namespace {
double raw_bump(double y) {
  const double t = 1.0 - y * y;
  if (t <= 0.0) return 0.0;
  const double a = 1.0 / t;
  if (a > 700.0) return 0.0;  // underflow guard near the support edge
  return std::exp(-a);
}
}  // namespace

Mollifier::Mollifier() {
  const double raw_mass =
      quad::integrate([](double y) { return raw_bump(y); }, -1.0, 1.0, 1.0 / 256);
  norm_ = 1.0 / raw_mass;

  // cumulative table on a fine uniform partition; cdf() finishes the last
  // partial panel with a local Gauss rule.
  const int n = 2048;
  cdf_edges_.resize(n + 1);
  cdf_cum_.resize(n + 1);
  cdf_cum_[0] = 0.0;
  for (int i = 0; i <= n; ++i) cdf_edges_[i] = -1.0 + 2.0 * i / n;
  for (int i = 1; i <= n; ++i)
    cdf_cum_[i] = cdf_cum_[i - 1] +
                  quad::panel([this](double y) { return value(y); },
                              cdf_edges_[i - 1], cdf_edges_[i]);
}

double Mollifier::value(double y) const { return norm_ * raw_bump(y); }

Jet Mollifier::jet(double y, int order) const {
  if (y <= -1.0 || y >= 1.0 || raw_bump(y) == 0.0)
    return Jet::constant(0.0, order);
  Jet yv = Jet::variable(y, order);
  Jet t = Jet::constant(1.0, order) - yv * yv;
  return norm_ * (-t.recip()).exp();
}

double Mollifier::deriv(double y, int k) const { return jet(y, k).deriv(k); }

double Mollifier::cdf(double y) const {
  if (y <= -1.0) return 0.0;
  if (y >= 1.0) return cdf_cum_.back();
  const auto it = std::upper_bound(cdf_edges_.begin(), cdf_edges_.end(), y);
  const std::size_t i = static_cast<std::size_t>(it - cdf_edges_.begin()) - 1;
  double c = cdf_cum_[i];
  if (y > cdf_edges_[i])
    c += quad::panel([this](double z) { return value(z); }, cdf_edges_[i], y);
  return c;
}

double Mollifier::integral_of_power(int m) const {
  return quad::integrate([this, m](double y) { return std::pow(value(y), m); },
                         -1.0, 1.0, 1.0 / 256);
}

const Mollifier& default_mollifier() {
  static const Mollifier phi;
  return phi;
}

}  // namespace nets
}  // namespace asymptospec
