#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace asymptospec {

// Fixed-order Gauss-Legendre panel quadrature. The integrands here are smooth
// inside panels by construction (panels are split at mollifier supports and
// piecewise-function breakpoints), so a 16-point rule per panel is plenty.
namespace quad {

struct GLRule {
  std::vector<double> x, w;  // nodes/weights on [-1,1]
};

const GLRule& gl16();

inline double panel(const std::function<double(double)>& f, double a, double b,
                    const GLRule& r = gl16()) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(c + h * r.x[i]);
  return s * h;
}

// Integrate over [a,b] with panels of width at most `max_width`, additionally
// split at the given break locations.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double max_width, const std::vector<double>& breaks = {});

// Panel edges for `integrate`; exposed so samplers can reuse the splitting.
std::vector<double> panel_edges(double a, double b, double max_width,
                                const std::vector<double>& breaks);

}  // namespace quad
}  // namespace asymptospec
