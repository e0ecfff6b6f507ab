#include "asymptospec/quadrature.hpp"

#include <stdexcept>

namespace asymptospec {
namespace quad {

const GLRule& gl16() {
  static const GLRule r = [] {
    GLRule g;
    // 16-point Gauss-Legendre abscissae/weights (positive half, mirrored).
    const double x[8] = {0.0950125098376374, 0.2816035507792589,
                         0.4580167776572274, 0.6178762444026438,
                         0.7554044083550030, 0.8656312023878318,
                         0.9445750230732326, 0.9894009349916499};
    const double w[8] = {0.1894506104550685, 0.1826034150449236,
                         0.1691565193950025, 0.1495959888165767,
                         0.1246289712555339, 0.0951585116824928,
                         0.0622535239386479, 0.0271524594117541};
    for (int i = 7; i >= 0; --i) {
      g.x.push_back(-x[i]);
      g.w.push_back(w[i]);
    }
    for (int i = 0; i < 8; ++i) {
      g.x.push_back(x[i]);
      g.w.push_back(w[i]);
    }
    return g;
  }();
  return r;
}

std::vector<double> panel_edges(double a, double b, double max_width,
                                const std::vector<double>& breaks) {
  if (!(a < b)) throw std::invalid_argument("quad: empty interval");
  if (!(max_width > 0.0)) throw std::invalid_argument("quad: bad panel width");
  std::vector<double> edges{a, b};
  for (double s : breaks)
    if (s > a && s < b) edges.push_back(s);
  std::sort(edges.begin(), edges.end());
  std::vector<double> out;
  out.push_back(edges.front());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    const int n = std::max(1, (int)std::ceil((hi - lo) / max_width));
    for (int j = 1; j <= n; ++j) out.push_back(lo + (hi - lo) * j / n);
  }
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double max_width, const std::vector<double>& breaks) {
  const auto edges = panel_edges(a, b, max_width, breaks);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    s += panel(f, edges[i], edges[i + 1]);
  return s;
}

}  // namespace quad
}  // namespace asymptospec
