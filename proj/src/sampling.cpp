#include "asymptospec/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asymptospec {
namespace nets {

namespace {

void add_cluster(std::vector<double>& g, double lo, double hi, double center,
                 double eps) {
  const double h = eps / 8.0;
  for (int j = -32; j <= 32; ++j) {
    const double x = center + j * h;
    if (x >= lo && x <= hi) g.push_back(x);
  }
}

void finalize(std::vector<double>& g, double tol) {
  std::sort(g.begin(), g.end());
  std::vector<double> out;
  for (double x : g)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  g.swap(out);
}

}  // namespace

std::vector<double> sample_grid(double lo, double hi, double eps,
                                const std::vector<double>& singular,
                                int base_n) {
  if (!(lo < hi)) throw std::invalid_argument("sample_grid: empty interval");
  std::vector<double> g;
  g.reserve(base_n + 65 * singular.size());
  for (int i = 0; i < base_n; ++i)
    g.push_back(lo + (hi - lo) * i / (base_n - 1));
  for (double s : singular)
    if (s > lo - 4 * eps && s < hi + 4 * eps) add_cluster(g, lo, hi, s, eps);
  finalize(g, eps / 64.0);
  return g;
}

std::vector<double> union_grid(double lo, double hi,
                               const std::vector<double>& ladder,
                               const std::vector<double>& singular,
                               int base_n) {
  std::vector<double> g;
  for (int i = 0; i < base_n; ++i)
    g.push_back(lo + (hi - lo) * i / (base_n - 1));
  double eps_min = 1.0;
  for (double eps : ladder) {
    eps_min = std::min(eps_min, eps);
    for (double s : singular)
      if (s > lo - 4 * eps && s < hi + 4 * eps) add_cluster(g, lo, hi, s, eps);
  }
  finalize(g, eps_min / 64.0);
  return g;
}

double seminorm(const GeneralizedNet& u, const DomainBox& K, int l, double eps,
                int base_n) {
  if (l > u.max_order) throw std::invalid_argument("seminorm: l > max_order");
  if (!u.domain.contains(K))
    throw std::invalid_argument("seminorm: K outside domain");
  const auto gx = sample_grid(K.lo[0], K.hi[0], eps, u.singular_x, base_n);
  double m = 0.0;
  if (K.dim == 1) {
    for (double x : gx)
      for (int k = 0; k <= l; ++k)
        m = std::max(m, std::abs(u.eval(x, eps, k)));
    return m;
  }
  const int nt = 33;
  for (double x : gx)
    for (int it = 0; it < nt; ++it) {
      const double t = K.lo[1] + (K.hi[1] - K.lo[1]) * it / (nt - 1);
      for (int k = 0; k <= l; ++k) {
        m = std::max(m, std::abs(u.eval(Point{x, t}, eps, MultiIndex::dx(k))));
        if (k >= 1)
          m = std::max(m, std::abs(u.eval(Point{x, t}, eps, MultiIndex::dt(k))));
      }
    }
  return m;
}

}  // namespace nets
}  // namespace asymptospec
