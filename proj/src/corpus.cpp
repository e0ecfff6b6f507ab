#include "asymptospec/corpus.hpp"

#include <cmath>

namespace asymptospec {
namespace corpus {

namespace {
const DomainBox kDom(-2.0, 2.0);
}

nets::GeneralizedNet heaviside_net(double x0) {
  const nets::Mollifier& phi = nets::default_mollifier();
  nets::GeneralizedNet u;
  u.domain = kDom;
  u.singular_x = {x0};
  u.evaluator = [x0, &phi](const Point& p, double eps, const MultiIndex& a) {
    if (a.k[1] != 0) throw std::invalid_argument("heaviside_net: 1D net");
    const int k = a.k[0];
    const double y = (p[0] - x0) / eps;
    if (k == 0) return phi.cdf(y);
    if (std::abs(y) >= 1.0) return 0.0;
    return std::pow(eps, -k) * phi.deriv(y, k - 1);
  };
  return u;
}

nets::GeneralizedNet smooth_net(double freq) {
  return nets::make_smooth(
      [freq](double x, int order) {
        return (Jet::variable(x, order) * freq).sin() + 2.0;
      },
      kDom);
}

nets::GeneralizedNet scaled_smooth_net(double r, double freq) {
  return nets::make_scaled_smooth(
      [r](double eps) { return std::pow(eps, -r); },
      [freq](double x, int order) {
        return (Jet::variable(x, order) * freq).cos() + 2.0;
      },
      kDom);
}

nets::GeneralizedNet random_net(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 6 : 4);
  std::uniform_int_distribution<int> small(1, 3);
  std::uniform_int_distribution<int> pos(-3, 3);
  const nets::Mollifier& phi = nets::default_mollifier();
  switch (kind(rng)) {
    case 0:
      return nets::make_delta(small(rng), phi, kDom);
    case 1:
      return nets::embed_delta_derivative(small(rng) - 1, 0.25 * pos(rng), phi,
                                          kDom);
    case 2:
      return heaviside_net(0.25 * pos(rng));
    case 3:
      return smooth_net(0.5 * small(rng));
    case 4:
      return scaled_smooth_net(0.5 * small(rng), 0.5 * small(rng));
    case 5:
      return nets::net_add(random_net(rng, depth - 1), random_net(rng, depth - 1));
    default:
      return nets::net_mul(random_net(rng, depth - 1), random_net(rng, depth - 1));
  }
}

std::vector<nets::GeneralizedNet> make_corpus(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<nets::GeneralizedNet> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_net(rng));
  return out;
}

}  // namespace corpus
}  // namespace asymptospec
