#include "asymptospec/topology.hpp"

namespace asymptospec {
namespace local_spectrum {

namespace {

TestFunction bump_at(double c, double w, const nets::Mollifier& phi,
                     int moment, double x0) {
  TestFunction t;
  t.lo = c - w;
  t.hi = c + w;
  t.f = [c, w, moment, x0, &phi](double x) {
    double v = phi.value((x - c) / w);
    for (int i = 0; i < moment; ++i) v *= (x - x0);
    return v;
  };
  return t;
}

}  // namespace

std::vector<TestFunction> dprime_family(double x0, double eta,
                                        const nets::Mollifier& phi) {
  if (!(eta > 0.0)) throw std::invalid_argument("dprime_family: eta > 0");
  const double w2 = eta / 2.0, w4 = eta / 4.0;
  std::vector<TestFunction> fam;
  fam.push_back(bump_at(x0, w2, phi, 0, x0));
  fam.push_back(bump_at(x0 - eta / 2.0, w2, phi, 0, x0));
  fam.push_back(bump_at(x0 + eta / 2.0, w2, phi, 0, x0));
  fam.push_back(bump_at(x0, w4, phi, 0, x0));
  fam.push_back(bump_at(x0 - eta / 2.0, w4, phi, 0, x0));
  fam.push_back(bump_at(x0 + eta / 2.0, w4, phi, 0, x0));
  fam.push_back(bump_at(x0, w2, phi, 1, x0));  // first moment
  fam.push_back(bump_at(x0, w2, phi, 2, x0));  // second moment
  fam.push_back(bump_at(x0, w4, phi, 1, x0));
  return fam;
}

}  // namespace local_spectrum
}  // namespace asymptospec
