#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace asymptospec {
namespace nets {

// Asymptotic scale a(r): positive nets with a(0)=1, submultiplicative in r
// and vanishing along the ladder for r>0.
struct AsymptoticScale {
  std::string name;
  std::function<double(double r, double eps)> rule;

  double operator()(double r, double eps) const { return rule(r, eps); }

  static AsymptoticScale power() {
    return {"power", [](double r, double eps) { return std::pow(eps, r); }};
  }

  // a(r)(eps) = exp(-r * eps^{-1/(2*sigma-1)})
  static AsymptoticScale gevrey(double sigma) {
    if (!(sigma > 0.5))
      throw std::invalid_argument("gevrey scale: sigma must exceed 1/2");
    const double e = -1.0 / (2.0 * sigma - 1.0);
    return {"gevrey", [e](double r, double eps) {
              return std::exp(-r * std::pow(eps, e));
            }};
  }
};

}  // namespace nets
}  // namespace asymptospec
