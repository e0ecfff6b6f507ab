#pragma once

#include <functional>
#include <vector>

#include "asymptospec/geometry.hpp"
#include "asymptospec/mollifier.hpp"

namespace asymptospec {
namespace local_spectrum {

// Convergence target: C^p sup-norms or weak D' pairings against a finite
// family of compactly supported test functions.
struct TargetTopology {
  enum class Kind { Cp, Dprime };
  Kind kind = Kind::Cp;
  int p = 0;

  static TargetTopology C(int p) {
    if (p < 0) throw std::invalid_argument("TargetTopology: p >= 0");
    return {Kind::Cp, p};
  }
  static TargetTopology Dprime() { return {Kind::Dprime, 0}; }
};

struct TestFunction {
  std::function<double(double)> f;
  double lo, hi;  // support
};

// Nine pairings per neighborhood [x0-eta, x0+eta]: centered/offset bumps at
// two widths plus first/second moment weights, so both mass and moment
// divergences register.
std::vector<TestFunction> dprime_family(double x0, double eta,
                                        const nets::Mollifier& phi);

}  // namespace local_spectrum
}  // namespace asymptospec
