#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace asymptospec {

// Points live in at most two dimensions: x, or (x, t) for space-time nets.
using Point = std::array<double, 2>;

// Derivative multi-index. Only single-axis derivatives are supported by the
// analytic evaluators (every sup-norm and pairing in the library needs pure
// partials only); mixed orders are rejected at evaluation time.
struct MultiIndex {
  int k[2] = {0, 0};

  int total() const { return k[0] + k[1]; }
  bool pure() const { return k[0] == 0 || k[1] == 0; }

  static MultiIndex dx(int n) { return MultiIndex{{n, 0}}; }
  static MultiIndex dt(int n) { return MultiIndex{{0, n}}; }
};

struct DomainBox {
  int dim = 1;
  std::array<double, 2> lo{-1.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};

  DomainBox() = default;
  DomainBox(double a, double b) : dim(1), lo{a, 0.0}, hi{b, 1.0} { validate(); }
  DomainBox(double ax, double bx, double at, double bt)
      : dim(2), lo{ax, at}, hi{bx, bt} {
    validate();
  }

  void validate() const {
    if (dim != 1 && dim != 2)
      throw std::invalid_argument("DomainBox: dim must be 1 or 2");
    for (int i = 0; i < dim; ++i)
      if (!(lo[i] < hi[i]))
        throw std::invalid_argument("DomainBox: lo must be < hi on each axis");
  }

  bool contains(const Point& p, double slack = 0.0) const {
    for (int i = 0; i < dim; ++i)
      if (p[i] < lo[i] - slack || p[i] > hi[i] + slack) return false;
    return true;
  }

  bool contains(const DomainBox& v, double slack = 1e-12) const {
    if (v.dim != dim) return false;
    for (int i = 0; i < dim; ++i)
      if (v.lo[i] < lo[i] - slack || v.hi[i] > hi[i] + slack) return false;
    return true;
  }
};

// Finite strictly decreasing geometric sequence of regularization parameters.
struct EpsLadder {
  std::vector<double> values;

  static EpsLadder geometric(double eps0, double q, int count) {
    if (!(eps0 > 0.0 && eps0 <= 1.0))
      throw std::invalid_argument("EpsLadder: eps0 must lie in (0,1]");
    if (!(q > 0.0 && q < 1.0))
      throw std::invalid_argument("EpsLadder: ratio must lie in (0,1)");
    if (count < 6) throw std::invalid_argument("EpsLadder: need at least 6 rungs");
    EpsLadder l;
    l.values.resize(count);
    double e = eps0;
    for (int i = 0; i < count; ++i, e *= q) l.values[i] = e;
    return l;
  }

  // eps0 = 2^-4, ratio 1/2, 13 rungs down to 2^-16.
  static EpsLadder standard() { return geometric(std::pow(2.0, -4), 0.5, 13); }

  std::size_t size() const { return values.size(); }
  double front() const { return values.front(); }
  double back() const { return values.back(); }
};

}  // namespace asymptospec
