#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace asymptospec {

// Truncated Taylor series (jet) arithmetic. Coefficient k stores f^(k)/k!.
// This is what every analytic derivative in the library is built from:
// compositions like exp(-1/(1-y^2)) or (u0+1)^(e^t) propagate jets instead
// of symbolic differentiation.
class Jet {
 public:
  explicit Jet(int order) : c_(static_cast<std::size_t>(order) + 1, 0.0) {
    if (order < 0) throw std::invalid_argument("Jet: negative order");
  }

  static Jet constant(double v, int order) {
    Jet j(order);
    j.c_[0] = v;
    return j;
  }

  static Jet variable(double x, int order) {
    Jet j(order);
    j.c_[0] = x;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](std::size_t k) const { return c_[k]; }
  double& operator[](std::size_t k) { return c_[k]; }
  double value() const { return c_[0]; }

  // k-th derivative value (coefficient times k!).
  double deriv(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return c_[static_cast<std::size_t>(k)] * f;
  }

  Jet operator-() const {
    Jet r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
    return r;
  }
  friend Jet operator*(const Jet& a, double s) {
    Jet r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend Jet operator*(double s, const Jet& a) { return a * s; }
  friend Jet operator+(const Jet& a, double s) {
    Jet r = a;
    r.c_[0] += s;
    return r;
  }
  friend Jet operator+(double s, const Jet& a) { return a + s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  Jet recip() const {
    if (c_[0] == 0.0) throw std::domain_error("Jet: reciprocal of zero");
    Jet g(order());
    g.c_[0] = 1.0 / c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
      double s = 0.0;
      for (std::size_t j = 1; j <= k; ++j) s += c_[j] * g.c_[k - j];
      g.c_[k] = -s / c_[0];
    }
    return g;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.recip(); }

  // g = exp(f), via g' = f' g.
  Jet exp() const {
    Jet g(order());
    g.c_[0] = std::exp(c_[0]);
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j <= k; ++j)
        s += (j + 1) * c_[j + 1] * g.c_[k - j];
      g.c_[k + 1] = s / static_cast<double>(k + 1);
    }
    return g;
  }

  Jet log() const {
    if (c_[0] <= 0.0) throw std::domain_error("Jet: log of non-positive value");
    Jet g(order());
    g.c_[0] = std::log(c_[0]);
    if (order() == 0) return g;
    Jet d(order() - 1);  // f'
    for (int k = 0; k < order(); ++k) d[k] = (k + 1) * c_[k + 1];
    Jet f_lo(order() - 1);
    for (int k = 0; k <= order() - 1; ++k) f_lo[k] = c_[k];
    Jet h = d / f_lo;  // f'/f
    for (int k = 1; k <= order(); ++k) g[k] = h[k - 1] / k;
    return g;
  }

  Jet pow(double p) const { return (log() * p).exp(); }

  Jet pow(int p) const {
    if (p < 0) return recip().pow(-p);
    Jet r = Jet::constant(1.0, order());
    Jet base = *this;
    int e = p;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  Jet sqrt() const {
    if (c_[0] <= 0.0) throw std::domain_error("Jet: sqrt of non-positive value");
    return pow(0.5);
  }

  Jet sin() const { return trig(true); }
  Jet cos() const { return trig(false); }

 private:
  Jet trig(bool want_sin) const {
    Jet s(order()), c(order());
    s[0] = std::sin(c_[0]);
    c[0] = std::cos(c_[0]);
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
      double as = 0.0, ac = 0.0;
      for (std::size_t j = 0; j <= k; ++j) {
        as += (j + 1) * c_[j + 1] * c[k - j];
        ac -= (j + 1) * c_[j + 1] * s[k - j];
      }
      s[k + 1] = as / static_cast<double>(k + 1);
      c[k + 1] = ac / static_cast<double>(k + 1);
    }
    return want_sin ? s : c;
  }

  std::vector<double> c_;
};

}  // namespace asymptospec
