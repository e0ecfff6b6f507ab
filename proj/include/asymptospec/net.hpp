#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "asymptospec/geometry.hpp"
#include "asymptospec/jet.hpp"
#include "asymptospec/mollifier.hpp"
#include "asymptospec/scale.hpp"

namespace asymptospec {
namespace nets {

enum class DerivativeMode { Analytic, FiniteDifference };

// One representative (u_eps)_eps of a generalized function. The evaluator is
// a pure rule (point, eps, derivative multi-index) -> value; immutable after
// construction and safe to share across threads.
class GeneralizedNet {
 public:
  using Evaluator =
      std::function<double(const Point&, double, const MultiIndex&)>;

  DomainBox domain;
  int max_order = 8;
  DerivativeMode mode = DerivativeMode::Analytic;
  Evaluator evaluator;
  // x-locations of eps-scale features; samplers refine their grids here.
  std::vector<double> singular_x;

  double eval(const Point& p, double eps, const MultiIndex& a = {}) const;
  double eval(double x, double eps, int dx_order = 0) const {
    return eval(Point{x, 0.0}, eps, MultiIndex::dx(dx_order));
  }
};

// --- constructors -----------------------------------------------------------

// delta^m: (1/eps)^m phi^m(x/eps) in dimension 1.
GeneralizedNet make_delta(int m, const Mollifier& phi,
                          DomainBox dom = DomainBox(-2.0, 2.0));

// Piecewise smooth classical function: finitely many breakpoints, smooth
// pieces between them (pieces_.size() == breaks_.size() + 1).
class PiecewiseSmooth {
 public:
  PiecewiseSmooth(std::vector<double> breaks,
                  std::vector<std::function<double(double)>> pieces);

  static PiecewiseSmooth heaviside(double x0 = 0.0);
  static PiecewiseSmooth abs_kink(double x0 = 0.0);
  static PiecewiseSmooth constant(double c);
  static PiecewiseSmooth smooth(std::function<double(double)> f);

  double operator()(double x) const;
  const std::vector<double>& breaks() const { return breaks_; }

 private:
  std::vector<double> breaks_;
  std::vector<std::function<double(double)>> pieces_;
};

// iota(f) = [f * phi_eps]
GeneralizedNet embed_classical(const PiecewiseSmooth& f, const Mollifier& phi,
                               DomainBox dom = DomainBox(-2.0, 2.0));

// iota(d^k delta(. - x0)) = [phi_eps^(k)(. - x0)]
GeneralizedNet embed_delta_derivative(int k, double x0, const Mollifier& phi,
                                      DomainBox dom = DomainBox(-2.0, 2.0));

// Smooth classical function with analytic derivatives supplied as a jet rule
// (used for exact factors like sin, polynomials).
GeneralizedNet make_smooth(std::function<Jet(double, int)> jet_rule,
                           DomainBox dom = DomainBox(-2.0, 2.0));

// Net whose rungs are s(eps) * f(x) for a smooth f given by a jet rule
// (e.g. eps^{-1} f, eps^{-1}|ln eps| f).
GeneralizedNet make_scaled_smooth(std::function<double(double)> eps_factor,
                                  std::function<Jet(double, int)> jet_rule,
                                  DomainBox dom = DomainBox(-2.0, 2.0));

// --- algebra ----------------------------------------------------------------

GeneralizedNet net_add(const GeneralizedNet& a, const GeneralizedNet& b);
GeneralizedNet net_mul(const GeneralizedNet& a, const GeneralizedNet& b);
GeneralizedNet net_pow(const GeneralizedNet& a, int p);
GeneralizedNet net_derive(const GeneralizedNet& a, const MultiIndex& alpha);
GeneralizedNet net_scale_by(const GeneralizedNet& a, const AsymptoticScale& s,
                            double r);
GeneralizedNet restrict(const GeneralizedNet& u, const DomainBox& v);

// Fix t in a space-time net, yielding a 1D net in x.
GeneralizedNet slice_t(const GeneralizedNet& u, double t);

}  // namespace nets
}  // namespace asymptospec
