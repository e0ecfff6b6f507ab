#pragma once

#include <vector>

#include "asymptospec/jet.hpp"

namespace asymptospec {
namespace nets {

// Smooth nonnegative bump supported on [-1,1] with unit integral:
// the normalized exp(-1/(1-y^2)). Provides values, jets (for analytic
// derivatives of mollified nets) and the cumulative integral.
class Mollifier {
 public:
  Mollifier();

  double value(double y) const;
  double deriv(double y, int k) const;
  Jet jet(double y, int order) const;

  // \int_{-1}^{y} profile.
  double cdf(double y) const;

  double max_value() const { return norm_ * kExpM1; }
  double integral_of_power(int m) const;  // \int profile^m

 private:
  static constexpr double kExpM1 = 0.36787944117144233;  // e^{-1}
  double norm_ = 1.0;
  // cdf panel table: cdf_edges_[i] -> cumulative integral up to that edge
  std::vector<double> cdf_edges_, cdf_cum_;
};

const Mollifier& default_mollifier();

}  // namespace nets
}  // namespace asymptospec
