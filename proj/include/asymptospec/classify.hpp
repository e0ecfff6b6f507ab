#pragma once

#include <vector>

#include "asymptospec/geometry.hpp"
#include "asymptospec/net.hpp"
#include "asymptospec/valuation.hpp"

namespace asymptospec {
namespace asymptotics {

// Family of admissible exponent sequences N(k).
struct RegularitySequenceFamily {
  enum class Kind { All, Bounded, Affine };
  Kind kind = Kind::Bounded;
  double a = 0.0, b = 0.0;  // affine envelope N(k) <= a + b*k

  static RegularitySequenceFamily all() { return {Kind::All}; }
  static RegularitySequenceFamily bounded() { return {Kind::Bounded}; }
  static RegularitySequenceFamily affine(double a, double b) {
    return {Kind::Affine, a, b};
  }

  // Envelope membership of a fitted exponent sequence (index = order k).
  bool contains(const std::vector<double>& N, double tol = 0.25,
                double n_cap = 64.0) const;

  // Closure under index translation and pointwise max, checked on k <= kmax.
  bool overstable(int kmax = 32) const;
};

struct ClassifyOptions {
  double n_cap = 64.0;   // moderateness cap on fitted exponents
  double m_cap = 16.0;   // negligibility: decay faster than eps^16
  int tail = 6;
  int base_n = 65;
};

struct ClassVerdict {
  bool moderate = false;
  bool negligible = false;
  bool g_infinity = false;
  bool g_regular = false;
  bool slow_scale = false;
  std::vector<double> exponent_per_l;  // fitted N(l) = max(0, -slope)
};

// Fitted seminorm exponents N(l) for l = 0..l_max on the ladder; entries are
// +infinity-free: exact-zero tails report 0 with `zero_tail` set.
struct SeminormExponents {
  std::vector<double> N;
  std::vector<bool> zero_tail;
};
SeminormExponents seminorm_exponents(const nets::GeneralizedNet& u,
                                     const DomainBox& K, int l_max,
                                     const EpsLadder& ladder,
                                     const ClassifyOptions& opt = {});

std::pair<bool, std::vector<double>> is_moderate(
    const nets::GeneralizedNet& u, const DomainBox& K, int l_max,
    const EpsLadder& ladder, const ClassifyOptions& opt = {});

bool is_negligible(const nets::GeneralizedNet& u, const DomainBox& K, int l_max,
                   const EpsLadder& ladder, const ClassifyOptions& opt = {});

ClassVerdict classify(const nets::GeneralizedNet& u, const DomainBox& K,
                      int l_max, const RegularitySequenceFamily& family,
                      const EpsLadder& ladder, const ClassifyOptions& opt = {});

}  // namespace asymptotics
}  // namespace asymptospec
