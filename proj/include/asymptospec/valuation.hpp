#pragma once

#include <utility>
#include <vector>

namespace asymptospec {
namespace asymptotics {

enum class FitVerdict { PowerLike, LogCorrected, Irregular };

// Result of fitting s_eps ~ C * eps^b on the ladder tail.
struct ScaleFit {
  double slope = 0.0;      // b
  double intercept = 0.0;  // log C
  double residual = 0.0;   // max |log s - (intercept + slope*log eps)| on tail
  // Change of the consecutive-pair slope across the tail; positive drift means
  // the sequence carries a slowly growing factor (e.g. |ln eps|) on top of the
  // fitted power.
  double drift = 0.0;
  FitVerdict verdict = FitVerdict::PowerLike;
};

// Theil-Sen fit of (log eps, log s) over the last `tail` samples.
// Requires at least 4 usable tail samples, all s finite and positive.
ScaleFit fit_valuation(const std::vector<std::pair<double, double>>& samples,
                       int tail = 6);

double theil_sen_slope(const std::vector<double>& x,
                       const std::vector<double>& y);

}  // namespace asymptotics
}  // namespace asymptospec
