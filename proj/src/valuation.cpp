#include "asymptospec/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asymptospec {
namespace asymptotics {

double theil_sen_slope(const std::vector<double>& x,
                       const std::vector<double>& y) {
  std::vector<double> slopes;
  slopes.reserve(x.size() * (x.size() - 1) / 2);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j] != x[i]) slopes.push_back((y[j] - y[i]) / (x[j] - x[i]));
  if (slopes.empty()) throw std::invalid_argument("theil_sen: no pairs");
  std::sort(slopes.begin(), slopes.end());
  const std::size_t n = slopes.size();
  return n % 2 ? slopes[n / 2] : 0.5 * (slopes[n / 2 - 1] + slopes[n / 2]);
}

ScaleFit fit_valuation(const std::vector<std::pair<double, double>>& samples,
                       int tail) {
  if (tail < 4) throw std::invalid_argument("fit_valuation: tail must be >= 4");
  const std::size_t n = samples.size();
  if (n < static_cast<std::size_t>(tail))
    throw std::invalid_argument("fit_valuation: insufficient data");
  std::vector<double> le, ls;
  for (std::size_t i = n - tail; i < n; ++i) {
    const auto& [eps, s] = samples[i];
    if (!(eps > 0.0) || !(s > 0.0) || !std::isfinite(s))
      throw std::invalid_argument("fit_valuation: samples must be positive finite");
    le.push_back(std::log(eps));
    ls.push_back(std::log(s));
  }

  ScaleFit fit;
  fit.slope = theil_sen_slope(le, ls);
  // Median-based intercept, then max deviation on the tail.
  std::vector<double> ic(le.size());
  for (std::size_t i = 0; i < le.size(); ++i) ic[i] = ls[i] - fit.slope * le[i];
  std::sort(ic.begin(), ic.end());
  fit.intercept = ic.size() % 2 ? ic[ic.size() / 2]
                                : 0.5 * (ic[ic.size() / 2 - 1] + ic[ic.size() / 2]);
  for (std::size_t i = 0; i < le.size(); ++i)
    fit.residual = std::max(
        fit.residual, std::abs(ls[i] - (fit.intercept + fit.slope * le[i])));

  // Consecutive-pair slopes; monotone drift beyond 0.05 marks a logarithmic
  // correction, larger non-monotone scatter is irregular.
  std::vector<double> local;
  for (std::size_t i = 0; i + 1 < le.size(); ++i)
    local.push_back((ls[i + 1] - ls[i]) / (le[i + 1] - le[i]));
  const double drift = local.back() - local.front();
  fit.drift = drift;
  bool monotone_up = true, monotone_dn = true;
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    if (local[i + 1] < local[i] - 1e-12) monotone_up = false;
    if (local[i + 1] > local[i] + 1e-12) monotone_dn = false;
  }
  if ((monotone_up || monotone_dn) && std::abs(drift) > 0.05)
    fit.verdict = FitVerdict::LogCorrected;
  else if (fit.residual > 0.1)
    fit.verdict = FitVerdict::Irregular;
  else
    fit.verdict = FitVerdict::PowerLike;
  return fit;
}

}  // namespace asymptotics
}  // namespace asymptospec
