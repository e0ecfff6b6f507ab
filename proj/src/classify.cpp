#include "asymptospec/classify.hpp"

#include <algorithm>
#include <cmath>

#include "asymptospec/sampling.hpp"

namespace asymptospec {
namespace asymptotics {

bool RegularitySequenceFamily::contains(const std::vector<double>& N,
                                        double tol, double n_cap) const {
  for (std::size_t k = 0; k < N.size(); ++k) {
    switch (kind) {
      case Kind::All:
        break;
      case Kind::Bounded:
        if (N[k] > n_cap + tol) return false;
        break;
      case Kind::Affine:
        if (N[k] > a + b * static_cast<double>(k) + tol) return false;
        break;
    }
  }
  return true;
}

bool RegularitySequenceFamily::overstable(int kmax) const {
  if (kind == Kind::All || kind == Kind::Bounded) return true;
  // Affine family {N : N(k) <= a' + b k}: a translated member N(k+j) has the
  // same growth rate b, and a pointwise max of two members keeps it too.
  for (int j = 1; j <= 4; ++j)
    for (int k = 0; k <= kmax; ++k) {
      const double translated = a + b * (k + j);
      if (translated > (a + b * j) + b * k + 1e-12) return false;
    }
  return true;
}

SeminormExponents seminorm_exponents(const nets::GeneralizedNet& u,
                                     const DomainBox& K, int l_max,
                                     const EpsLadder& ladder,
                                     const ClassifyOptions& opt) {
  SeminormExponents out;
  for (int l = 0; l <= l_max; ++l) {
    std::vector<std::pair<double, double>> samples;
    int zeros_in_tail = 0;
    const std::size_t n = ladder.size();
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
      vals[i] = nets::seminorm(u, K, l, ladder.values[i], opt.base_n);
    double min_pos = 0.0;
    for (double v : vals)
      if (v > 0.0) min_pos = (min_pos == 0.0) ? v : std::min(min_pos, v);
    bool zero_tail = true;
    for (std::size_t i = n - opt.tail; i < n; ++i)
      if (vals[i] != 0.0) zero_tail = false; else ++zeros_in_tail;
    if (zero_tail || min_pos == 0.0) {
      out.N.push_back(0.0);
      out.zero_tail.push_back(true);
      continue;
    }
    for (std::size_t i = 0; i < n; ++i)
      samples.emplace_back(ladder.values[i],
                           vals[i] > 0.0 ? vals[i] : min_pos * 1e-6);
    (void)zeros_in_tail;
    const ScaleFit fit = fit_valuation(samples, opt.tail);
    out.N.push_back(std::max(0.0, -fit.slope));
    out.zero_tail.push_back(false);
  }
  return out;
}

std::pair<bool, std::vector<double>> is_moderate(const nets::GeneralizedNet& u,
                                                 const DomainBox& K, int l_max,
                                                 const EpsLadder& ladder,
                                                 const ClassifyOptions& opt) {
  const auto e = seminorm_exponents(u, K, l_max, ladder, opt);
  bool ok = true;
  std::vector<double> caps;
  for (double n : e.N) {
    if (n > opt.n_cap) ok = false;
    caps.push_back(std::ceil(n - 1e-9));
  }
  return {ok, caps};
}

bool is_negligible(const nets::GeneralizedNet& u, const DomainBox& K, int l_max,
                   const EpsLadder& ladder, const ClassifyOptions& opt) {
  for (int l = 0; l <= l_max; ++l) {
    std::vector<std::pair<double, double>> samples;
    bool zero_tail = true;
    const std::size_t n = ladder.size();
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
      vals[i] = nets::seminorm(u, K, l, ladder.values[i], opt.base_n);
    for (std::size_t i = n - opt.tail; i < n; ++i)
      if (vals[i] != 0.0) zero_tail = false;
    if (zero_tail) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (vals[i] == 0.0) vals[i] = 1e-300;
      samples.emplace_back(ladder.values[i], vals[i]);
    }
    const ScaleFit fit = fit_valuation(samples, opt.tail);
    if (fit.slope < opt.m_cap) return false;
  }
  return true;
}

ClassVerdict classify(const nets::GeneralizedNet& u, const DomainBox& K,
                      int l_max, const RegularitySequenceFamily& family,
                      const EpsLadder& ladder, const ClassifyOptions& opt) {
  ClassVerdict v;
  const auto e = seminorm_exponents(u, K, l_max, ladder, opt);
  v.exponent_per_l = e.N;

  bool all_zero = true;
  for (bool z : e.zero_tail) all_zero = all_zero && z;

  v.moderate = true;
  for (double n : e.N)
    if (n > opt.n_cap) v.moderate = false;

  v.negligible = all_zero || is_negligible(u, K, l_max, ladder, opt);
  v.slow_scale = true;
  for (double n : e.N)
    if (n > 0.1) v.slow_scale = false;

  const double nmax = *std::max_element(e.N.begin(), e.N.end());
  const double nmin = *std::min_element(e.N.begin(), e.N.end());
  v.g_infinity = v.moderate && (nmax - nmin <= 0.25);
  v.g_regular = v.moderate && family.contains(e.N, 0.25, opt.n_cap);
  return v;
}

}  // namespace asymptotics
}  // namespace asymptospec
