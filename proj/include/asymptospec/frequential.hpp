#pragma once

#include <functional>
#include <vector>

#include "asymptospec/classify.hpp"
#include "asymptospec/geometry.hpp"
#include "asymptospec/net.hpp"

namespace asymptospec {
namespace frequential {

struct FrequentialOptions {
  double window_width = 0.25;  // full width of the smooth window
  double xi_max = 0.0;         // 0 -> auto: 2 / eps_min
  double cone_tail = 0.125;    // cone starts at cone_tail * xi_max
  int q_max = 8;
  int tail = 6;
  double envelope_tol = 0.5;   // exponent slack against the family envelope
  double n_cap = 64.0;
};

// Windowed Fourier magnitudes of (bump * u_eps) per ladder rung, on a signed
// frequency grid truncated at xi_max.
struct WindowedSpectrum {
  double x0 = 0.0;
  double window_width = 0.0;
  double xi_max = 0.0;
  EpsLadder ladder;
  std::vector<double> xi;                       // nonnegative, ascending
  std::vector<std::vector<double>> mag_pos;     // [rung][xi index]
  std::vector<std::vector<double>> mag_neg;
  std::vector<double> parseval_err;             // relative, per rung
};

WindowedSpectrum windowed_fourier(const nets::GeneralizedNet& u, double x0,
                                  const EpsLadder& ladder,
                                  const FrequentialOptions& opt = {});

struct ConeReport {
  int direction = +1;
  std::vector<double> N;  // fitted exponents of s_q, q = 0..q_max
  enum class Verdict { Regular, Singular, Unknown } verdict = Verdict::Unknown;
};

ConeReport cone_decay_classify(const WindowedSpectrum& spec, int direction,
                               const asymptotics::RegularitySequenceFamily& fam,
                               const FrequentialOptions& opt = {});

struct WaveFrontEstimate {
  struct Entry {
    double x = 0.0;
    int direction = +1;
    ConeReport report;
  };
  std::vector<Entry> entries;              // every (x, direction) pair
  std::vector<Entry> singular;             // flagged subset
  std::vector<double> base_projection;     // x with some singular direction

  bool flagged(double x, int direction) const;
};

WaveFrontEstimate wavefront_estimate(
    const nets::GeneralizedNet& u, const std::vector<double>& grid,
    const EpsLadder& ladder, const asymptotics::RegularitySequenceFamily& fam,
    const FrequentialOptions& opt = {});

// Factorial-bound microlocal test: cutoffs chi_k (iterated box convolutions,
// mollified) with certified derivative growth, cone suprema of
// |xi|^k |FT(chi_k u_eps)|, and the two-part criterion: fitted exponents
// inside the family envelope and k-th roots of the prefactors dominated by a
// single constant times L_k.
struct RLVerdict {
  bool regular = false;
  std::vector<double> exponent_per_k;
  std::vector<double> prefactor_root_per_k;  // (prefactor_k)^{1/k}
  double fitted_c = 0.0;
};

RLVerdict rRL_microlocal_test(const nets::GeneralizedNet& u, double x0,
                              int direction,
                              const std::function<double(int)>& L, int k_max,
                              const asymptotics::RegularitySequenceFamily& fam,
                              const EpsLadder& ladder,
                              const FrequentialOptions& opt = {});

}  // namespace frequential
}  // namespace asymptospec
