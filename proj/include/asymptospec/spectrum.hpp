#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asymptospec/convergence.hpp"

namespace asymptospec {
namespace local_spectrum {

struct SpectrumPoint {
  double x = 0.0;
  CriticalResult critical;
  // Sampled direct verdicts over the r-grid (same indexing as r_samples).
  std::vector<ConvStatus> sampled;

  bool in_singular_support() const {
    return critical.kind != FiberKind::Empty;
  }
  // Fiber upper endpoint as an interval description, e.g. "[0,1.000)".
  std::string fiber_string() const;
};

struct SpectrumResult {
  std::vector<double> r_samples;
  std::vector<SpectrumPoint> points;
  std::vector<double> singular_support;  // points with nonempty fiber

  std::optional<double> sup_R() const;  // max finite R over the support
};

std::vector<double> default_r_samples();  // {0, 0.5, ..., 4}

// Points of `grid` whose fiber is nonempty (no neighborhood works at r=0).
std::vector<double> singular_support(const nets::GeneralizedNet& u,
                                     const nets::AsymptoticScale& scale,
                                     const std::vector<double>& grid,
                                     const TargetTopology& f,
                                     const EpsLadder& ladder,
                                     const AnalyzerOptions& opt = {});

SpectrumResult singular_spectrum(const nets::GeneralizedNet& u,
                                 const nets::AsymptoticScale& scale,
                                 const std::vector<double>& grid,
                                 const TargetTopology& f,
                                 const EpsLadder& ladder,
                                 const AnalyzerOptions& opt = {},
                                 const std::vector<double>& r_samples =
                                     default_r_samples());

// Product/power consistency report: fibers of u*v against the union bound
// sup Sigma(u) + sup Sigma(v) where both are singular, containment where only
// one factor is; powers u^p against p * R(u).
struct NonlinearBoundsReport {
  struct ProductRow {
    double x = 0.0;
    CriticalResult u, v, uv;
    int dcase = 0;  // 1: only u singular, 2: only v, 3: both, 0: neither
    bool ok = true;
  };
  struct PowerRow {
    double x = 0.0;
    int p = 2;
    CriticalResult u, up;
    bool ok = true;
  };
  std::vector<ProductRow> products;
  std::vector<PowerRow> powers;
  bool all_ok = true;
};

NonlinearBoundsReport check_nonlinear_bounds(
    const nets::GeneralizedNet& u, const nets::GeneralizedNet& v,
    const nets::AsymptoticScale& scale, const std::vector<double>& grid,
    const TargetTopology& f, const EpsLadder& ladder,
    const std::vector<int>& powers = {2, 3}, double tol = 0.3,
    const AnalyzerOptions& opt = {});

}  // namespace local_spectrum
}  // namespace asymptospec
