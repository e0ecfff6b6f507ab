#pragma once

#include <map>
#include <optional>
#include <vector>

#include "asymptospec/geometry.hpp"
#include "asymptospec/net.hpp"
#include "asymptospec/topology.hpp"
#include "asymptospec/valuation.hpp"

namespace asymptospec {
namespace local_spectrum {

enum class ConvStatus { ConvergesToZero, ConvergesNonzero, Diverges, Unknown };

struct ConvergenceVerdict {
  ConvStatus status = ConvStatus::Unknown;
  std::optional<double> limit_norm;
  std::vector<std::pair<double, double>> increments;  // (eps_i, d_i)
  double slope = 0.0;   // Theil-Sen slope of log-increments on the tail
  bool exact = false;   // increments at rounding level (identical rungs)

  bool converges() const {
    return status == ConvStatus::ConvergesToZero ||
           status == ConvStatus::ConvergesNonzero;
  }
};

struct AnalyzerOptions {
  double conv_threshold = 0.2;  // increment slope required for convergence
  double unknown_lo = -0.05;    // lower edge of the unknown band
  int tail = 6;
  double eta = 0.25;            // largest neighborhood half-width
  int depth = 6;                // nested neighborhoods, shrink factor 2
  double r_max = 16.0;
  int bisect_steps = 24;
  int base_n = 33;
  double nonzero_factor = 10.0;
  double dprime_abs_tol = 1e-9;
};

enum class FiberKind { Empty, Finite, Infinite, Unknown };

// Endpoint of the fiber interval Sigma_x = [0,R) or [0,R].
// HalfOpen: the scaled net converges at r = R (N_x closed).
// Closed:   it diverges at r = R (N_x open).
enum class FiberEndpoint { HalfOpen, Closed, Unknown };

struct CriticalResult {
  FiberKind kind = FiberKind::Unknown;
  double R = 0.0;  // valid for kind == Finite
  FiberEndpoint endpoint = FiberEndpoint::Unknown;
  double bisection_flip = 0.0;  // diagnostic: boundary of the threshold test
  double valuation = 0.0;       // diagnostic: -slope of unscaled norms
  bool contradiction = false;
};

// Caches per-rung samples (C^p value tables, D' pairings) per neighborhood so
// that repeated convergence tests over r cost only scaled max/difference
// passes over the cached arrays.
class LocalAnalyzer {
 public:
  LocalAnalyzer(const nets::GeneralizedNet& u, nets::AsymptoticScale scale,
                EpsLadder ladder, TargetTopology f, AnalyzerOptions opt = {});

  ConvergenceVerdict test(double r, const DomainBox& v);
  // Existential form: converges if it converges on some nested neighborhood.
  ConvergenceVerdict test_at(double r, double x);
  CriticalResult critical(double x);

  const nets::GeneralizedNet& net() const { return u_; }
  const EpsLadder& ladder() const { return ladder_; }
  const AnalyzerOptions& options() const { return opt_; }
  std::vector<DomainBox> neighborhoods(double x) const;

 private:
  struct CpCache {
    std::vector<double> grid;
    // value[rung][k*npts + j], k = derivative order <= p
    std::vector<std::vector<double>> value;
    std::vector<double> maxabs;
  };
  struct DpCache {
    // pairing[rung][j]
    std::vector<std::vector<double>> pairing;
  };

  const CpCache& cp_cache(const DomainBox& v);
  const DpCache& dp_cache(const DomainBox& v);
  ConvergenceVerdict verdict_from(const std::vector<double>& m,
                                  const std::vector<double>& d) const;
  struct Valuation {
    double r = 0.0;
    double drift = 0.0;
    bool log_corrected = false;
  };
  Valuation valuation_on(const DomainBox& v);

  nets::GeneralizedNet u_;
  nets::AsymptoticScale scale_;
  EpsLadder ladder_;
  TargetTopology f_;
  AnalyzerOptions opt_;
  std::map<std::array<double, 2>, CpCache> cp_;
  std::map<std::array<double, 2>, DpCache> dp_;
};

// One-shot form of the cached analyzer.
ConvergenceVerdict test_convergence(const nets::GeneralizedNet& u,
                                    const nets::AsymptoticScale& scale,
                                    double r, const DomainBox& v,
                                    const TargetTopology& f,
                                    const EpsLadder& ladder,
                                    const AnalyzerOptions& opt = {});

}  // namespace local_spectrum
}  // namespace asymptospec
