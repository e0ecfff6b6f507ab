#include "asymptospec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace asymptospec {
namespace local_spectrum {

std::string SpectrumPoint::fiber_string() const {
  char buf[64];
  switch (critical.kind) {
    case FiberKind::Empty:
      return "{}";
    case FiberKind::Infinite:
      return "[0,inf)";
    case FiberKind::Unknown:
      return "?";
    case FiberKind::Finite:
      break;
  }
  const char close = critical.endpoint == FiberEndpoint::HalfOpen ? ')'
                     : critical.endpoint == FiberEndpoint::Closed ? ']'
                                                                  : '?';
  std::snprintf(buf, sizeof(buf), "[0,%.3f%c", critical.R, close);
  return buf;
}

std::optional<double> SpectrumResult::sup_R() const {
  std::optional<double> r;
  for (const auto& p : points)
    if (p.critical.kind == FiberKind::Finite)
      r = std::max(r.value_or(0.0), p.critical.R);
  return r;
}

std::vector<double> default_r_samples() {
  std::vector<double> r;
  for (int i = 0; i <= 8; ++i) r.push_back(0.5 * i);
  return r;
}

std::vector<double> singular_support(const nets::GeneralizedNet& u,
                                     const nets::AsymptoticScale& scale,
                                     const std::vector<double>& grid,
                                     const TargetTopology& f,
                                     const EpsLadder& ladder,
                                     const AnalyzerOptions& opt) {
  LocalAnalyzer a(u, scale, ladder, f, opt);
  std::vector<double> out;
  for (double x : grid)
    if (!a.test_at(0.0, x).converges()) out.push_back(x);
  return out;
}

SpectrumResult singular_spectrum(const nets::GeneralizedNet& u,
                                 const nets::AsymptoticScale& scale,
                                 const std::vector<double>& grid,
                                 const TargetTopology& f,
                                 const EpsLadder& ladder,
                                 const AnalyzerOptions& opt,
                                 const std::vector<double>& r_samples) {
  LocalAnalyzer a(u, scale, ladder, f, opt);
  SpectrumResult res;
  res.r_samples = r_samples;
  for (double x : grid) {
    SpectrumPoint p;
    p.x = x;
    p.critical = a.critical(x);
    for (double r : r_samples) p.sampled.push_back(a.test_at(r, x).status);
    if (p.in_singular_support()) res.singular_support.push_back(x);
    res.points.push_back(std::move(p));
  }
  return res;
}

namespace {

// Upper bound usable in sums: R for finite fibers, 0 for empty, +inf else.
double sup_or(const CriticalResult& c, double inf_value) {
  switch (c.kind) {
    case FiberKind::Empty:
      return 0.0;
    case FiberKind::Finite:
      return c.R;
    default:
      return inf_value;
  }
}

}  // namespace

NonlinearBoundsReport check_nonlinear_bounds(
    const nets::GeneralizedNet& u, const nets::GeneralizedNet& v,
    const nets::AsymptoticScale& scale, const std::vector<double>& grid,
    const TargetTopology& f, const EpsLadder& ladder,
    const std::vector<int>& powers, double tol, const AnalyzerOptions& opt) {
  NonlinearBoundsReport rep;
  const nets::GeneralizedNet uv = nets::net_mul(u, v);
  LocalAnalyzer au(u, scale, ladder, f, opt);
  LocalAnalyzer av(v, scale, ladder, f, opt);
  LocalAnalyzer auv(uv, scale, ladder, f, opt);
  const double kInf = 1e300;

  for (double x : grid) {
    NonlinearBoundsReport::ProductRow row;
    row.x = x;
    row.u = au.critical(x);
    row.v = av.critical(x);
    row.uv = auv.critical(x);
    const bool su = row.u.kind != FiberKind::Empty;
    const bool sv = row.v.kind != FiberKind::Empty;
    row.dcase = su && sv ? 3 : su ? 1 : sv ? 2 : 0;
    const double ruv = sup_or(row.uv, kInf);
    switch (row.dcase) {
      case 3:
        row.ok = ruv <= sup_or(row.u, kInf) + sup_or(row.v, kInf) + tol;
        break;
      case 1:
        row.ok = ruv <= sup_or(row.u, kInf) + tol;
        break;
      case 2:
        row.ok = ruv <= sup_or(row.v, kInf) + tol;
        break;
      default:
        row.ok = row.uv.kind == FiberKind::Empty || ruv <= tol;
    }
    rep.all_ok = rep.all_ok && row.ok;
    rep.products.push_back(row);
  }

  for (int p : powers) {
    if (p < 2) throw std::invalid_argument("check_nonlinear_bounds: power >= 2");
    const nets::GeneralizedNet up = nets::net_pow(u, p);
    LocalAnalyzer aup(up, scale, ladder, f, opt);
    for (double x : grid) {
      NonlinearBoundsReport::PowerRow row;
      row.x = x;
      row.p = p;
      row.u = au.critical(x);
      row.up = aup.critical(x);
      if (row.u.kind == FiberKind::Empty)
        row.ok = row.up.kind == FiberKind::Empty || sup_or(row.up, kInf) <= tol;
      else
        row.ok = sup_or(row.up, kInf) <= p * sup_or(row.u, kInf) + tol;
      rep.all_ok = rep.all_ok && row.ok;
      rep.powers.push_back(row);
    }
  }
  return rep;
}

}  // namespace local_spectrum
}  // namespace asymptospec
