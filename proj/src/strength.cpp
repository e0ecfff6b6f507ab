#include "asymptospec/experiments.hpp"

#include <cmath>
#include <stdexcept>

namespace asymptospec {
namespace experiments {

StrengthResult strength_of_singularity(const nets::GeneralizedNet& f, double x0,
                                       const EpsLadder& ladder,
                                       double round_tol,
                                       const local_spectrum::AnalyzerOptions&
                                           opt) {
  local_spectrum::LocalAnalyzer a(f, nets::AsymptoticScale::power(), ladder,
                                  local_spectrum::TargetTopology::C(1), opt);
  const local_spectrum::CriticalResult c = a.critical(x0);
  StrengthResult out;
  out.endpoint = c.endpoint;
  switch (c.kind) {
    case local_spectrum::FiberKind::Empty:
      throw std::invalid_argument(
          "strength_of_singularity: point is regular (empty fiber)");
    case local_spectrum::FiberKind::Finite:
      out.R = c.R;
      break;
    default:
      throw std::runtime_error("strength_of_singularity: fiber not finite");
  }
  out.n = static_cast<int>(std::lround(out.R));
  if (std::abs(out.R - out.n) > round_tol)
    throw std::runtime_error("strength_of_singularity: inconsistent strength");
  return out;
}

std::vector<DeltaPowerRow> run_delta_powers(
    const std::vector<int>& m_list,
    const std::vector<local_spectrum::TargetTopology>& topologies,
    const EpsLadder& ladder, double tol) {
  using local_spectrum::FiberEndpoint;
  using local_spectrum::FiberKind;
  std::vector<DeltaPowerRow> rows;
  for (int m : m_list) {
    const nets::GeneralizedNet u = nets::make_delta(m, nets::default_mollifier());
    for (const auto& top : topologies) {
      DeltaPowerRow row;
      row.m = m;
      if (top.kind == local_spectrum::TargetTopology::Kind::Cp) {
        row.topology = "C" + std::to_string(top.p);
        row.empty_expected = false;
        row.R_expected = m + top.p;  // d = 1: R = m*d + p
        row.endpoint_expected = "closed";
      } else {
        row.topology = "Dprime";
        row.empty_expected = m == 1;
        row.R_expected = m - 1.0;
        row.endpoint_expected = m == 1 ? "" : "open";
      }
      local_spectrum::LocalAnalyzer a(u, nets::AsymptoticScale::power(), ladder,
                                      top);
      const auto c = a.critical(0.0);
      row.empty_estimated = c.kind == FiberKind::Empty;
      if (c.kind == FiberKind::Finite) {
        row.R_estimated = c.R;
        row.endpoint_estimated = c.endpoint == FiberEndpoint::HalfOpen ? "open"
                                 : c.endpoint == FiberEndpoint::Closed
                                     ? "closed"
                                     : "unknown";
      }
      row.pass = row.empty_estimated == row.empty_expected;
      if (row.pass && !row.empty_expected) {
        row.pass = c.kind == FiberKind::Finite &&
                   std::abs(row.R_estimated - row.R_expected) <= tol &&
                   (row.endpoint_estimated == row.endpoint_expected ||
                    row.endpoint_estimated == "unknown");
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace experiments
}  // namespace asymptospec
