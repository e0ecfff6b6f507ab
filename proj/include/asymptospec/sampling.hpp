#pragma once

#include <vector>

#include "asymptospec/geometry.hpp"
#include "asymptospec/net.hpp"

namespace asymptospec {
namespace nets {

// 1D sampling grid on [lo,hi]: uniform base plus eps/8-spaced refinement
// within 4*eps of each registered singular point. Refinement spacing is
// proportional to eps, so sampled sup-norms of eps-scale features rescale
// exactly along the ladder.
std::vector<double> sample_grid(double lo, double hi, double eps,
                                const std::vector<double>& singular,
                                int base_n = 65);

// Union of sample grids over all ladder rungs; shared by consecutive-rung
// difference norms so every rung sees every other rung's refinement.
std::vector<double> union_grid(double lo, double hi,
                               const std::vector<double>& ladder,
                               const std::vector<double>& singular,
                               int base_n = 65);

// p_{K,l}(u_eps): max over sampled points and single-axis orders <= l.
double seminorm(const GeneralizedNet& u, const DomainBox& K, int l, double eps,
                int base_n = 65);

}  // namespace nets
}  // namespace asymptospec
