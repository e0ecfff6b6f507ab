#pragma once

#include <random>
#include <vector>

#include "asymptospec/net.hpp"

namespace asymptospec {
namespace corpus {

// Cheap closed-form nets for randomized property suites (all analytic, all on
// [-2, 2]). The mollified Heaviside uses the mollifier CDF directly rather
// than a convolution quadrature so sweeps stay fast.
nets::GeneralizedNet heaviside_net(double x0);
nets::GeneralizedNet smooth_net(double freq);
nets::GeneralizedNet scaled_smooth_net(double r, double freq);

// One random net from a fixed menu: delta powers, delta derivatives,
// mollified steps, (scaled) smooth nets, plus sums and products of those.
nets::GeneralizedNet random_net(std::mt19937& rng, int depth = 1);

std::vector<nets::GeneralizedNet> make_corpus(unsigned seed, int count);

}  // namespace corpus
}  // namespace asymptospec
