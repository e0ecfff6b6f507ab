#pragma once

#include <complex>
#include <vector>

namespace asymptospec {
namespace frequential {

// In-place radix-2 FFT; size must be a power of two. inverse=true applies the
// conjugate transform including the 1/n factor.
void fft(std::vector<std::complex<double>>& a, bool inverse = false);

std::size_t next_pow2(std::size_t n);

}  // namespace frequential
}  // namespace asymptospec
