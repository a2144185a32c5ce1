#pragma once

#include <complex>

namespace whsolve::detail {

// Unnormalised in-place DFT: out[k] = sum_j in[j] * exp(sign * 2*pi*i*j*k/n), sign = +1 or -1.
// Safe to call concurrently.
void dft(std::complex<double>* data, int n, int sign);

}  // namespace whsolve::detail
