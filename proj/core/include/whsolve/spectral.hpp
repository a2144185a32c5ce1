#pragma once

#include <complex>
#include <vector>

#include "whsolve/grid.hpp"
#include "whsolve/quadrature.hpp"

namespace whsolve {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

enum class Side { State, Fourier };

struct SampledFunction {
    Grid grid;
    Side side = Side::State;
    cvec values;
};

enum class HilbertMethod { SignSymmetric, Sinc, Quadrature };

SampledFunction state_samples(const Grid& g, cvec values);
SampledFunction fourier_samples(const Grid& g, cvec values);

// fhat(xi_m) = dx * sum_n f(x_n) exp(+i xi_m x_n)
SampledFunction forward_ft(const SampledFunction& f);
// f(x_n) = dxi/(2 pi) * sum_m fhat(xi_m) exp(-i x_n xi_m)
SampledFunction inverse_ft(const SampledFunction& fhat);

// 0 at node 0 and at node -N/2, +1 on positive nodes, -1 on the other negative nodes.
std::vector<double> sign_multiplier(const Grid& g);

// All three return i*H fhat. The conjugate lattice used by the sign method is the
// origin-centred one, whatever the grid center.
SampledFunction hilbert_sign(const SampledFunction& fhat);
SampledFunction hilbert_sinc(const SampledFunction& fhat);
SampledFunction hilbert_quadrature(const SampledFunction& fhat, QuadRule rule = QuadRule::Trapezoid);

SampledFunction hilbert(const SampledFunction& fhat, HilbertMethod method);

}  // namespace whsolve
