#include "whsolve/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "whsolve/errors.hpp"

namespace whsolve {
namespace {

void check(const SampledFunction& f, Side side, const char* op) {
    if (f.side != side)
        throw SideError(std::string(op) + ": expected " + (side == Side::State ? "state" : "Fourier") +
                        "-side samples");
    if (static_cast<int>(f.values.size()) != f.grid.N)
        throw SideError(std::string(op) + ": sample count does not match grid");
}

double alt(int k) { return (k & 1) ? -1.0 : 1.0; }

// Shared body of both transforms about an arbitrary center c.
cvec forward_about(const Grid& g, const cvec& f, double c) {
    const int N = g.N;
    cvec v(f);
    for (int j = 0; j < N; ++j) v[j] *= alt(j);
    detail::dft(v.data(), N, +1);
    const double s = alt(N / 2) * g.dx;
    for (int k = 0; k < N; ++k) {
        cplx ph = c == 0.0 ? cplx(1.0) : std::polar(1.0, g.xi(k) * c);
        v[k] *= s * alt(k) * ph;
    }
    return v;
}

cvec inverse_about(const Grid& g, const cvec& fh, double c) {
    const int N = g.N;
    cvec v(fh);
    for (int k = 0; k < N; ++k) {
        cplx ph = c == 0.0 ? cplx(1.0) : std::polar(1.0, -g.xi(k) * c);
        v[k] *= alt(k) * ph;
    }
    detail::dft(v.data(), N, -1);
    const double s = alt(N / 2) * g.dxi / (2.0 * std::numbers::pi);
    for (int j = 0; j < N; ++j) v[j] *= s * alt(j);
    return v;
}

}  // namespace

SampledFunction state_samples(const Grid& g, cvec values) {
    SampledFunction f{g, Side::State, std::move(values)};
    check(f, Side::State, "state_samples");
    return f;
}

SampledFunction fourier_samples(const Grid& g, cvec values) {
    SampledFunction f{g, Side::Fourier, std::move(values)};
    check(f, Side::Fourier, "fourier_samples");
    return f;
}

SampledFunction forward_ft(const SampledFunction& f) {
    check(f, Side::State, "forward_ft");
    return {f.grid, Side::Fourier, forward_about(f.grid, f.values, f.grid.center)};
}

SampledFunction inverse_ft(const SampledFunction& fhat) {
    check(fhat, Side::Fourier, "inverse_ft");
    return {fhat.grid, Side::State, inverse_about(fhat.grid, fhat.values, fhat.grid.center)};
}

std::vector<double> sign_multiplier(const Grid& g) {
    std::vector<double> s(static_cast<size_t>(g.N));
    for (int i = 0; i < g.N; ++i) {
        const int n = i - g.N / 2;
        s[i] = n > 0 ? 1.0 : (n < 0 && i > 0 ? -1.0 : 0.0);
    }
    return s;
}

SampledFunction hilbert_sign(const SampledFunction& fhat) {
    check(fhat, Side::Fourier, "hilbert_sign");
    const Grid& g = fhat.grid;
    cvec v = inverse_about(g, fhat.values, 0.0);
    const auto s = sign_multiplier(g);
    for (int i = 0; i < g.N; ++i) v[i] *= s[i];
    return {g, Side::Fourier, forward_about(g, v, 0.0)};
}

SampledFunction hilbert_sinc(const SampledFunction& fhat) {
    check(fhat, Side::Fourier, "hilbert_sinc");
    const int N = fhat.grid.N;
    int L = 1;
    while (L < 2 * N - 1) L *= 2;
    // Toeplitz kernel t_k = 2/(pi k) for odd k, 0 for even k, embedded in a circulant of size L.
    auto t = [](int k) { return (k & 1) ? 2.0 / (std::numbers::pi * k) : 0.0; };
    cvec col(static_cast<size_t>(L), 0.0);
    for (int k = 0; k < N; ++k) col[k] = t(k);
    for (int k = 1; k < N; ++k) col[L - k] = t(-k);
    // The unpaired node -N/2 is left out of the sum and of the result, as the sign method does;
    // otherwise Hermitian symmetry of real-signal transforms is lost.
    cvec x(static_cast<size_t>(L), 0.0);
    for (int k = 1; k < N; ++k) x[k] = fhat.values[k];
    detail::dft(col.data(), L, -1);
    detail::dft(x.data(), L, -1);
    for (int k = 0; k < L; ++k) x[k] *= col[k];
    detail::dft(x.data(), L, +1);
    const cplx scale(0.0, 1.0 / L);
    cvec out(static_cast<size_t>(N));
    for (int k = 1; k < N; ++k) out[k] = scale * x[k];
    out[0] = 0.0;
    return {fhat.grid, Side::Fourier, std::move(out)};
}

SampledFunction hilbert_quadrature(const SampledFunction& fhat, QuadRule rule) {
    check(fhat, Side::Fourier, "hilbert_quadrature");
    const int N = fhat.grid.N;
    // Every-second-point rule: for node j only nodes of opposite parity contribute, spaced 2h.
    // Weights for each parity class follow the chosen closed rule along that subgrid.
    std::vector<double> w(static_cast<size_t>(N));
    for (int p = 0; p < 2; ++p) {
        const int P = (N - p + 1) / 2;
        const auto wp = closed_weights(P, rule);
        for (int q = 0; q < P; ++q) w[p + 2 * q] = wp[q];
    }
    cvec out(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) {
        cplx acc = 0.0;
        for (int n = (j + 1) & 1; n < N; n += 2) acc += fhat.values[n] * (w[n] / (j - n));
        out[j] = cplx(0.0, 2.0 / std::numbers::pi) * acc;
    }
    return {fhat.grid, Side::Fourier, std::move(out)};
}

SampledFunction hilbert(const SampledFunction& fhat, HilbertMethod method) {
    switch (method) {
        case HilbertMethod::SignSymmetric: return hilbert_sign(fhat);
        case HilbertMethod::Sinc: return hilbert_sinc(fhat);
        case HilbertMethod::Quadrature: return hilbert_quadrature(fhat);
    }
    throw Error("unknown Hilbert method");
}

}  // namespace whsolve
