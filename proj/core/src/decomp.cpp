#include "whsolve/decomp.hpp"

#include <numbers>
#include <string>

#include "whsolve/errors.hpp"

namespace whsolve {

void validate(const FilterSpec& spec) {
    switch (spec.kind) {
        case FilterKind::None:
            return;
        case FilterKind::Exponential:
            if (spec.p < 2 || spec.p % 2 != 0)
                throw FilterSpecError("exponential filter order must be even and >= 2");
            if (!(spec.theta > 0.0)) throw FilterSpecError("exponential filter strength must be positive");
            return;
        case FilterKind::PlanckTaper:
            if (!(spec.eps_taper > 0.0 && spec.eps_taper < 0.5))
                throw FilterSpecError("Planck taper slope fraction must lie in (0, 1/2)");
            return;
    }
}

namespace {

double planck(double eta, double eps) {
    const double e1 = -1.0, e2 = eps - 1.0, e3 = 1.0 - eps, e4 = 1.0;
    if (eta <= e1 || eta >= e4) return 0.0;
    if (eta >= e2 && eta <= e3) return 1.0;
    double z;
    if (eta < e2)
        z = (e2 - e1) / (eta - e1) + (e2 - e1) / (eta - e2);
    else
        z = (e3 - e4) / (eta - e3) + (e3 - e4) / (eta - e4);
    return 1.0 / (std::exp(z) + 1.0);
}

}  // namespace

std::vector<double> filter_values(const Grid& g, const FilterSpec& spec) {
    validate(spec);
    std::vector<double> s(static_cast<size_t>(g.N), 1.0);
    for (int m = 0; m < g.N; ++m) {
        const double eta = g.xi(m) / g.xi_max;
        switch (spec.kind) {
            case FilterKind::None: break;
            case FilterKind::Exponential: s[m] = std::exp(-spec.theta * std::pow(eta, spec.p)); break;
            case FilterKind::PlanckTaper: s[m] = planck(eta, spec.eps_taper); break;
        }
    }
    return s;
}

SampledFunction apply_filter(const SampledFunction& fhat, const FilterSpec& spec) {
    if (fhat.side != Side::Fourier) throw SideError("apply_filter: expected Fourier-side samples");
    const auto s = filter_values(fhat.grid, spec);
    SampledFunction out = fhat;
    for (int m = 0; m < fhat.grid.N; ++m) out.values[m] *= s[m];
    return out;
}

DecompositionPair decompose(const SampledFunction& fhat, double shift, HilbertMethod method) {
    if (fhat.side != Side::Fourier) throw SideError("decompose: expected Fourier-side samples");
    const Grid& g = fhat.grid;
    if (g.find_node(shift, 1e-9 * g.dx) < 0)
        throw ShiftError("decompose: shift " + std::to_string(shift) + " is not a grid node");
    const int N = g.N;
    SampledFunction t = fhat;
    cvec ph(static_cast<size_t>(N));
    for (int m = 0; m < N; ++m) {
        ph[m] = shift == 0.0 ? cplx(1.0) : std::polar(1.0, shift * g.xi(m));
        t.values[m] /= ph[m];
    }
    const SampledFunction h = hilbert(t, method);
    DecompositionPair r{fhat, fhat, shift};
    for (int m = 0; m < N; ++m) {
        const cplx hv = ph[m] * h.values[m];
        r.plus.values[m] = 0.5 * (fhat.values[m] + hv);
        r.minus.values[m] = 0.5 * (fhat.values[m] - hv);
    }
    return r;
}

std::pair<SampledFunction, SampledFunction> factorize(const SampledFunction& lhat, HilbertMethod method) {
    if (lhat.side != Side::Fourier) throw SideError("factorize: expected Fourier-side samples");
    const int N = lhat.grid.N;
    SampledFunction lg = lhat;
    double prev = 0.0;
    for (int m = 0; m < N; ++m) {
        const cplx v = lhat.values[m];
        const double mag = std::abs(v);
        if (!(mag > 0.0) || !std::isfinite(mag))
            throw SingularSymbolError("factorize: symbol vanishes at xi = " + std::to_string(lhat.grid.xi(m)));
        double ph = std::arg(v);
        if (m > 0) {
            double d = ph - prev;
            d -= 2.0 * std::numbers::pi * std::round(d / (2.0 * std::numbers::pi));
            ph = prev + d;
        }
        prev = ph;
        lg.values[m] = cplx(std::log(mag), ph);
    }
    const double winding = (lg.values[N - 1].imag() - lg.values[0].imag()) / (2.0 * std::numbers::pi);
    if (std::abs(std::round(winding)) >= 1.0)
        throw IndexError("factorize: symbol phase winds " + std::to_string(std::round(winding)) +
                         " times; zero-index factorisation impossible");
    // The symbol is a transform of an origin-centred kernel; split about x = 0 on that lattice.
    lg.grid = lhat.grid.centered_at_origin();
    auto d = decompose(lg, 0.0, method);
    d.plus.grid = lhat.grid;
    d.minus.grid = lhat.grid;
    for (int m = 0; m < N; ++m) {
        d.plus.values[m] = std::exp(d.plus.values[m]);
        d.minus.values[m] = std::exp(d.minus.values[m]);
    }
    return {std::move(d.plus), std::move(d.minus)};
}

}  // namespace whsolve
