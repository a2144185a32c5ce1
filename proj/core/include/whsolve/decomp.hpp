#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "whsolve/spectral.hpp"

namespace whsolve {

enum class FilterKind { None, Exponential, PlanckTaper };

struct FilterSpec {
    FilterKind kind = FilterKind::None;
    int p = 8;
    double theta = -std::log(std::numeric_limits<double>::epsilon());
    double eps_taper = 0.1;

    static FilterSpec none() { return {}; }
    static FilterSpec exponential(int p = 8) {
        FilterSpec s;
        s.kind = FilterKind::Exponential;
        s.p = p;
        return s;
    }
    static FilterSpec planck(double eps) {
        FilterSpec s;
        s.kind = FilterKind::PlanckTaper;
        s.eps_taper = eps;
        return s;
    }
};

struct DecompositionPair {
    SampledFunction plus;
    SampledFunction minus;
    double shift = 0.0;
};

void validate(const FilterSpec& spec);

// sigma(eta_m), eta_m = xi_m / xi_max.
std::vector<double> filter_values(const Grid& g, const FilterSpec& spec);
SampledFunction apply_filter(const SampledFunction& fhat, const FilterSpec& spec);

// Split about the state-space point `shift`, which must be a node of fhat.grid
// (within 1e-9*dx). The split point and its antipode get half weight on each side.
DecompositionPair decompose(const SampledFunction& fhat, double shift, HilbertMethod method);

// lhat = minus * plus via the unwrapped complex logarithm.
// Returns {plus, minus}.
std::pair<SampledFunction, SampledFunction> factorize(const SampledFunction& lhat, HilbertMethod method);

}  // namespace whsolve
