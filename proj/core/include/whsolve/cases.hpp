#pragma once

#include <functional>
#include <string>
#include <utility>

#include "whsolve/spectral.hpp"

namespace whsolve {

enum class IntervalKind { Finite, SemiInfiniteRight, SemiInfiniteLeft };

enum class CaseKind { Gaussian, Cauchy, Laplace };

// lambda f(x) - int_a^b k(x - x') f(x') dx' = g(x),  x in [a, b].
struct Problem {
    std::string name;
    double lambda = 1.0;
    double a = 0.0;
    double b = 1.0;
    IntervalKind kind = IntervalKind::Finite;
    std::function<double(double)> kernel;
    // Zero outside [a, b] (or the half-line for semi-infinite kinds).
    std::function<double(double)> forcing;
    std::function<cplx(double)> kernel_hat;  // optional
    std::function<double(double)> analytic_solution;  // optional

    bool contains(double x) const;
};

Problem gaussian_case(double a, double b);
Problem cauchy_case(double a, double b);
Problem laplace_case(double a, double b);

Problem make_case(CaseKind kind, double a, double b);
Problem make_case(CaseKind kind);
std::pair<double, double> default_interval(CaseKind kind);

std::string to_string(CaseKind kind);
CaseKind parse_case(const std::string& name);

// Max |lambda f - int k f - g| over n_check interior points, by adaptive Gauss-Kronrod.
double verify_case(const Problem& problem, int n_check);

// Samples fn at the state nodes of g, zero outside [lo, hi]; nodes coinciding with lo or hi
// (within 1e-9*dx) are scaled by endpoint_weight. Infinite limits are allowed.
cvec truncated_samples(const std::function<double(double)>& fn, const Grid& g, double lo, double hi,
                       double endpoint_weight);

}  // namespace whsolve
