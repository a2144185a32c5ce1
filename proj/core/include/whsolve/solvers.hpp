#pragma once

#include <optional>
#include <vector>

#include "whsolve/cases.hpp"
#include "whsolve/decomp.hpp"

namespace whsolve {

enum class StartVariant { PlusZero, MinusZero };

struct SolverConfig {
    HilbertMethod hilbert = HilbertMethod::SignSymmetric;
    FilterSpec filter = FilterSpec::none();
    int max_iter = 5;
    double fp_tol = 1e-12;
    int m_trunc = 4;
    // The closed-form kernel transforms all satisfy khat(0) = 1, so with lambda = 1 the
    // untruncated symbol vanishes at xi = 0. The discrete transform of the truncated kernel is the default.
    bool use_closed_form_kernel_hat = false;
    // Weight of truncated samples that sit exactly on an interval end.
    double endpoint_weight = 1.0;
    StartVariant start = StartVariant::PlusZero;
    double denominator_guard = 1e-13;

    void validate() const;
};

struct Solution {
    std::vector<double> x;
    std::vector<double> f;
    std::optional<Grid> grid;  // set by the spectral solvers
    int index_a = -1;
    int index_b = -1;
    int iterations_used = 0;
    bool converged = true;
    std::vector<double> change_history;  // sup-norm change of f0hat per iteration, from iteration 2
    double imag_leakage = 0.0;           // max |Im f| / max |Re f|
    cvec f0hat;
    cvec aux_plus;
    cvec aux_minus;

    // Value at the node nearest to xq.
    double at(double xq) const;
    int nearest(double xq) const;
};

Solution solve_cwhe(const Problem& problem, const Grid& grid, const SolverConfig& config);
Solution solve_fredholm_wh(const Problem& problem, const Grid& grid, const SolverConfig& config);
Solution solve_fredholm_voronin(const Problem& problem, const Grid& grid, const SolverConfig& config);
// Nystrom on M equally spaced nodes spanning [a, b] with closed weights of the given order.
Solution solve_fredholm_quadrature(const Problem& problem, int M, int order);

}  // namespace whsolve
