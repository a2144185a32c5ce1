#include "whsolve/cases.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "whsolve/errors.hpp"

namespace whsolve {

namespace {

constexpr double pi = std::numbers::pi;

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

void require_order(double a, double b, const char* who) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw CaseError(std::string(who) + ": need finite a < b");
}

// Integral part of the Cauchy forcing, int_a^b k(x - t) f(t) dt, in partial-fraction form.
double cauchy_integral_closed(double x, double a, double b) {
    const double num = std::log((b * b + 1.0) * ((a - x) * (a - x) + 1.0) / ((a * a + 1.0) * ((b - x) * (b - x) + 1.0))) +
                       x * (std::atan(b) - std::atan(a) + std::atan(b - x) - std::atan(a - x));
    return num / (pi * pi * x * (x * x + 4.0));
}

// Same quantity near x = 0: the numerator over x expanded to third order.
double cauchy_integral_series(double x, double a, double b) {
    const cplx za(a, 1.0), zb(b, 1.0);
    auto c = [](cplx z, int k) { return std::pow(z, -k).real(); };
    auto s = [](cplx z, int k) { return -std::pow(z, -k).imag(); };
    double e[4];
    e[0] = -2.0 * (c(za, 1) - c(zb, 1)) + 2.0 * (std::atan(b) - std::atan(a));
    for (int j = 1; j < 4; ++j)
        e[j] = -(2.0 / (j + 1)) * (c(za, j + 1) - c(zb, j + 1)) - (s(zb, j) - s(za, j)) / j;
    const double poly = e[0] + x * (e[1] + x * (e[2] + x * e[3]));
    return poly / (pi * pi * (x * x + 4.0));
}

}  // namespace

bool Problem::contains(double x) const {
    switch (kind) {
        case IntervalKind::Finite: return x >= a && x <= b;
        case IntervalKind::SemiInfiniteRight: return x >= a;
        case IntervalKind::SemiInfiniteLeft: return x <= b;
    }
    return false;
}

Problem gaussian_case(double a, double b) {
    require_order(a, b, "gaussian_case");
    Problem p;
    p.name = "gaussian";
    p.a = a;
    p.b = b;
    auto f = [](double x) { return std::exp(-x * x) / std::sqrt(pi); };
    p.kernel = f;
    p.analytic_solution = f;
    p.forcing = [a, b](double x) {
        if (x < a || x > b) return 0.0;
        return std::exp(-x * x) / std::sqrt(pi) -
               std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi) * (norm_cdf(2.0 * b - x) - norm_cdf(2.0 * a - x));
    };
    p.kernel_hat = [](double xi) { return cplx(std::exp(-0.25 * xi * xi)); };
    return p;
}

Problem cauchy_case(double a, double b) {
    require_order(a, b, "cauchy_case");
    Problem p;
    p.name = "cauchy";
    p.a = a;
    p.b = b;
    auto f = [](double x) { return 1.0 / (pi * (x * x + 1.0)); };
    p.kernel = f;
    p.analytic_solution = f;
    p.forcing = [a, b, f](double x) {
        if (x < a || x > b) return 0.0;
        const double gi = std::abs(x) < 1e-4 ? cauchy_integral_series(x, a, b) : cauchy_integral_closed(x, a, b);
        return f(x) - gi;
    };
    p.kernel_hat = [](double xi) { return cplx(std::exp(-std::abs(xi))); };
    return p;
}

Problem laplace_case(double a, double b) {
    require_order(a, b, "laplace_case");
    if (!(a > 0.0)) throw CaseError("laplace_case: need 0 < a < b");
    Problem p;
    p.name = "laplace";
    p.a = a;
    p.b = b;
    auto f = [](double x) { return 0.5 * std::exp(-std::abs(x)); };
    p.kernel = f;
    p.analytic_solution = f;
    p.forcing = [a, b](double x) {
        if (x < a || x > b) return 0.0;
        return std::exp(-x) * (0.375 + 0.125 * std::exp(-2.0 * (b - x)) + 0.25 * (a - x));
    };
    p.kernel_hat = [](double xi) { return cplx(1.0 / (1.0 + xi * xi)); };
    return p;
}

std::pair<double, double> default_interval(CaseKind kind) {
    switch (kind) {
        case CaseKind::Gaussian: return {0.0, 0.125};
        case CaseKind::Cauchy: return {0.0, 0.25};
        case CaseKind::Laplace: return {1.0, 1.125};
    }
    throw CaseError("unknown case");
}

Problem make_case(CaseKind kind, double a, double b) {
    switch (kind) {
        case CaseKind::Gaussian: return gaussian_case(a, b);
        case CaseKind::Cauchy: return cauchy_case(a, b);
        case CaseKind::Laplace: return laplace_case(a, b);
    }
    throw CaseError("unknown case");
}

Problem make_case(CaseKind kind) {
    const auto [a, b] = default_interval(kind);
    return make_case(kind, a, b);
}

std::string to_string(CaseKind kind) {
    switch (kind) {
        case CaseKind::Gaussian: return "gaussian";
        case CaseKind::Cauchy: return "cauchy";
        case CaseKind::Laplace: return "laplace";
    }
    return "?";
}

CaseKind parse_case(const std::string& name) {
    if (name == "gaussian") return CaseKind::Gaussian;
    if (name == "cauchy") return CaseKind::Cauchy;
    if (name == "laplace") return CaseKind::Laplace;
    throw CaseError("unknown case '" + name + "' (expected gaussian, cauchy or laplace)");
}

double verify_case(const Problem& problem, int n_check) {
    if (!problem.analytic_solution) throw CaseError("verify_case: problem has no analytic solution");
    if (problem.kind != IntervalKind::Finite) throw CaseError("verify_case: finite interval required");
    if (n_check < 1) throw CaseError("verify_case: n_check must be positive");
    using boost::math::quadrature::gauss_kronrod;
    const double a = problem.a, b = problem.b;
    double worst = 0.0;
    for (int i = 1; i <= n_check; ++i) {
        const double x = a + (b - a) * i / (n_check + 1);
        auto integrand = [&](double t) { return problem.kernel(x - t) * problem.analytic_solution(t); };
        // Split at x so kernels with a kink there stay smooth on each piece.
        const double left = gauss_kronrod<double, 61>::integrate(integrand, a, x, 15, 1e-13);
        const double right = gauss_kronrod<double, 61>::integrate(integrand, x, b, 15, 1e-13);
        const double r = problem.lambda * problem.analytic_solution(x) - (left + right) - problem.forcing(x);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

cvec truncated_samples(const std::function<double(double)>& fn, const Grid& g, double lo, double hi,
                       double endpoint_weight) {
    cvec v(static_cast<size_t>(g.N), 0.0);
    const double tol = 1e-9 * g.dx;
    for (int i = 0; i < g.N; ++i) {
        const double x = g.x(i);
        if (x < lo - tol || x > hi + tol) continue;
        const bool at_end = std::abs(x - lo) <= tol || std::abs(x - hi) <= tol;
        // Evaluate at the exact endpoint so closed-form forcings see x inside [lo, hi].
        const double xe = std::abs(x - lo) <= tol ? lo : (std::abs(x - hi) <= tol ? hi : x);
        v[i] = fn(xe) * (at_end ? endpoint_weight : 1.0);
    }
    return v;
}

}  // namespace whsolve
