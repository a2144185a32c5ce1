#include "whsolve/solvers.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "whsolve/errors.hpp"
#include "whsolve/quadrature.hpp"

namespace whsolve {

void SolverConfig::validate() const {
    if (max_iter < 1) throw Error("solver config: max_iter must be >= 1");
    if (!(fp_tol > 0.0)) throw Error("solver config: fp_tol must be positive");
    if (m_trunc < 1) throw Error("solver config: m_trunc must be >= 1");
    whsolve::validate(filter);
}

int Solution::nearest(double xq) const {
    if (x.empty()) return -1;
    auto it = std::lower_bound(x.begin(), x.end(), xq);
    if (it == x.end()) return static_cast<int>(x.size()) - 1;
    int i = static_cast<int>(it - x.begin());
    if (i > 0 && std::abs(x[i - 1] - xq) <= std::abs(x[i] - xq)) --i;
    return i;
}

double Solution::at(double xq) const { return f[static_cast<size_t>(nearest(xq))]; }

namespace {

void guard(const cvec& d, double tol, const char* what) {
    for (const auto& v : d)
        if (!(std::abs(v) >= tol))
            throw SingularDenominatorError(std::string("singular denominator: |") + what + "| < " +
                                           std::to_string(tol));
}

cvec operator*(const cvec& u, const cvec& v) {
    cvec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] * v[i];
    return r;
}

cvec operator/(const cvec& u, const cvec& v) {
    cvec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] / v[i];
    return r;
}

cvec operator-(const cvec& u, const cvec& v) {
    cvec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

cvec operator+(const cvec& u, const cvec& v) {
    cvec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

cvec shifted(const cvec& u, cplx s) {
    cvec r(u);
    for (auto& v : r) v += s;
    return r;
}

double sup_diff(const cvec& u, const cvec& v) {
    double m = 0.0;
    for (size_t i = 0; i < u.size(); ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

// Kernel transform on the state grid's xi nodes.
cvec kernel_transform(const Problem& p, const Grid& g, const SolverConfig& cfg) {
    if (cfg.use_closed_form_kernel_hat && p.kernel_hat) {
        cvec k(static_cast<size_t>(g.N));
        for (int m = 0; m < g.N; ++m) k[m] = p.kernel_hat(g.xi(m));
        return k;
    }
    const Grid g0 = g.centered_at_origin();
    double lo = -g0.x_max, hi = g0.x_max;
    if (p.kind == IntervalKind::Finite) {
        lo = p.a - p.b;
        hi = p.b - p.a;
    }
    return forward_ft(state_samples(g0, truncated_samples(p.kernel, g0, lo, hi, cfg.endpoint_weight))).values;
}

cvec forcing_transform(const Problem& p, const Grid& g, const SolverConfig& cfg) {
    double lo = p.a, hi = p.b;
    if (p.kind == IntervalKind::SemiInfiniteRight) hi = std::numeric_limits<double>::infinity();
    if (p.kind == IntervalKind::SemiInfiniteLeft) lo = -std::numeric_limits<double>::infinity();
    return forward_ft(state_samples(g, truncated_samples(p.forcing, g, lo, hi, cfg.endpoint_weight))).values;
}

void require_node(const Grid& g, double x, const char* name) {
    if (g.find_node(x, 1e-9 * g.dx) < 0)
        throw GridError(std::string("interval end ") + name + " = " + std::to_string(x) + " is not a grid node");
}

cvec split(const cvec& v, const Grid& g, double shift, HilbertMethod m, bool plus) {
    auto d = decompose(fourier_samples(g, v), shift, m);
    return plus ? std::move(d.plus.values) : std::move(d.minus.values);
}

std::pair<cvec, cvec> split_both(const cvec& v, const Grid& g, double shift, HilbertMethod m) {
    auto d = decompose(fourier_samples(g, v), shift, m);
    return {std::move(d.plus.values), std::move(d.minus.values)};
}

Solution finish(const Problem& p, const Grid& g, const SolverConfig& cfg, cvec f0hat) {
    Solution s;
    s.grid = g;
    auto filtered = apply_filter(fourier_samples(g, f0hat), cfg.filter);
    const auto fx = inverse_ft(filtered);
    s.x = g.x_nodes();
    s.f.resize(static_cast<size_t>(g.N));
    double re = 0.0, im = 0.0;
    for (int i = 0; i < g.N; ++i) {
        s.f[i] = fx.values[i].real();
        re = std::max(re, std::abs(fx.values[i].real()));
        im = std::max(im, std::abs(fx.values[i].imag()));
    }
    s.imag_leakage = re > 0.0 ? im / re : im;
    if (p.kind != IntervalKind::SemiInfiniteLeft) s.index_a = g.find_node(p.a, 1e-9 * g.dx);
    if (p.kind != IntervalKind::SemiInfiniteRight) s.index_b = g.find_node(p.b, 1e-9 * g.dx);
    s.f0hat = std::move(f0hat);
    return s;
}

}  // namespace

Solution solve_cwhe(const Problem& p, const Grid& g, const SolverConfig& cfg) {
    cfg.validate();
    if (p.kind == IntervalKind::Finite) throw Error("solve_cwhe: semi-infinite problem required");
    const cvec ghat = forcing_transform(p, g, cfg);
    const cvec khat = kernel_transform(p, g, cfg);
    const cvec lhat = shifted(cvec(khat.size(), 0.0) - khat, p.lambda);
    auto [lp, lm] = factorize(fourier_samples(g, lhat), cfg.hilbert);
    guard(lp.values, cfg.denominator_guard, "l+");
    guard(lm.values, cfg.denominator_guard, "l-");
    cvec f0;
    if (p.kind == IntervalKind::SemiInfiniteRight) {
        require_node(g, p.a, "a");
        const cvec c = ghat / lm.values;
        f0 = split(c, g, p.a, cfg.hilbert, true) / lp.values;
    } else {
        require_node(g, p.b, "b");
        const cvec c = ghat / lp.values;
        f0 = split(c, g, p.b, cfg.hilbert, false) / lm.values;
    }
    Solution s = finish(p, g, cfg, std::move(f0));
    s.iterations_used = 1;
    return s;
}

Solution solve_fredholm_wh(const Problem& p, const Grid& g, const SolverConfig& cfg) {
    cfg.validate();
    if (p.kind != IntervalKind::Finite) throw Error("solve_fredholm_wh: finite interval required");
    require_node(g, p.a, "a");
    require_node(g, p.b, "b");
    const int N = g.N;
    const auto H = cfg.hilbert;
    const cvec g0 = forcing_transform(p, g, cfg);
    const cvec khat = kernel_transform(p, g, cfg);
    const cvec lhat = shifted(cvec(khat.size(), 0.0) - khat, p.lambda);
    auto [lpf, lmf] = factorize(fourier_samples(g, lhat), H);
    const cvec& lp = lpf.values;
    const cvec& lm = lmf.values;
    guard(lp, cfg.denominator_guard, "l+");
    guard(lm, cfg.denominator_guard, "l-");

    cvec fp(static_cast<size_t>(N), 0.0), fm(static_cast<size_t>(N), 0.0), f0, prev;
    Solution s;
    int it = 0;
    bool converged = false;
    for (it = 1; it <= cfg.max_iter; ++it) {
        if (!(it == 1 && cfg.start == StartVariant::MinusZero)) {
            // Equation on [a, +inf): unknown f+ lives right of b.
            auto [c1p, c1m] = split_both((g0 - fp) / lm, g, p.a, H);
            f0 = c1p / lp;
            fm = lm * c1m;
        }
        // Equation on (-inf, b]: unknown f- lives left of a.
        auto [c2p, c2m] = split_both((g0 - fm) / lp, g, p.b, H);
        f0 = c2m / lm;
        fp = lp * c2p;
        if (!prev.empty()) {
            const double ch = sup_diff(f0, prev);
            s.change_history.push_back(ch);
            if (ch < cfg.fp_tol) {
                converged = true;
                break;
            }
        }
        prev = f0;
    }
    Solution out = finish(p, g, cfg, std::move(f0));
    out.change_history = std::move(s.change_history);
    out.iterations_used = std::min(it, cfg.max_iter);
    out.converged = converged;
    out.aux_plus = std::move(fp);
    out.aux_minus = std::move(fm);
    return out;
}

Solution solve_fredholm_voronin(const Problem& p, const Grid& g, const SolverConfig& cfg) {
    cfg.validate();
    if (p.kind != IntervalKind::Finite) throw Error("solve_fredholm_voronin: finite interval required");
    require_node(g, p.a, "a");
    require_node(g, p.b, "b");
    const int N = g.N;
    const auto H = cfg.hilbert;
    const cvec g0 = forcing_transform(p, g, cfg);
    const cvec khat = kernel_transform(p, g, cfg);
    auto kd = decompose(fourier_samples(g.centered_at_origin(), khat), 0.0, H);
    const cvec& kp = kd.plus.values;
    const cvec& km = kd.minus.values;
    const cvec one_m_km = shifted(cvec(km.size(), 0.0) - km, 1.0);
    const cvec one_m_kp = shifted(cvec(kp.size(), 0.0) - kp, 1.0);
    const cvec den_m = shifted(km, 0.5 * (1.0 - p.lambda));
    const cvec den_p = shifted(kp, 0.5 * (1.0 - p.lambda));
    guard(one_m_km, cfg.denominator_guard, "1-k-");
    guard(one_m_kp, cfg.denominator_guard, "1-k+");
    guard(den_m, cfg.denominator_guard, "k- + (1-lambda)/2");
    guard(den_p, cfg.denominator_guard, "k+ + (1-lambda)/2");
    const cvec rm = km / one_m_km;
    const cvec rp = kp / one_m_kp;

    cvec phi1p(static_cast<size_t>(N), 0.0), phi2m(static_cast<size_t>(N), 0.0), f0, prev;
    std::vector<double> hist;
    int it = 0;
    bool converged = false;
    for (it = 1; it <= cfg.max_iter; ++it) {
        auto [c1p, c1m] = split_both(rm * (g0 + phi2m), g, p.a, H);
        phi1p = c1p;
        f0 = (c1p + one_m_km * c1m) / den_m;
        auto [c2p, c2m] = split_both(rp * (g0 + phi1p), g, p.b, H);
        phi2m = c2m;
        f0 = (c2m + one_m_kp * c2p) / den_p;
        if (!prev.empty()) {
            const double ch = sup_diff(f0, prev);
            hist.push_back(ch);
            if (ch < cfg.fp_tol) {
                converged = true;
                break;
            }
        }
        prev = f0;
    }
    Solution out = finish(p, g, cfg, std::move(f0));
    out.change_history = std::move(hist);
    out.iterations_used = std::min(it, cfg.max_iter);
    out.converged = converged;
    out.aux_plus = std::move(phi1p);
    out.aux_minus = std::move(phi2m);
    return out;
}

Solution solve_fredholm_quadrature(const Problem& p, int M, int order) {
    if (p.kind != IntervalKind::Finite) throw Error("solve_fredholm_quadrature: finite interval required");
    const QuadRule rule = rule_for_order(order);
    if (M < 2 * order) throw Error("solve_fredholm_quadrature: M must be at least 2*order");
    const double h = (p.b - p.a) / (M - 1);
    const auto w = closed_weights(M, rule);
    Solution s;
    s.x.resize(static_cast<size_t>(M));
    for (int i = 0; i < M; ++i) s.x[i] = i == M - 1 ? p.b : p.a + i * h;
    Eigen::MatrixXd A(M, M);
    Eigen::VectorXd rhs(M);
    for (int i = 0; i < M; ++i) {
        rhs(i) = p.forcing(s.x[i]);
        for (int j = 0; j < M; ++j) A(i, j) = -h * w[j] * p.kernel(s.x[i] - s.x[j]);
        A(i, i) += p.lambda;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    if (!(lu.rcond() > 1e-14)) throw SingularSystemError("solve_fredholm_quadrature: singular linear system");
    const Eigen::VectorXd f = lu.solve(rhs);
    s.f.assign(f.data(), f.data() + M);
    s.index_a = 0;
    s.index_b = M - 1;
    s.iterations_used = 1;
    return s;
}

}  // namespace whsolve
