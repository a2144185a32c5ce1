// Acceptance suite: one PASS/FAIL line per check.
//
//   whsolve_acceptance [--expect-blocked id,id,...] [--only prefix]
//
// Exit status is 0 when every check passes, except the ids listed with --expect-blocked, which
// must fail. A listed check that passes, or an unlisted check that fails, gives exit status 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "whsolve/bench.hpp"
#include "whsolve/cases.hpp"
#include "whsolve/decomp.hpp"
#include "whsolve/solvers.hpp"
#include "whsolve/spectral.hpp"

using namespace whsolve;

namespace {

struct Outcome {
    std::string id;
    bool pass;
    std::string detail;
};

std::vector<Outcome> outcomes;
std::string only_prefix;

bool wanted(const std::string& id) { return id.rfind(only_prefix, 0) == 0 || only_prefix.rfind(id, 0) == 0; }

void report(const std::string& id, bool pass, const std::string& detail) {
    outcomes.push_back({id, pass, detail});
    std::printf("%s  %-26s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string list(const std::vector<double>& v, const char* f = "%.3g") {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(f, v[i]);
    return s + "]";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const CaseKind kCases[] = {CaseKind::Gaussian, CaseKind::Cauchy, CaseKind::Laplace};
const double kProbes[] = {0.1, 0.5, 0.9};

double max_abs(const cvec& u) {
    double m = 0;
    for (auto v : u) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const cvec& u, const cvec& v) {
    double m = 0;
    for (size_t i = 0; i < u.size(); ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

// Max abs difference skipping storage index 0 (the unpaired node -N/2 zeroed by both fast transforms).
double max_abs_diff_paired(const cvec& u, const cvec& v) {
    double m = 0;
    for (size_t i = 1; i < u.size(); ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

std::vector<double> probe_errors(const Problem& p, const Solution& s) {
    std::vector<double> e;
    for (double fr : kProbes) {
        const int i = s.nearest(p.a + fr * (p.b - p.a));
        e.push_back(std::abs(s.f[i] - p.analytic_solution(s.x[i])));
    }
    return e;
}

// ---------------------------------------------------------------------------------------------

void convergence_slopes(const std::string& prefix, Method m, double lo, double hi, bool timed) {
    for (auto c : kCases) {
        const std::string id = prefix + "." + to_string(c);
        if (!wanted(id)) continue;
        RunSpec spec = default_spec(c, m);
        if (m != Method::Quadrature) spec.N_list = {1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14};
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = run_sweep(spec);
        const double wall = seconds_since(t0);
        std::vector<double> sl;
        bool ok = !rep.any_failed();
        for (const auto& s : rep.slopes) {
            sl.push_back(s ? *s : std::nan(""));
            ok = ok && s && *s >= lo && *s <= hi;
        }
        std::string detail = fmt("%s N=%d..%d slopes %s in [%g, %g]", to_string(m).c_str(), spec.N_list.front(),
                                 spec.N_list.back(), list(sl, "%.2f").c_str(), lo, hi);
        if (timed) {
            ok = ok && wall < 60.0;
            detail += fmt("; %.2f s < 60 s", wall);
        }
        report(id, ok, detail);
    }
}

void criterion1() { convergence_slopes("1.wh-sign", Method::WhSign, -2.5, -1.7, true); }

void criterion2() {
    for (auto m : {Method::WhSinc, Method::Voronin, Method::Quadrature})
        convergence_slopes("2." + to_string(m), m, -1.5, -0.7, false);
}

void criterion3() {
    const int N = 1 << 13;
    for (auto c : kCases) {
        const std::string base = "3." + to_string(c);
        if (!wanted(base)) continue;
        const Problem p = make_case(c);
        const SolverConfig cfg = default_config(Method::WhSign);
        const auto es = probe_errors(p, solve_instance(p, Method::WhSign, N, cfg));
        // matching resolution: the quadrature node spacing equals the FFT grid spacing
        const int panels = N / (2 * cfg.m_trunc);
        const std::pair<Method, int> rivals[] = {{Method::Voronin, N}, {Method::Quadrature, panels}};
        for (auto [m, n] : rivals) {
            const auto er = probe_errors(p, solve_instance(p, m, n, default_config(m)));
            bool ok = true;
            for (size_t k = 0; k < es.size(); ++k) ok = ok && es[k] < er[k];
            report(base + ".vs-" + to_string(m), ok,
                   fmt("wh-sign %s < %s(N=%d) %s", list(es).c_str(), to_string(m).c_str(), n, list(er).c_str()));
        }
    }
}

void criterion4() {
    const int N = 1 << 12;
    for (auto c : kCases) {
        const Problem p = make_case(c);
        for (auto m : {Method::WhSign, Method::Voronin}) {
            const std::string id = "4." + to_string(c) + "." + to_string(m);
            if (!wanted(id)) continue;
            const Solution s = solve_instance(p, m, N, default_config(m));
            // change_history[k] is the change measured at iteration k + 2
            int first = -1;
            for (size_t k = 0; k < s.change_history.size(); ++k)
                if (s.change_history[k] < 1e-10) {
                    first = static_cast<int>(k) + 2;
                    break;
                }
            const bool ok = first > 0 && first <= 5 && s.iterations_used <= 5;
            report(id, ok,
                   fmt("change < 1e-10 at iteration %d <= 5 (ran %d, final change %.2e)", first, s.iterations_used,
                       s.change_history.empty() ? std::nan("") : s.change_history.back()));
        }
    }
}

void criterion5() {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> nd;
    auto random_cvec = [&](int n) {
        cvec v(static_cast<size_t>(n));
        for (auto& x : v) x = cplx(nd(rng), nd(rng));
        return v;
    };

    if (wanted("5.round-trip")) {
        const Grid g = make_grid(1 << 12, 7.5, 0.37);
        const cvec f = random_cvec(g.N);
        const double e = max_abs_diff(inverse_ft(forward_ft(state_samples(g, f))).values, f) / max_abs(f);
        report("5.round-trip", e <= 1e-12, fmt("relative %.2e <= 1e-12", e));
    }
    if (wanted("5.parseval")) {
        const Grid g = make_grid(1 << 12, 7.5, 0.37);
        const cvec f = random_cvec(g.N);
        const auto fh = forward_ft(state_samples(g, f)).values;
        double ex = 0, ek = 0;
        for (int i = 0; i < g.N; ++i) {
            ex += std::norm(f[i]);
            ek += std::norm(fh[i]);
        }
        ex *= g.dx;
        ek *= g.dxi / (2 * std::numbers::pi);
        const double e = std::abs(ex - ek) / ex;
        report("5.parseval", e <= 1e-10, fmt("relative %.2e <= 1e-10", e));
    }
    // Inputs vanish at node 0 and at node -N/2, where the symmetric sign is zero.
    const Grid g = make_grid(1 << 11, 16.0);
    if (wanted("5.involution")) {
        cvec f = random_cvec(g.N);
        f[0] = 0.0;
        f[g.zero_index()] = 0.0;
        const auto fh = forward_ft(state_samples(g, f));
        const double e = max_abs_diff(hilbert_sign(hilbert_sign(fh)).values, fh.values) / max_abs(fh.values);
        report("5.involution", e <= 1e-12, fmt("sign Hilbert applied twice, relative %.2e <= 1e-12", e));
    }
    if (wanted("5.sum-identity")) {
        double worst = 0;
        for (auto m : {HilbertMethod::SignSymmetric, HilbertMethod::Sinc, HilbertMethod::Quadrature}) {
            const Grid gg = m == HilbertMethod::Quadrature ? make_grid(512, 16.0) : g;
            const auto fh = fourier_samples(gg, random_cvec(gg.N));
            const auto p = decompose(fh, gg.x(gg.zero_index() + 37), m);
            cvec s(fh.values.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = p.plus.values[i] + p.minus.values[i];
            worst = std::max(worst, max_abs_diff(s, fh.values) / max_abs(fh.values));
        }
        report("5.sum-identity", worst <= 1e-12, fmt("plus + minus vs input, relative %.2e <= 1e-12", worst));
    }
    if (wanted("5.idempotence")) {
        const int k = g.zero_index() + 101;
        cvec f = random_cvec(g.N);
        f[k] = 0.0;
        f[(k + g.N / 2) % g.N] = 0.0;
        const auto fh = forward_ft(state_samples(g, f));
        const auto p = decompose(fh, g.x(k), HilbertMethod::SignSymmetric);
        const auto pp = decompose(p.plus, g.x(k), HilbertMethod::SignSymmetric);
        const auto mm = decompose(p.minus, g.x(k), HilbertMethod::SignSymmetric);
        const double e = std::max(max_abs_diff(pp.plus.values, p.plus.values), max_abs_diff(mm.minus.values, p.minus.values)) /
                         max_abs(fh.values);
        report("5.idempotence", e <= 1e-12, fmt("P+P+ = P+, P-P- = P-, relative %.2e <= 1e-12", e));
    }
    if (wanted("5.eigen")) {
        cvec fp(static_cast<size_t>(g.N)), fm(static_cast<size_t>(g.N));
        for (int i = 0; i < g.N; ++i) {
            const double x = g.x(i);
            fp[i] = x > 0 ? x * std::exp(-x) : 0.0;
            fm[i] = x < 0 ? -x * std::exp(-x * x) : 0.0;
        }
        const auto fph = forward_ft(state_samples(g, fp));
        const auto fmh = forward_ft(state_samples(g, fm));
        cvec neg = fmh.values;
        for (auto& v : neg) v = -v;
        const double e = std::max(max_abs_diff(hilbert_sign(fph).values, fph.values) / max_abs(fph.values),
                                  max_abs_diff(hilbert_sign(fmh).values, neg) / max_abs(fmh.values));
        report("5.eigen", e <= 1e-12, fmt("iH f+ = f+, iH f- = -f-, relative %.2e <= 1e-12", e));
    }
    if (wanted("5.factorize")) {
        double worst = 0;
        for (auto c : kCases) {
            const Problem p = make_case(c);
            const Grid gi = grid_for_interval(p.a, p.b, 1 << 12, 4);
            const Grid go = make_grid(gi.N, gi.x_max);
            const cvec k = truncated_samples(p.kernel, go, -(p.b - p.a), p.b - p.a, 1.0);
            cvec l = forward_ft(state_samples(go, k)).values;
            for (auto& v : l) v = p.lambda - v;
            for (auto m : {HilbertMethod::SignSymmetric, HilbertMethod::Sinc}) {
                const auto [lp, lm] = factorize(fourier_samples(go, l), m);
                double e = 0;
                for (int i = 0; i < go.N; ++i) e = std::max(e, std::abs(lp.values[i] * lm.values[i] - l[i]));
                worst = std::max(worst, e / max_abs(l));
            }
        }
        report("5.factorize", worst <= 1e-10, fmt("l+ l- vs l on the three case symbols, relative %.2e <= 1e-10", worst));
    }
}

void criterion6() {
    const std::pair<std::string, std::function<SampledFunction(const SampledFunction&)>> methods[] = {
        {"sign", [](const SampledFunction& f) { return hilbert_sign(f); }},
        {"sinc", [](const SampledFunction& f) { return hilbert_sinc(f); }}};
    for (const auto& [name, h] : methods) {
        const std::string id = "6." + name;
        if (!wanted(id)) continue;
        std::vector<double> errs;
        for (int N : {1 << 10, 1 << 11, 1 << 12}) {
            const Grid g = make_grid(N, std::sqrt(N / 16.0));
            cvec v(static_cast<size_t>(N));
            for (int i = 0; i < N; ++i) v[i] = std::exp(-g.xi(i) * g.xi(i));
            const auto fh = fourier_samples(g, v);
            errs.push_back(max_abs_diff_paired(h(fh).values, hilbert_quadrature(fh).values));
        }
        bool improving = true;
        for (size_t i = 1; i < errs.size(); ++i) improving = improving && (errs[i] < errs[i - 1] || errs[i] <= 1e-14);
        report(id, errs[0] <= 1e-6 && improving,
               fmt("max abs vs quadrature at N=1024,2048,4096 %s; first <= 1e-6 and non-increasing",
                   list(errs, "%.2e").c_str()));
    }
}

void criterion7() {
    for (auto c : kCases) {
        const std::string id = "7." + to_string(c);
        if (!wanted(id)) continue;
        const double r = verify_case(make_case(c), 9);
        report(id, r <= 1e-8, fmt("residual at 9 interior points %.2e <= 1e-8", r));
    }
}

void criterion8() {
    const double threshold = 1e-2;
    for (auto c : kCases) {
        const Problem p = make_case(c);
        auto err = [&](const Solution& s, int i) { return std::abs(s.f[i] - p.analytic_solution(s.x[i])); };
        const std::string id_raw = "8." + to_string(c) + ".unfiltered";
        if (wanted(id_raw)) {
            std::vector<double> amp;
            SolverConfig cfg = default_config(Method::WhSinc);
            cfg.filter = FilterSpec::none();
            for (int N : {1 << 11, 1 << 12, 1 << 13}) {
                const Solution s = solve_instance(p, Method::WhSinc, N, cfg);
                amp.push_back(err(s, s.index_a + 1));
            }
            const bool ok = std::all_of(amp.begin(), amp.end(), [&](double v) { return v > threshold; });
            report(id_raw, ok, fmt("sinc error next to a at N=2048,4096,8192 %s > %g", list(amp, "%.2e").c_str(), threshold));
        }
        const std::string id_f = "8." + to_string(c) + ".filtered";
        if (wanted(id_f)) {
            const int N = 1 << 12;
            SolverConfig raw = default_config(Method::WhSinc);
            raw.filter = FilterSpec::none();
            const Solution s0 = solve_instance(p, Method::WhSinc, N, raw);
            const Solution s1 = solve_instance(p, Method::WhSinc, N, default_config(Method::WhSinc));
            const double e0 = err(s0, s0.index_a + 2), e1 = err(s1, s1.index_a + 2);
            report(id_f, e0 >= 10 * e1,
                   fmt("error two nodes from a: unfiltered %.2e, order-8 filter %.2e, reduction %.2fx >= 10x", e0, e1, e0 / e1));
        }
    }
}

void criterion9() {
    // envelope: twice the largest probe error
    const double factor = 2.0;
    for (auto c : kCases) {
        const std::string id = "9." + to_string(c);
        if (!wanted(id)) continue;
        const Problem p = make_case(c);
        double worst_ratio = 0;
        for (int N : {1 << 10, 1 << 12, 1 << 14}) {
            const Solution s = solve_instance(p, Method::WhSign, N, default_config(Method::WhSign));
            const auto pe = probe_errors(p, s);
            const double env = *std::max_element(pe.begin(), pe.end());
            for (int i = s.index_a + 1; i < s.index_b; ++i)
                worst_ratio = std::max(worst_ratio, std::abs(s.f[i] - p.analytic_solution(s.x[i])) / env);
        }
        report(id, worst_ratio <= factor,
               fmt("interior error / probe envelope %.3f <= %g at N=1024,4096,16384", worst_ratio, factor));
    }
}

std::set<std::string> split_ids(const std::string& s) {
    std::set<std::string> out;
    std::stringstream ss(s);
    for (std::string t; std::getline(ss, t, ',');)
        if (!t.empty()) out.insert(t);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<std::string> blocked;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--expect-blocked" && i + 1 < argc) {
            blocked = split_ids(argv[++i]);
        } else if (a == "--only" && i + 1 < argc) {
            only_prefix = argv[++i];
        } else {
            std::fprintf(stderr, "usage: %s [--expect-blocked id,...] [--only prefix]\n", argv[0]);
            return 1;
        }
    }

    const std::function<void()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                              criterion6, criterion7, criterion8, criterion9};
    for (size_t k = 0; k < std::size(criteria); ++k) {
        if (!wanted(std::to_string(k + 1))) continue;
        try {
            criteria[k]();
        } catch (const std::exception& e) {
            report(std::to_string(k + 1) + ".error", false, e.what());
        }
    }

    int passed = 0, failed = 0, unexpected = 0;
    for (const auto& o : outcomes) {
        (o.pass ? passed : failed)++;
        const bool expect_fail = blocked.count(o.id) > 0;
        if (o.pass == expect_fail) {
            ++unexpected;
            std::printf("UNEXPECTED  %s %s\n", o.id.c_str(), o.pass ? "passed but is listed as blocked" : "failed");
        }
    }
    for (const auto& id : blocked)
        if (std::none_of(outcomes.begin(), outcomes.end(), [&](const Outcome& o) { return o.id == id; }) &&
            only_prefix.empty())
            std::printf("NOTE  blocked id %s was not run\n", id.c_str());
    std::printf("%d passed, %d failed (%zu expected blocked), %d unexpected\n", passed, failed, blocked.size(), unexpected);
    return unexpected == 0 ? 0 : 1;
}
