// whsolve: convergence sweeps, case checks and single solves from the command line.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "whsolve/bench.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNoConvergence = 2;

struct Common {
    std::string case_name = "gaussian";
    std::string method = "wh-sign";
    std::optional<double> a, b;
    int m_trunc = 4;
    std::optional<int> filter_order;
    int max_iter = 5;
    double tol = 1e-12;
    std::vector<double> probes{0.1, 0.5, 0.9};
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--case", c.case_name, "gaussian | cauchy | laplace")
        ->check(CLI::IsMember({"gaussian", "cauchy", "laplace"}));
    cmd->add_option("--method", c.method, "wh-sign | wh-sinc | voronin | quadrature")
        ->check(CLI::IsMember({"wh-sign", "wh-sinc", "voronin", "quadrature"}));
    cmd->add_option("--a", c.a, "left end of the interval (default depends on the case)");
    cmd->add_option("--b", c.b, "right end of the interval (default depends on the case)");
    cmd->add_option("--m-trunc", c.m_trunc, "state-space half-width in units of b-a")->check(CLI::PositiveNumber);
    cmd->add_option("--filter-order", c.filter_order,
                    "exponential filter order, 0 for none (default 8 for wh-sinc, none otherwise)");
    cmd->add_option("--max-iter", c.max_iter, "fixed-point iteration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", c.tol, "fixed-point tolerance on the sup-norm change")->check(CLI::PositiveNumber);
    cmd->add_option("--probes", c.probes, "probe fractions of [a,b]")->delimiter(',');
}

whsolve::RunSpec to_spec(const Common& c, const std::vector<int>& ns) {
    using namespace whsolve;
    RunSpec s = default_spec(parse_case(c.case_name), parse_method(c.method));
    if (c.a) s.a = *c.a;
    if (c.b) s.b = *c.b;
    if (!ns.empty()) s.N_list = ns;
    s.config.m_trunc = c.m_trunc;
    s.config.max_iter = c.max_iter;
    s.config.fp_tol = c.tol;
    if (c.filter_order) s.config.filter = *c.filter_order == 0 ? FilterSpec::none() : FilterSpec::exponential(*c.filter_order);
    s.probes = c.probes;
    return s;
}

int run_bench(const Common& c, const std::vector<int>& ns, const std::string& out, const std::string& profile) {
    const auto spec = to_spec(c, ns);
    const auto rep = whsolve::run_sweep(spec);
    whsolve::emit_csv(rep, out);
    if (!profile.empty()) {
        std::ofstream os(profile);
        if (!os) throw std::runtime_error("cannot open '" + profile + "' for writing");
        os << whsolve::emit_profile({rep});
    }
    for (size_t i = 0; i < rep.probes.size(); ++i) {
        std::cout << "probe " << whsolve::format_double(rep.probes[i]) << " slope ";
        if (rep.slopes[i])
            std::printf("%.3f\n", *rep.slopes[i]);
        else
            std::cout << "n/a\n";
    }
    for (const auto& r : rep.rows)
        if (r.failed) std::cerr << "N=" << r.N << ": " << r.message << '\n';
    return rep.all_converged() ? kOk : kNoConvergence;
}

int run_solve(const Common& c, int n) {
    using namespace whsolve;
    const auto spec = to_spec(c, {n});
    spec.validate();
    const Problem p = make_case(spec.case_kind, spec.a, spec.b);
    const Solution s = solve_instance(p, spec.method, n, spec.config, spec.quad_order);
    std::printf("# %s %s N=%d iterations=%d converged=%s\n", to_string(spec.case_kind).c_str(),
                to_string(spec.method).c_str(), n, s.iterations_used, s.converged ? "yes" : "no");
    std::printf("%-10s %-22s %-22s %-22s\n", "probe", "x", "f", "abs_error");
    for (double pf : spec.probes) {
        const int i = s.nearest(spec.a + pf * (spec.b - spec.a));
        const double err = std::abs(s.f[i] - p.analytic_solution(s.x[i]));
        std::printf("%-10s %-22s %-22s %-22s\n", format_double(pf).c_str(), format_double(s.x[i]).c_str(),
                    format_double(s.f[i]).c_str(), format_double(err).c_str());
    }
    return s.converged ? kOk : kNoConvergence;
}

int run_verify(const std::string& case_name, std::optional<double> a, std::optional<double> b, int n_check) {
    using namespace whsolve;
    const CaseKind k = parse_case(case_name);
    auto [da, db] = default_interval(k);
    const Problem p = make_case(k, a.value_or(da), b.value_or(db));
    const double r = verify_case(p, n_check);
    std::printf("%s on [%s, %s]: max residual %s at %d points\n", case_name.c_str(), format_double(p.a).c_str(),
                format_double(p.b).c_str(), format_double(r).c_str(), n_check);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener-Hopf and Nystrom solvers for convolution integral equations"};
    app.require_subcommand(1);

    Common bench;
    std::vector<int> ns;
    std::string out, profile;
    auto* b = app.add_subcommand("bench", "run an N sweep and write a CSV report");
    add_common(b, bench);
    b->add_option("--n", ns, "comma-separated N values (strictly increasing)")->delimiter(',');
    b->add_option("--out", out, "CSV output path")->required();
    b->add_option("--profile", profile, "optional JSON summary path");

    Common solve;
    int n_solve = 1024;
    auto* s = app.add_subcommand("solve", "solve one instance and print f at the probes");
    add_common(s, solve);
    s->add_option("--n", n_solve, "grid size (panel count for quadrature)");

    std::string vcase = "gaussian";
    std::optional<double> va, vb;
    int n_check = 9;
    auto* v = app.add_subcommand("verify", "check a case's closed-form forcing by adaptive quadrature");
    v->add_option("--case", vcase, "gaussian | cauchy | laplace")->check(CLI::IsMember({"gaussian", "cauchy", "laplace"}));
    v->add_option("--a", va, "left end");
    v->add_option("--b", vb, "right end");
    v->add_option("--points", n_check, "number of interior check points")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*b) return run_bench(bench, ns, out, profile);
        if (*s) return run_solve(solve, n_solve);
        if (*v) return run_verify(vcase, va, vb, n_check);
    } catch (const std::exception& e) {
        std::cerr << "whsolve: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
