#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "whsolve/cases.hpp"
#include "whsolve/solvers.hpp"

namespace whsolve {

enum class Method { WhSign, WhSinc, Voronin, Quadrature };

std::string to_string(Method m);
Method parse_method(const std::string& name);

// wh-sinc gets the order-8 exponential filter; the others run unfiltered.
SolverConfig default_config(Method m);
std::vector<int> default_n_list(Method m);

struct RunSpec {
    CaseKind case_kind = CaseKind::Gaussian;
    Method method = Method::WhSign;
    // For the quadrature method N is the number of panels (N + 1 nodes), so N matches the
    // FFT grid spacing when N_quad = N_fft / (2 * m_trunc).
    std::vector<int> N_list;
    double a = 0.0;
    double b = 1.0;
    SolverConfig config;
    std::vector<double> probes{0.1, 0.5, 0.9};
    int quad_order = 4;

    void validate() const;
};

RunSpec default_spec(CaseKind c, Method m);

struct Row {
    int N = 0;
    double probe_frac = 0.0;
    double probe_x = 0.0;
    double abs_error = 0.0;  // NaN on a failed solve
    double cpu_seconds = 0.0;
    int iterations = 0;
    bool converged = true;
    bool failed = false;
    std::string message;
};

struct ConvergenceReport {
    CaseKind case_kind = CaseKind::Gaussian;
    Method method = Method::WhSign;
    std::vector<double> probes;
    std::vector<Row> rows;
    std::vector<std::optional<double>> slopes;  // one per probe

    bool all_converged() const;
    bool any_failed() const;
};

// Solves one instance; N is the FFT grid size or the quadrature panel count.
Solution solve_instance(const Problem& problem, Method m, int N, const SolverConfig& config, int quad_order = 4);

// Rows for distinct N run concurrently on up to `threads` workers (0: WHSOLVE_THREADS or hardware).
ConvergenceReport run_sweep(const RunSpec& spec, int threads = 0);

int sweep_threads(std::size_t tasks);

// Least-squares slope of log(err) vs log(N); points with err < 100*eps or non-finite are dropped.
std::optional<double> fit_slope(const std::vector<int>& N, const std::vector<double>& err);

std::string format_double(double v);

std::string csv_header();
void write_csv(const ConvergenceReport& report, std::ostream& os);
void emit_csv(const ConvergenceReport& report, const std::filesystem::path& path);

struct CsvRecord {
    std::string case_name;
    std::string method;
    Row row;
};
std::vector<CsvRecord> parse_csv(std::istream& is);

// JSON object keyed "case/method" with per-probe slopes, best error and total CPU seconds.
std::string emit_profile(const std::vector<ConvergenceReport>& reports);

}  // namespace whsolve
