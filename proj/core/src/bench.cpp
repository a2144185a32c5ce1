#include "whsolve/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "whsolve/errors.hpp"

namespace whsolve {

std::string to_string(Method m) {
    switch (m) {
        case Method::WhSign: return "wh-sign";
        case Method::WhSinc: return "wh-sinc";
        case Method::Voronin: return "voronin";
        case Method::Quadrature: return "quadrature";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "wh-sign") return Method::WhSign;
    if (name == "wh-sinc") return Method::WhSinc;
    if (name == "voronin") return Method::Voronin;
    if (name == "quadrature") return Method::Quadrature;
    throw Error("unknown method '" + name + "' (expected wh-sign, wh-sinc, voronin or quadrature)");
}

SolverConfig default_config(Method m) {
    SolverConfig c;
    if (m == Method::WhSinc) {
        c.hilbert = HilbertMethod::Sinc;
        c.filter = FilterSpec::exponential(8);
    }
    return c;
}

std::vector<int> default_n_list(Method m) {
    std::vector<int> v;
    const int lo = m == Method::Quadrature ? 7 : 9;
    for (int k = lo; k <= lo + 5; ++k) v.push_back(1 << k);
    return v;
}

void RunSpec::validate() const {
    if (N_list.empty()) throw Error("run spec: N list is empty");
    for (size_t i = 1; i < N_list.size(); ++i)
        if (N_list[i] <= N_list[i - 1]) throw Error("run spec: N list must be strictly increasing");
    if (probes.empty()) throw Error("run spec: no probes");
    for (double p : probes)
        if (!(p > 0.0 && p < 1.0)) throw Error("run spec: probes must lie strictly inside (0, 1)");
    config.validate();
    make_case(case_kind, a, b);
}

RunSpec default_spec(CaseKind c, Method m) {
    RunSpec s;
    s.case_kind = c;
    s.method = m;
    s.N_list = default_n_list(m);
    std::tie(s.a, s.b) = default_interval(c);
    s.config = default_config(m);
    return s;
}

bool ConvergenceReport::all_converged() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.failed || r.converged; });
}

bool ConvergenceReport::any_failed() const {
    return std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.failed; });
}

Solution solve_instance(const Problem& problem, Method m, int N, const SolverConfig& config, int quad_order) {
    switch (m) {
        case Method::Quadrature: return solve_fredholm_quadrature(problem, N + 1, quad_order);
        case Method::WhSign:
        case Method::WhSinc: {
            const Grid g = grid_for_interval(problem.a, problem.b, N, config.m_trunc);
            return solve_fredholm_wh(problem, g, config);
        }
        case Method::Voronin: {
            const Grid g = grid_for_interval(problem.a, problem.b, N, config.m_trunc);
            return solve_fredholm_voronin(problem, g, config);
        }
    }
    throw Error("unknown method");
}

int sweep_threads(std::size_t tasks) {
    int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("WHSOLVE_THREADS")) {
        int cap = 0;
        const char* end = env + std::char_traits<char>::length(env);
        auto [ptr, ec] = std::from_chars(env, end, cap);
        if (ec == std::errc() && ptr == end && cap >= 1) n = std::min(n, cap);
    }
    return static_cast<int>(std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(n), tasks)));
}

namespace {

double thread_cpu_seconds() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::vector<Row> run_one(const RunSpec& spec, const Problem& problem, int N) {
    std::vector<Row> rows;
    const double t0 = thread_cpu_seconds();
    try {
        const Solution s = solve_instance(problem, spec.method, N, spec.config, spec.quad_order);
        // The clock ticks in nanoseconds; keep the reported time strictly positive.
        const double cpu = std::max(thread_cpu_seconds() - t0, 1e-9);
        for (double p : spec.probes) {
            const int i = s.nearest(spec.a + p * (spec.b - spec.a));
            Row r;
            r.N = N;
            r.probe_frac = p;
            r.probe_x = s.x[i];
            r.abs_error = std::abs(s.f[i] - problem.analytic_solution(s.x[i]));
            r.cpu_seconds = cpu;
            r.iterations = s.iterations_used;
            r.converged = s.converged;
            rows.push_back(r);
        }
    } catch (const std::exception& e) {
        const double cpu = std::max(thread_cpu_seconds() - t0, 1e-9);
        for (double p : spec.probes) {
            Row r;
            r.N = N;
            r.probe_frac = p;
            r.probe_x = spec.a + p * (spec.b - spec.a);
            r.abs_error = std::numeric_limits<double>::quiet_NaN();
            r.cpu_seconds = cpu;
            r.converged = false;
            r.failed = true;
            r.message = e.what();
            rows.push_back(r);
        }
    }
    return rows;
}

}  // namespace

ConvergenceReport run_sweep(const RunSpec& spec, int threads) {
    spec.validate();
    const Problem problem = make_case(spec.case_kind, spec.a, spec.b);
    const size_t n = spec.N_list.size();
    std::vector<std::vector<Row>> per_n(n);
    const int workers = threads > 0 ? std::min<int>(threads, static_cast<int>(n)) : sweep_threads(n);
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t k; (k = next.fetch_add(1)) < n;) per_n[k] = run_one(spec, problem, spec.N_list[k]);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    ConvergenceReport rep;
    rep.case_kind = spec.case_kind;
    rep.method = spec.method;
    rep.probes = spec.probes;
    for (auto& v : per_n)
        for (auto& r : v) rep.rows.push_back(std::move(r));
    for (double p : spec.probes) {
        std::vector<int> Ns;
        std::vector<double> errs;
        for (const auto& r : rep.rows)
            if (r.probe_frac == p && !r.failed) {
                Ns.push_back(r.N);
                errs.push_back(r.abs_error);
            }
        rep.slopes.push_back(fit_slope(Ns, errs));
    }
    return rep;
}

std::optional<double> fit_slope(const std::vector<int>& N, const std::vector<double>& err) {
    const double floor = 100.0 * std::numeric_limits<double>::epsilon();
    std::vector<double> lx, ly;
    for (size_t i = 0; i < N.size() && i < err.size(); ++i) {
        if (!std::isfinite(err[i]) || err[i] < floor || N[i] <= 0) continue;
        lx.push_back(std::log(static_cast<double>(N[i])));
        ly.push_back(std::log(err[i]));
    }
    if (lx.size() < 2) return std::nullopt;
    const double n = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    if (sxx == 0.0) return std::nullopt;
    return sxy / sxx;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

std::string csv_header() { return "case,method,N,probe_frac,probe_x,abs_error,cpu_seconds,iterations"; }

void write_csv(const ConvergenceReport& rep, std::ostream& os) {
    os << csv_header() << '\n';
    const std::string c = to_string(rep.case_kind), m = to_string(rep.method);
    for (const auto& r : rep.rows) {
        os << c << ',' << m << ',' << r.N << ',' << format_double(r.probe_frac) << ',' << format_double(r.probe_x)
           << ',' << format_double(r.abs_error) << ',' << format_double(r.cpu_seconds) << ',' << r.iterations
           << '\n';
    }
}

void emit_csv(const ConvergenceReport& rep, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_csv(rep, os);
    os.flush();
    if (!os) throw std::runtime_error("write failed for '" + path.string() + "'");
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

template <class T>
T parse_num(const std::string& s) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::runtime_error("bad CSV number '" + s + "'");
    return v;
}

}  // namespace

std::vector<CsvRecord> parse_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != csv_header()) throw std::runtime_error("CSV header mismatch");
    std::vector<CsvRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 8) throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields");
        CsvRecord rec;
        rec.case_name = f[0];
        rec.method = f[1];
        rec.row.N = parse_num<int>(f[2]);
        rec.row.probe_frac = parse_num<double>(f[3]);
        rec.row.probe_x = parse_num<double>(f[4]);
        rec.row.abs_error = parse_num<double>(f[5]);
        rec.row.cpu_seconds = parse_num<double>(f[6]);
        rec.row.iterations = parse_num<int>(f[7]);
        rec.row.failed = std::isnan(rec.row.abs_error);
        out.push_back(std::move(rec));
    }
    return out;
}

std::string emit_profile(const std::vector<ConvergenceReport>& reports) {
    if (reports.empty()) throw Error("emit_profile: no reports");
    nlohmann::json root = nlohmann::json::object();
    for (const auto& rep : reports) {
        nlohmann::json slopes = nlohmann::json::object();
        for (size_t i = 0; i < rep.probes.size(); ++i) {
            const auto& s = i < rep.slopes.size() ? rep.slopes[i] : std::nullopt;
            slopes[format_double(rep.probes[i])] = s ? nlohmann::json(*s) : nlohmann::json(nullptr);
        }
        double best = std::numeric_limits<double>::infinity();
        double cpu = 0.0;
        int last_n = -1;
        for (const auto& r : rep.rows) {
            if (!r.failed) best = std::min(best, r.abs_error);
            // Each solve contributes one time, repeated across its probe rows.
            if (r.N != last_n) cpu += r.cpu_seconds;
            last_n = r.N;
        }
        nlohmann::json entry = nlohmann::json::object();
        entry["best_error"] = std::isfinite(best) ? nlohmann::json(best) : nlohmann::json(nullptr);
        entry["slopes"] = slopes;
        entry["total_cpu_seconds"] = cpu;
        root[to_string(rep.case_kind) + "/" + to_string(rep.method)] = entry;
    }
    return root.dump(2) + "\n";
}

}  // namespace whsolve
