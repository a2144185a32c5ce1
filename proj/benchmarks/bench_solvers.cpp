#include <benchmark/benchmark.h>

#include "whsolve/bench.hpp"

using namespace whsolve;

namespace {

void run(benchmark::State& st, Method m) {
    const Problem p = make_case(static_cast<CaseKind>(st.range(1)));
    const int N = static_cast<int>(st.range(0));
    const SolverConfig cfg = default_config(m);
    for (auto _ : st) benchmark::DoNotOptimize(solve_instance(p, m, N, cfg));
    st.SetLabel(to_string(static_cast<CaseKind>(st.range(1))));
}

void BM_WhSign(benchmark::State& st) { run(st, Method::WhSign); }
void BM_WhSinc(benchmark::State& st) { run(st, Method::WhSinc); }
void BM_Voronin(benchmark::State& st) { run(st, Method::Voronin); }
void BM_Quadrature(benchmark::State& st) { run(st, Method::Quadrature); }

void fft_sizes(benchmark::internal::Benchmark* b) {
    for (int c = 0; c < 3; ++c)
        for (int n = 1 << 10; n <= 1 << 14; n *= 4) b->Args({n, c});
}

void panel_counts(benchmark::internal::Benchmark* b) {
    for (int c = 0; c < 3; ++c)
        for (int n = 1 << 7; n <= 1 << 10; n *= 2) b->Args({n, c});
}

BENCHMARK(BM_WhSign)->Apply(fft_sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WhSinc)->Apply(fft_sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Voronin)->Apply(fft_sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Quadrature)->Apply(panel_counts)->Unit(benchmark::kMillisecond);

}  // namespace
