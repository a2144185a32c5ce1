#include <benchmark/benchmark.h>

#include <cmath>

#include "whsolve/decomp.hpp"
#include "whsolve/spectral.hpp"

using namespace whsolve;

namespace {

SampledFunction gaussian_hat(int N) {
    const Grid g = make_grid(N, std::sqrt(N / 16.0));
    cvec v(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) v[i] = std::exp(-g.xi(i) * g.xi(i));
    return fourier_samples(g, std::move(v));
}

void BM_ForwardInverse(benchmark::State& st) {
    const auto fh = gaussian_hat(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(forward_ft(inverse_ft(fh)));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_ForwardInverse)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_HilbertSign(benchmark::State& st) {
    const auto fh = gaussian_hat(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(hilbert_sign(fh));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_HilbertSign)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_HilbertSinc(benchmark::State& st) {
    const auto fh = gaussian_hat(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(hilbert_sinc(fh));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_HilbertSinc)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_HilbertQuadrature(benchmark::State& st) {
    const auto fh = gaussian_hat(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(hilbert_quadrature(fh));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_HilbertQuadrature)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Complexity(benchmark::oNSquared);

void BM_Factorize(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    const Grid g = make_grid(N, 8.0);
    cvec l(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) l[i] = 1.0 - 0.5 * std::exp(-g.xi(i) * g.xi(i) / 4);
    const auto lh = fourier_samples(g, std::move(l));
    for (auto _ : st) benchmark::DoNotOptimize(factorize(lh, HilbertMethod::SignSymmetric));
}
BENCHMARK(BM_Factorize)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

}  // namespace
