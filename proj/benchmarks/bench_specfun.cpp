#include <benchmark/benchmark.h>

#include "geew/specfun.hpp"

using namespace geew::specfun;

static void BM_GammaQ(benchmark::State& state) {
    // series side for small z, continued fraction for large z
    const double z = static_cast<double>(state.range(0)) / 4.0;
    for (auto _ : state) benchmark::DoNotOptimize(regularized_gamma_q(2.5, z));
}
BENCHMARK(BM_GammaQ)->Arg(1)->Arg(8)->Arg(80);

// continuation to negative a, as used by the moment series
static void BM_LogUpperGammaNegative(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(detail::log_upper_incomplete_gamma(-3.3, z));
}
BENCHMARK(BM_LogUpperGammaNegative)->Arg(4)->Arg(30);

static void BM_InverseGammaP(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(inverse_regularized_gamma_p(0.7, 0.3));
}
BENCHMARK(BM_InverseGammaP);

static void BM_LambertW(benchmark::State& state) {
    double x = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambert_w_principal(x));
        x = x < 1e6 ? x * 1.7 : 1e-3;
    }
}
BENCHMARK(BM_LambertW);

static void BM_Kummer(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kummer_1f1(0.3, 1.9, z));
}
BENCHMARK(BM_Kummer)->Arg(-20)->Arg(1)->Arg(20);

static void BM_FoxWright(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fox_wright_1psi0({2.8, 0.8, -0.5, true}));
}
BENCHMARK(BM_FoxWright);

static void BM_Whittaker(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(whittaker_w({0.1, 0.3, 5.0}));
}
BENCHMARK(BM_Whittaker);

static void BM_MeijerG1331(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(meijer_g_1331({0.25, 0.75, 0.0, 0.5, 0.25}));
}
BENCHMARK(BM_MeijerG1331);
