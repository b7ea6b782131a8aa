#include <benchmark/benchmark.h>

#include "geew/distribution.hpp"
#include "geew/identities.hpp"

using namespace geew;

namespace {
const Theta kTheta{0.7, 1.2, 1.8, 2.3};
}

static void BM_Pdf(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(geew_pdf(kTheta, 0.8));
}
BENCHMARK(BM_Pdf);

static void BM_Cdf(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(geew_cdf(kTheta, 0.8));
}
BENCHMARK(BM_Cdf);

static void BM_Quantile(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(geew_quantile(kTheta, 0.37));
}
BENCHMARK(BM_Quantile);

static void BM_Sample(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Generator gen(1);
    for (auto _ : state) benchmark::DoNotOptimize(geew_sample(kTheta, n, gen));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(100000);

static void BM_IMu(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(i_mu_series({2.2, 0.5, 0.8, 1.3}));
}
BENCHMARK(BM_IMu);

static void BM_RawMomentSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(raw_moment_series({1, 0.5, 0.8, 1.5}, 1.0));
}
BENCHMARK(BM_RawMomentSeries);

static void BM_IdentityA(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(identity_a({1, 0.05, 1.5, 0.5}));
}
BENCHMARK(BM_IdentityA);

static void BM_IdentityBCorrected(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(identity_b({1, 0.5, 0.8, 2}, {}, IdentityForm::corrected));
}
BENCHMARK(BM_IdentityBCorrected);

static void BM_IdentityD(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(identity_d({1, 1, 0.4}));
}
BENCHMARK(BM_IdentityD);
