#include <benchmark/benchmark.h>

#include <vector>

#include "critpoly/critpoly.hpp"

using namespace critpoly;

namespace {

RootSet disk_config(std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, n));
    return sample_configuration(Generator::kDisk, n, 1.0, rng);
}

void BM_FindRoots(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f = from_roots(disk_config(n, 1));
    for (auto _ : state) {
        auto res = find_roots(f.coeffs());
        benchmark::DoNotOptimize(res.roots);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindRoots)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_CriticalPoints(benchmark::State& state) {
    const RootSet r = disk_config(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(critical_points(r));
}
BENCHMARK(BM_CriticalPoints)->RangeMultiplier(2)->Range(4, 64);

void BM_Gamma(benchmark::State& state) {
    const RootSet r = disk_config(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(gamma(r).gamma);
}
BENCHMARK(BM_Gamma)->DenseRange(3, 12, 3);

// Exponent as p * 10 so the range stays integral.
void BM_SigmaP(benchmark::State& state) {
    const RootSet r = disk_config(16, 4);
    const double p = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(sigma_p(r, p).value);
}
BENCHMARK(BM_SigmaP)->Arg(10)->Arg(11)->Arg(15)->Arg(30)->Arg(80);

void BM_SigmaInf(benchmark::State& state) {
    const RootSet r = disk_config(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(sigma_inf(r).value);
}
BENCHMARK(BM_SigmaInf)->RangeMultiplier(4)->Range(4, 64);

void BM_FuzzAllSuites(benchmark::State& state) {
    FuzzConfig cfg;
    cfg.suites = {Suite::kSchoenberg, Suite::kCentroidDisk, Suite::kVarianceBound, Suite::kRefinedRadius,
                  Suite::kPawlowski};
    cfg.degrees = {static_cast<std::size_t>(state.range(0))};
    cfg.trials = 100;
    cfg.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(run_fuzz(cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(cfg.trials));
}
BENCHMARK(BM_FuzzAllSuites)->Arg(4)->Arg(12);

void BM_SearchRestart(benchmark::State& state) {
    SearchConfig cfg;
    cfg.degree = static_cast<std::size_t>(state.range(0));
    cfg.restarts = 1;
    cfg.local_iters = 200;
    cfg.seed = 11;
    for (auto _ : state) benchmark::DoNotOptimize(maximize_gamma(cfg).best_gamma);
}
BENCHMARK(BM_SearchRestart)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
