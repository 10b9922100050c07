#include <heisenring/eigensolver.hpp>
#include <heisenring/entanglement.hpp>
#include <heisenring/hamiltonian.hpp>
#include <heisenring/thermodynamics.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace heisenring;

static Matrix random_symmetric(std::size_t dim) {
    std::mt19937_64 rng(dim);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
    return a;
}

static void BM_Eigh(benchmark::State& state) {
    const Matrix a = random_symmetric(static_cast<std::size_t>(state.range(0)));
    const bool vectors = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(eigh(a, vectors));
}
BENCHMARK(BM_Eigh)->ArgsProduct({{32, 126, 252, 462}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_FullSpectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const bool vectors = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(full_spectrum(n, vectors));
}
BENCHMARK(BM_FullSpectrum)->ArgsProduct({{8, 9, 10, 11}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_ThresholdTemperature(benchmark::State& state) {
    const auto spec = full_spectrum(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(threshold_temperature(spec));
}
BENCHMARK(BM_ThresholdTemperature)->Arg(4)->Arg(11)->Unit(benchmark::kMicrosecond);

static void BM_FidelityThreshold(benchmark::State& state) {
    const auto spec = full_spectrum(4, true);
    const auto ghz = GhzSpec::neel(4, +1);
    for (auto _ : state) benchmark::DoNotOptimize(fidelity_threshold(spec, ghz));
}
BENCHMARK(BM_FidelityThreshold)->Unit(benchmark::kMicrosecond);

static void BM_WoottersOracle(benchmark::State& state) {
    const auto spec = full_spectrum(static_cast<int>(state.range(0)), true);
    for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence_oracle(spec, 1.0));
}
BENCHMARK(BM_WoottersOracle)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
