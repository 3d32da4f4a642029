#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "corrwit/detection.hpp"
#include "corrwit/entanglement.hpp"
#include "corrwit/robustness.hpp"
#include "corrwit/states.hpp"

using namespace corrwit;

namespace {
constexpr double kAlphaHeadline = 3.0 * std::numbers::pi / 8.0;
}

static void BM_WitnessDistance(benchmark::State& state) {
    const DensityMatrix joint = build_state(StateFamily::max_entangled());
    const DensityMatrix rho_s(partial_trace_env(joint.matrix()));
    const DensityMatrix rho_final = evolve_reduced(joint, Alpha{kAlphaHeadline});
    for (auto _ : state) {
        benchmark::DoNotOptimize(witness_distance(rho_s, rho_final, Alpha{kAlphaHeadline}));
    }
}
BENCHMARK(BM_WitnessDistance);

static void BM_Detect(benchmark::State& state) {
    const DensityMatrix joint = build_state(StateFamily::werner_like(0.4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect(joint, Alpha{kAlphaHeadline}));
    }
}
BENCHMARK(BM_Detect);

static void BM_ScanAlpha(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k) {
        grid[k] = std::numbers::pi * static_cast<double>(k) / static_cast<double>(count - 1);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_alpha(StateFamily::pure_mixed(0.35), grid));
    }
}
BENCHMARK(BM_ScanAlpha)->Arg(51)->Arg(201);

static void BM_Concurrence(benchmark::State& state) {
    const DensityMatrix rho = build_state(StateFamily::werner_like(0.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(concurrence(rho));
    }
}
BENCHMARK(BM_Concurrence);

static void BM_RobustnessCheck(benchmark::State& state) {
    const DensityMatrix joint = build_state(StateFamily::pure_mixed(0.6));
    const DensityMatrix rho_s(partial_trace_env(joint.matrix()));
    const DensityMatrix rho_final = evolve_reduced(joint, Alpha{kAlphaHeadline});
    for (auto _ : state) {
        benchmark::DoNotOptimize(robustness_check(rho_s, rho_final, Alpha{kAlphaHeadline}));
    }
}
BENCHMARK(BM_RobustnessCheck);

BENCHMARK_MAIN();
