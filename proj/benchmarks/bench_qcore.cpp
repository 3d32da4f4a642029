#include <benchmark/benchmark.h>

#include "corrwit/dynamics.hpp"
#include "corrwit/hermitian_eig.hpp"
#include "corrwit/states.hpp"

using namespace corrwit;

static void BM_Tensor(benchmark::State& state) {
    const ComplexMatrix a = pauli(Pauli::X);
    const ComplexMatrix b = pauli(Pauli::Y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor(a, b));
    }
}
BENCHMARK(BM_Tensor);

static void BM_PartialTrace(benchmark::State& state) {
    const ComplexMatrix joint = build_state(StateFamily::werner_like(0.4)).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace_env(joint));
    }
}
BENCHMARK(BM_PartialTrace);

static void BM_ExchangeUnitary(benchmark::State& state) {
    double alpha = 0.0;
    for (auto _ : state) {
        alpha += 1e-3;
        benchmark::DoNotOptimize(exchange_unitary(Alpha{alpha}));
    }
}
BENCHMARK(BM_ExchangeUnitary);

static void BM_EvolveReduced(benchmark::State& state) {
    const DensityMatrix joint = build_state(StateFamily::pure_mixed(0.3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_reduced(joint, Alpha{0.9}));
    }
}
BENCHMARK(BM_EvolveReduced);

static void BM_JacobiEigensystem4(benchmark::State& state) {
    const ComplexMatrix m = build_state(StateFamily::werner_like(0.25)).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigensystem(m));
    }
}
BENCHMARK(BM_JacobiEigensystem4);

BENCHMARK_MAIN();
