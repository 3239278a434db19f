#include <benchmark/benchmark.h>

#include <cmath>

#include "mdphase/falsifier.hpp"
#include "mdphase/phase_bounds.hpp"
#include "mdphase/propagator.hpp"

using namespace mdphase;

namespace {

void BM_Translate(benchmark::State& state) {
    const auto grid = make_grid(static_cast<int>(state.range(0)), -40.0, 40.0);
    const auto wave = gaussian_packet(grid, 0.0, 1.0, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(translate(wave, 2.5));
    }
}
BENCHMARK(BM_Translate)->Arg(256)->Arg(1024)->Arg(4096);

void BM_SplitStep(benchmark::State& state) {
    const auto grid = make_grid(static_cast<int>(state.range(0)), -40.0, 40.0);
    const auto wave = gaussian_packet(grid, 0.0, 1.0, 0.0);
    const ApparatusHamiltonian h{1.0, Potential::harmonic(0.5), 0.0};
    PropagatorConfig cfg;
    cfg.dt = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagate(wave, h, 0.1, cfg)); // 100 steps
    }
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SplitStep)->Arg(512)->Arg(1024)->Arg(2048);

void BM_DensePropagator(benchmark::State& state) {
    const auto grid = make_grid(static_cast<int>(state.range(0)), -20.0, 20.0);
    const auto wave = gaussian_packet(grid, 0.0, 1.0, 0.0);
    const ApparatusHamiltonian h{1.0, Potential::quartic(0.01), 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagate_dense(wave, h, 1.0));
    }
}
BENCHMARK(BM_DensePropagator)->Arg(64)->Arg(128)->Arg(256);

void BM_OverlapZ(benchmark::State& state) {
    const auto grid = make_grid(512, -40.0, 40.0);
    const auto wave = gaussian_packet(grid, 0.0, 1.0, 0.0);
    const ApparatusHamiltonian h{1.0, Potential::harmonic(0.5), 0.0};
    PropagatorConfig cfg;
    cfg.dt = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(overlap_Z(wave, h, -5.0, 5.0, 0.5, cfg));
    }
}
BENCHMARK(BM_OverlapZ);

void BM_FalsifierTrial(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(falsify_uncertainty(64, seed++));
    }
    state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_FalsifierTrial);

} // namespace

BENCHMARK_MAIN();
