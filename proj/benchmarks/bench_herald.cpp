#include <benchmark/benchmark.h>

#include <cmath>

#include "heraldsim/herald.hpp"
#include "heraldsim/spdc.hpp"
#include "heraldsim/sweep.hpp"

namespace {

const double kThetaOpt = std::acos(std::sqrt(1.0 / 3.0));

void BM_ideal_herald_psi3(benchmark::State& state) {
    auto input = heraldsim::psi_n(3);
    for (auto _ : state) {
        auto outcome = heraldsim::ideal_herald(input, {kThetaOpt, kThetaOpt});
        benchmark::DoNotOptimize(outcome.probability);
    }
}
BENCHMARK(BM_ideal_herald_psi3);

void BM_ideal_herald_psi4(benchmark::State& state) {
    auto input = heraldsim::psi_n(4);
    for (auto _ : state) {
        auto outcome = heraldsim::ideal_herald(input, {kThetaOpt, kThetaOpt});
        benchmark::DoNotOptimize(outcome.probability);
    }
}
BENCHMARK(BM_ideal_herald_psi4);

void BM_lossy_herald_psi3(benchmark::State& state) {
    auto input = heraldsim::psi_n(3);
    auto detectors = heraldsim::DetectorModel::uniform(0.8);
    for (auto _ : state) {
        auto outcome = heraldsim::lossy_herald(input, {kThetaOpt, kThetaOpt}, detectors);
        benchmark::DoNotOptimize(outcome.probability);
    }
}
BENCHMARK(BM_lossy_herald_psi3);

void BM_sweep_row(benchmark::State& state) {
    heraldsim::SweepSpec spec;
    spec.theta_count = 2;
    spec.etas = {0.8};
    for (auto _ : state) {
        auto rows = heraldsim::run_sweep(spec);
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_sweep_row);

}  // namespace

BENCHMARK_MAIN();
