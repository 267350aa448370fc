// SPDX-License-Identifier: Apache-2.0

#include "qhelix/dss.hpp"
#include "qhelix/ewl.hpp"
#include "qhelix/simulator.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

namespace {

using namespace qhelix;

void BM_BuildEwlCircuit(benchmark::State& state) {
    StrategyAngles theta;
    theta.theta.assign(static_cast<std::size_t>(state.range(0)), 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_ewl_circuit(theta));
    }
}
BENCHMARK(BM_BuildEwlCircuit)->DenseRange(2, 8);

void BM_PlayGame(benchmark::State& state) {
    StrategyAngles theta;
    theta.theta.assign(static_cast<std::size_t>(state.range(0)), 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(play_game(theta));
    }
}
BENCHMARK(BM_PlayGame)->DenseRange(2, 12);

void BM_ApplyHadamardLayer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto sv = uniform_superposition(n);
    for (auto _ : state) {
        for (int q = 0; q < n; ++q) {
            sv = apply_gate(std::move(sv), {GateKind::H, {q}});
        }
        benchmark::DoNotOptimize(sv);
    }
}
BENCHMARK(BM_ApplyHadamardLayer)->DenseRange(4, 12, 2);

void BM_Sample8192(benchmark::State& state) {
    const auto dist = probabilities(uniform_superposition(4));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(dist, 8192, seed++));
    }
}
BENCHMARK(BM_Sample8192);

void BM_Trajectory(benchmark::State& state) {
    RecommenderScores scores;
    scores.q = {0.5, 0.32, 0.5, 0.5};
    const auto h = build_hamiltonian(scores, 2.0 * std::numbers::pi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            trajectory(h, uniform_dss_state(), 50.0, static_cast<int>(state.range(0)),
                       TrajectoryMode::Survival));
    }
}
BENCHMARK(BM_Trajectory)->Arg(500)->Arg(5000);

} // namespace

BENCHMARK_MAIN();
