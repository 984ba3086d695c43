#include <benchmark/benchmark.h>

#include "hedonic/dynamics.hpp"
#include "hedonic/rng.hpp"
#include "hedonic/stability.hpp"

using namespace hedonic;

namespace {

CharacteristicFunction random_game(int n, std::uint64_t seed) {
    Xorshift64 rng(seed);
    std::vector<double> singletons(static_cast<std::size_t>(n));
    for (double& v : singletons) v = rng.next_uniform(0.0, 2.0);
    std::unordered_map<std::uint32_t, double> deltas;
    const std::uint32_t universe = PlayerSet::full(n).bits();
    for (std::uint32_t m = 1; m <= universe; ++m)
        if (PlayerSet(m).size() >= 2) deltas[m] = rng.next_uniform(-1.0, 1.0);
    return CharacteristicFunction::from_marginals(n, singletons, deltas);
}

}  // namespace

static void BM_RunDynamics(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AllocationRule rule{SymmetricRelativeGain{random_game(n, 31)}};
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto trace = run_dynamics(rule, seed++, 200);
        benchmark::DoNotOptimize(trace.outcome.rounds);
    }
}
BENCHMARK(BM_RunDynamics)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

static void BM_FindNashStable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AllocationRule rule{SymmetricRelativeGain{random_game(n, 32)}};
    for (auto _ : state) {
        auto stable = find_nash_stable(rule);
        benchmark::DoNotOptimize(stable.size());
    }
}
BENCHMARK(BM_FindNashStable)->Arg(6)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_BestReply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AllocationRule rule{SymmetricRelativeGain{random_game(n, 33)}};
    const auto sigma = StrategyProfile::all_distinct(n);
    int player = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(best_reply(rule, sigma, player));
        player = player % n + 1;
    }
}
BENCHMARK(BM_BestReply)->Arg(6)->Arg(10);
