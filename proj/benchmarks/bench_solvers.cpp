#include <benchmark/benchmark.h>

#include "hedonic/nash_core.hpp"
#include "hedonic/rng.hpp"
#include "hedonic/social_optimum.hpp"

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

static void BM_RelaxedEfficiencyFit(benchmark::State& state) {
    const auto u = random_game(static_cast<int>(state.range(0)), 21);
    for (auto _ : state) {
        auto fit = relaxed_efficiency_fit(u);
        benchmark::DoNotOptimize(fit.objective);
    }
}
BENCHMARK(BM_RelaxedEfficiencyFit)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_LlsFit(benchmark::State& state) {
    const auto u = random_game(static_cast<int>(state.range(0)), 22);
    for (auto _ : state) {
        auto fit = lls_fit(u);
        benchmark::DoNotOptimize(fit.residual);
    }
}
BENCHMARK(BM_LlsFit)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_NcoreScan(benchmark::State& state) {
    const auto u = random_game(static_cast<int>(state.range(0)), 23);
    for (auto _ : state) {
        auto result = ncore_feasible(u);
        benchmark::DoNotOptimize(result.has_value());
    }
}
BENCHMARK(BM_NcoreScan)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SocialOptimum(benchmark::State& state) {
    const auto u = random_game(static_cast<int>(state.range(0)), 24);
    for (auto _ : state) {
        auto [pi, value] = social_optimum(u);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_SocialOptimum)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
