#include <benchmark/benchmark.h>

#include "hedonic/partition.hpp"

using namespace hedonic;

static void BM_PartitionStream(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t total = 0;
    for (auto _ : state) {
        PartitionStream stream(n);
        std::uint64_t count = 0;
        while (auto pi = stream.next()) {
            benchmark::DoNotOptimize(pi->blocks().size());
            ++count;
        }
        total = count;
    }
    state.counters["partitions"] = static_cast<double>(total);
}
BENCHMARK(BM_PartitionStream)->Arg(8)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_BlockLookup(benchmark::State& state) {
    const Partition pi(12, {PlayerSet{1, 4, 7}, PlayerSet{2, 5}, PlayerSet{3, 9, 12},
                            PlayerSet{6, 8}, PlayerSet{10, 11}});
    for (auto _ : state)
        for (int i = 1; i <= 12; ++i)
            benchmark::DoNotOptimize(pi.block_of(i).bits());
}
BENCHMARK(BM_BlockLookup);

BENCHMARK_MAIN();
