#include <benchmark/benchmark.h>

#include <random>

#include "setmatch/matching.hpp"
#include "setmatch/oracles.hpp"

using namespace setmatch;

namespace {

WeightFn monotone(int n, std::uint64_t cap, std::mt19937_64& rng) {
    WeightFn w(n);
    for (SetMask s = 0; s < (SetMask{1} << n); ++s) {
        std::uint64_t bound = cap;
        for (int i = 0; i < n; ++i) {
            if ((s >> i) & 1U) bound = std::min(bound, w(s & ~(SetMask{1} << i)));
        }
        w[s] = rng() % (bound + 1);
    }
    return w;
}

void BM_DownSetWords(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(down_set_words(n));
}
BENCHMARK(BM_DownSetWords)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_WeightedMatching(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    WeightFn f = monotone(n, 8, rng);
    WeightFn g = monotone(n, 8, rng);
    if (f.total() > g.total()) std::swap(f, g);
    for (auto _ : state) benchmark::DoNotOptimize(weighted_disjoint_matching(f, g));
}
BENCHMARK(BM_WeightedMatching)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_SelfMatchingAllDownSets(benchmark::State& state) {
    const auto families = enumerate_down_sets(5);
    for (auto _ : state) {
        for (const auto& a : families) benchmark::DoNotOptimize(self_matching(a));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * families.size()));
}
BENCHMARK(BM_SelfMatchingAllDownSets)->Unit(benchmark::kMillisecond);

void BM_MaxIntersectingSubfamily(benchmark::State& state) {
    const Family cube = Family::power_set(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_subfamily(cube, PairwiseProperty::intersecting()));
}
BENCHMARK(BM_MaxIntersectingSubfamily)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
