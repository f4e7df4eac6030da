#include <benchmark/benchmark.h>

#include "picod/instance.hpp"

namespace {

void IntersectionProfileClique(benchmark::State& state) {
    const auto inst = picod::complete_two_uniform(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto profile = picod::intersection_profile(inst);
        benchmark::DoNotOptimize(profile.gamma);
    }
    state.SetComplexityN(inst.receiver_count());
}

void IntersectionProfileClustered(benchmark::State& state) {
    const auto inst = picod::clustered_instance(static_cast<int>(state.range(0)), 2, 4, 7);
    for (auto _ : state) {
        auto profile = picod::intersection_profile(inst);
        benchmark::DoNotOptimize(profile.gamma);
    }
}

void RandomInstanceGeneration(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto inst = picod::random_instance(200, static_cast<int>(state.range(0)), 2, 6, ++seed);
        benchmark::DoNotOptimize(inst.receiver_count());
    }
}

}  // namespace

BENCHMARK(IntersectionProfileClique)->Arg(20)->Arg(40)->Arg(60)->Complexity();
BENCHMARK(IntersectionProfileClustered)->Arg(64)->Arg(256);
BENCHMARK(RandomInstanceGeneration)->Arg(100)->Arg(400);
