#include <benchmark/benchmark.h>

#include "picod/collection.hpp"
#include "picod/coloring.hpp"
#include "picod/instance.hpp"

namespace {

void CfCheckGreedy(benchmark::State& state) {
    const auto inst = picod::random_instance(120, static_cast<int>(state.range(0)), 2, 6, 3);
    const auto coloring = picod::greedy_cf_coloring(inst, 3);
    for (auto _ : state) benchmark::DoNotOptimize(picod::is_cf(coloring, inst));
}

void GreedyColoring(benchmark::State& state) {
    const auto inst = picod::random_instance(120, static_cast<int>(state.range(0)), 2, 6, 3);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto coloring = picod::greedy_cf_coloring(inst, ++seed);
        benchmark::DoNotOptimize(coloring.palette_size());
    }
}

void ExactPalettePentagonFold2(benchmark::State& state) {
    const auto pentagon = picod::named_instance("pentagon");
    for (auto _ : state) {
        auto result = picod::exact_chi_cf(pentagon, 2, 10);
        benchmark::DoNotOptimize(result->colors);
    }
}

void CoveringConstruction(benchmark::State& state) {
    const auto inst = picod::clustered_instance(static_cast<int>(state.range(0)), 2, 2, 11);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto built = picod::build_log2_collection(inst, ++seed);
        benchmark::DoNotOptimize(built.collection.total_colors());
    }
}

}  // namespace

BENCHMARK(CfCheckGreedy)->Arg(200)->Arg(800);
BENCHMARK(GreedyColoring)->Arg(200)->Arg(800);
BENCHMARK(ExactPalettePentagonFold2);
BENCHMARK(CoveringConstruction)->Arg(8)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
