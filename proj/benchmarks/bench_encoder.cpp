#include <benchmark/benchmark.h>

#include "picod/encoder.hpp"
#include "picod/instance.hpp"
#include "picod/oracle.hpp"
#include "picod/rng.hpp"

namespace {

picod::KFoldColoring all_distinct(int m) {
    std::vector<std::vector<int>> assign(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) assign[static_cast<size_t>(v)] = {v};
    return picod::KFoldColoring(1, m, std::move(assign));
}

void ValidateMdsClique(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto inst = picod::complete_two_uniform(m);
    std::vector<int> full(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) full[static_cast<size_t>(i)] = i;
    const auto g =
        picod::mds_matrix(all_distinct(m), full, picod::gf::next_prime_at_least(m), inst);
    for (auto _ : state) benchmark::DoNotOptimize(picod::validate_encoder(g, inst).valid);
}

void EncodeDecodeClique(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto inst = picod::complete_two_uniform(m);
    std::vector<int> full(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) full[static_cast<size_t>(i)] = i;
    const auto g =
        picod::mds_matrix(all_distinct(m), full, picod::gf::next_prime_at_least(m), inst);
    const auto report = picod::validate_encoder(g, inst);
    picod::Rng rng(5);
    std::vector<int> x(static_cast<size_t>(m));
    for (auto& v : x) v = rng.uniform_int(0, g.q() - 1);
    const auto codeword = picod::encode(g, x);
    for (auto _ : state)
        for (const auto& verdict : report.verdicts)
            benchmark::DoNotOptimize(picod::decode(verdict, g, inst, codeword, x).vertex);
}

void BruteForceLengthClique4(benchmark::State& state) {
    const auto inst = picod::complete_two_uniform(4);
    for (auto _ : state) {
        auto result = picod::brute_force_length(inst, 2, 1, 4);
        benchmark::DoNotOptimize(result->length);
    }
}

}  // namespace

BENCHMARK(ValidateMdsClique)->Arg(10)->Arg(20);
BENCHMARK(EncodeDecodeClique)->Arg(10)->Arg(20);
BENCHMARK(BruteForceLengthClique4);
