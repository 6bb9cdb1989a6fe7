#include <benchmark/benchmark.h>

#include <random>

#include "preimage/preimage.hpp"

using namespace preimage;

namespace {

StateSet random_subset(std::size_t n, std::uint64_t seed, std::size_t size) {
    std::mt19937_64 rng(seed);
    StateSet s(n);
    while (s.size() < size) s.insert(static_cast<State>(rng() % n));
    return s;
}

void BM_PairTable(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Automaton a = random_automaton(n, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(PairTable(a).all_compressible());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairTable)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_GreedyReset(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Automaton a = random_automaton(n, 2, 2, RandomConstraint::synchronizing);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_reset_word(a));
}
BENCHMARK(BM_GreedyReset)->RangeMultiplier(2)->Range(64, 512);

void BM_ExtendPair(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Automaton a = random_automaton(n, 2, 3);
    const StateSet s = random_subset(n, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(shortest_extending_word_small(a, s));
}
BENCHMARK(BM_ExtendPair)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

// Permutation automata never resize, so the basis grows to full size.
void BM_ResizePermutation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Automaton a = random_automaton(n, 2, 4, RandomConstraint::permutation);
    const StateSet s = random_subset(n, 4, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(shortest_resizing_word(a, s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ResizePermutation)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond)->Complexity();

void BM_AvoidingWord(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Automaton a = random_automaton(n, 2, 5);
    const StateSet s = random_subset(n, 5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(avoiding_word(a, s));
}
BENCHMARK(BM_AvoidingWord)->RangeMultiplier(2)->Range(64, 512);

void BM_OracleExtend(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Automaton a = random_automaton(n, 2, 6);
    const StateSet s = random_subset(n, 6, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_shortest(a, s, Goal::totally_extending));
}
BENCHMARK(BM_OracleExtend)->DenseRange(8, 16, 4);

}  // namespace

BENCHMARK_MAIN();
