#include <benchmark/benchmark.h>

#include "edalab/nk.hpp"
#include "edalab/rng.hpp"

using namespace edalab;

static void bm_generate_instance(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        NkInstance inst = generate_instance(n, k, seed++);
        benchmark::DoNotOptimize(inst);
    }
}
BENCHMARK(bm_generate_instance)->Args({10, 2})->Args({14, 6})->Args({18, 10});

static void bm_evaluate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const NkInstance inst = generate_instance(n, k, 7);
    Rng rng(3);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_below(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(inst, bits));
        // march through the space so the table accesses vary
        bits[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(n)))] ^= 1;
    }
}
BENCHMARK(bm_evaluate)->Args({10, 2})->Args({14, 6})->Args({18, 10})->Args({18, 16});

static void bm_enumerate_optimum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const NkInstance inst = generate_instance(n, 4, 11);
    for (auto _ : state) {
        Optimum opt = enumerate_optimum(inst);
        benchmark::DoNotOptimize(opt);
    }
}
BENCHMARK(bm_enumerate_optimum)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
