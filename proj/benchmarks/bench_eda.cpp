#include <benchmark/benchmark.h>

#include "edalab/eda.hpp"
#include "edalab/nk.hpp"
#include "edalab/pattern.hpp"

using namespace edalab;

namespace {

NkInstance instance_with_optimum(int n, int k, std::uint64_t seed) {
    NkInstance inst = generate_instance(n, k, seed);
    inst.optimum = enumerate_optimum(inst);
    return inst;
}

EdaConfig small_config(std::uint64_t seed) {
    EdaConfig cfg;
    cfg.mu = 50;
    cfg.lambda = 20;
    cfg.max_evals = 2000;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

static void bm_run_boa(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const NkInstance inst = instance_with_optimum(n, 2, 21);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RunTrace trace = run_boa(inst, small_config(seed++));
        benchmark::DoNotOptimize(trace);
    }
}
BENCHMARK(bm_run_boa)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void bm_run_fboa(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const NkInstance inst = instance_with_optimum(n, 2, 22);
    UpdatePattern pattern;
    pattern.p.assign(40, 0.5);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RunTrace trace = run_fboa(inst, small_config(seed++), pattern);
        benchmark::DoNotOptimize(trace);
    }
}
BENCHMARK(bm_run_fboa)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
