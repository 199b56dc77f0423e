#include <benchmark/benchmark.h>

#include "edalab/bnet.hpp"
#include "edalab/rng.hpp"

using namespace edalab;

namespace {

// Rows with chained dependencies, the shape the learner sees mid-run.
DataSet correlated_rows(int vars, int rows, std::uint64_t seed) {
    Rng rng(seed);
    DataSet data;
    data.num_vars = vars;
    data.rows.reserve(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        std::vector<std::uint8_t> row(static_cast<std::size_t>(vars));
        row[0] = static_cast<std::uint8_t>(rng.next_below(2));
        for (int q = 1; q < vars; ++q)
            row[q] = rng.next_bernoulli(0.8) ? row[q - 1]
                                             : static_cast<std::uint8_t>(rng.next_below(2));
        data.rows.push_back(std::move(row));
    }
    return data;
}

}  // namespace

static void bm_k2_learn(benchmark::State& state) {
    const int vars = static_cast<int>(state.range(0));
    const DataSet data = correlated_rows(vars, 40, 5);
    std::vector<int> order(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) order[static_cast<std::size_t>(i)] = i;
    for (auto _ : state) {
        Dag dag = k2_learn(data, order);
        benchmark::DoNotOptimize(dag);
    }
}
BENCHMARK(bm_k2_learn)->Arg(10)->Arg(14)->Arg(18);

static void bm_fit_params(benchmark::State& state) {
    const int vars = static_cast<int>(state.range(0));
    const DataSet data = correlated_rows(vars, 40, 6);
    std::vector<int> order(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) order[static_cast<std::size_t>(i)] = i;
    const Dag dag = k2_learn(data, order);
    for (auto _ : state) {
        Cpt cpt = fit_params(dag, data);
        benchmark::DoNotOptimize(cpt);
    }
}
BENCHMARK(bm_fit_params)->Arg(10)->Arg(18);

static void bm_sample(benchmark::State& state) {
    const int vars = static_cast<int>(state.range(0));
    const DataSet data = correlated_rows(vars, 40, 7);
    std::vector<int> order(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) order[static_cast<std::size_t>(i)] = i;
    const Dag dag = k2_learn(data, order);
    const BayesNet net{dag, fit_params(dag, data)};
    Rng rng(8);
    for (auto _ : state) {
        DataSet out = sample(net, 100, rng);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(bm_sample)->Arg(10)->Arg(18);

static void bm_shd(benchmark::State& state) {
    const int vars = static_cast<int>(state.range(0));
    std::vector<int> order(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) order[static_cast<std::size_t>(i)] = i;
    const Dag a = k2_learn(correlated_rows(vars, 40, 9), order);
    const Dag b = k2_learn(correlated_rows(vars, 40, 10), order);
    for (auto _ : state) benchmark::DoNotOptimize(shd(a, b));
}
BENCHMARK(bm_shd)->Arg(10)->Arg(18);
