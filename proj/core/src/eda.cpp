#include "edalab/eda.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "edalab/bnet.hpp"
#include "edalab/rng.hpp"
#include "io_util.hpp"

namespace edalab {

namespace {

using json = nlohmann::ordered_json;

bool meets_goal(const EdaConfig& cfg, double optimum, double best) {
    if (cfg.success_rule == SuccessRule::exact_optimum) return best >= optimum - 1e-12;
    if (optimum <= 0.0) return best >= optimum - 1e-12;  // gap undefined on flat optima
    return relative_gap(optimum, std::min(best, optimum)) <= cfg.gap_eps;
}

// Indices of the lambda best rows, fitness descending, ties towards the
// lexicographically smaller bitstring.
std::vector<std::size_t> select_best(const std::vector<std::vector<std::uint8_t>>& rows,
                                     const std::vector<double>& fitness, int lambda) {
    std::vector<std::size_t> idx(rows.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (fitness[a] != fitness[b]) return fitness[a] > fitness[b];
        return rows[a] < rows[b];
    });
    idx.resize(static_cast<std::size_t>(lambda));
    return idx;
}

RunTrace run_eda(const NkInstance& inst, const EdaConfig& cfg, const UpdatePattern* pattern) {
    validate_config(cfg);
    if (!inst.optimum)
        throw std::invalid_argument("run: the instance must carry its enumerated optimum");
    const double optimum = inst.optimum->value;

    Rng rng(cfg.seed);
    BayesNet model = uniform_net(inst.n);
    RunTrace trace;

    DataSet population = sample(model, cfg.mu, rng);
    std::vector<double> fitness(population.rows.size());
    for (std::size_t i = 0; i < population.rows.size(); ++i)
        fitness[i] = evaluate(inst, population.rows[i]);
    trace.evals_used = cfg.mu;

    Solution best;
    for (std::size_t i = 0; i < population.rows.size(); ++i)
        if (!best.fitness || fitness[i] > *best.fitness) {
            best.fitness = fitness[i];
            best.bits = population.rows[i];
        }
    trace.best_fitness_series.push_back(*best.fitness);
    trace.success = meets_goal(cfg, optimum, *best.fitness);

    while (!trace.success && trace.evals_used < cfg.max_evals) {
        const int t = trace.iterations + 1;
        bool rebuild = true;
        if (pattern) {
            const double p = pattern_prob_at(*pattern, static_cast<std::size_t>(t));
            // Degenerate probabilities skip the draw so that an all-ones
            // schedule consumes exactly the standard loop's stream.
            if (p >= 1.0) rebuild = true;
            else if (p <= 0.0) rebuild = false;
            else rebuild = rng.next_bernoulli(p);
        }

        if (rebuild) {
            const std::vector<std::size_t> chosen =
                select_best(population.rows, fitness, cfg.lambda);
            DataSet selected;
            selected.num_vars = inst.n;
            selected.rows.reserve(chosen.size());
            for (std::size_t i : chosen) selected.rows.push_back(population.rows[i]);

            const std::vector<int> order =
                cfg.k2_random_order ? rng.permutation(inst.n) : model.structure.order;
            const Dag learned = k2_learn(selected, order, cfg.max_parents);
            trace.shd_series.push_back(shd(model.structure, learned));
            model.params = fit_params(learned, selected);
            model.structure = learned;
        }
        trace.adjustments.push_back(rebuild ? 1 : 0);

        population = sample(model, cfg.mu, rng);
        for (std::size_t i = 0; i < population.rows.size(); ++i)
            fitness[i] = evaluate(inst, population.rows[i]);
        trace.evals_used += cfg.mu;
        ++trace.iterations;

        for (std::size_t i = 0; i < population.rows.size(); ++i)
            if (fitness[i] > *best.fitness) {
                best.fitness = fitness[i];
                best.bits = population.rows[i];
            }
        trace.best_fitness_series.push_back(*best.fitness);
        trace.success = meets_goal(cfg, optimum, *best.fitness);
    }

    trace.best = std::move(best);
    trace.final_structure = dump_structure(model.structure);
    return trace;
}

}  // namespace

void validate_config(const EdaConfig& cfg) {
    if (cfg.mu < 1) throw std::invalid_argument("config: mu must be positive");
    if (cfg.lambda < 1) throw std::invalid_argument("config: lambda must be positive");
    if (cfg.lambda > cfg.mu)
        throw std::invalid_argument("config: lambda cannot exceed mu");
    if (cfg.max_evals < cfg.mu)
        throw std::invalid_argument("config: the budget must cover the initial sample");
    if (!(cfg.gap_eps >= 0.0 && cfg.gap_eps <= 1.0))
        throw std::invalid_argument("config: gap_eps must lie in [0, 1]");
}

long long max_iterations(const EdaConfig& cfg) {
    validate_config(cfg);
    return (cfg.max_evals - 1) / cfg.mu;
}

int RunTrace::rebuild_count() const {
    return static_cast<int>(std::count_if(adjustments.begin(), adjustments.end(),
                                          [](std::uint8_t f) { return f != 0; }));
}

RunTrace run_boa(const NkInstance& inst, const EdaConfig& cfg) {
    return run_eda(inst, cfg, nullptr);
}

RunTrace run_fboa(const NkInstance& inst, const EdaConfig& cfg, const UpdatePattern& pattern) {
    return run_eda(inst, cfg, &pattern);
}

std::vector<RunTrace> run_campaign(std::span<const NkInstance> instances, const EdaConfig& cfg,
                                   int runs, const UpdatePattern* pattern, int jobs) {
    validate_config(cfg);
    if (runs < 1) throw std::invalid_argument("campaign: runs must be positive");
    if (jobs < 1) throw std::invalid_argument("campaign: jobs must be positive");

    const std::size_t total = instances.size() * static_cast<std::size_t>(runs);
    std::vector<RunTrace> traces(total);
    auto worker_body = [&](std::size_t task) {
        const std::size_t j = task / static_cast<std::size_t>(runs);
        const std::size_t i = task % static_cast<std::size_t>(runs);
        EdaConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed + j * static_cast<std::size_t>(runs) + i;
        traces[task] = run_eda(instances[j], run_cfg, pattern);
    };

    if (jobs == 1 || total <= 1) {
        for (std::size_t task = 0; task < total; ++task) worker_body(task);
        return traces;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
        workers.reserve(count);
        for (std::size_t w = 0; w < count; ++w)
            workers.emplace_back([&] {
                for (std::size_t task = next.fetch_add(1); task < total;
                     task = next.fetch_add(1)) {
                    try {
                        worker_body(task);
                    } catch (...) {
                        const std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
    }
    if (first_error) std::rethrow_exception(first_error);
    return traces;
}

std::vector<RunTrace> trace_shd_campaign(std::span<const NkInstance> instances,
                                         const EdaConfig& cfg, int runs, int jobs) {
    return run_campaign(instances, cfg, runs, nullptr, jobs);
}

void save_trace(const std::filesystem::path& path, const RunTrace& trace, const TraceMeta& meta) {
    json j;
    j["algorithm"] = meta.algorithm;
    j["n"] = meta.n;
    j["k"] = meta.k;
    j["landscape"] = meta.landscape;
    j["run"] = meta.run;
    j["seed"] = meta.seed;
    j["mu"] = meta.mu;
    j["lambda"] = meta.lambda;
    j["t_max"] = meta.t_max;
    j["iterations"] = trace.iterations;
    j["evals_used"] = trace.evals_used;
    j["success"] = trace.success;
    j["adjustments"] = trace.adjustments;
    j["shd_series"] = trace.shd_series;
    j["best_fitness_series"] = trace.best_fitness_series;
    j["best_bits"] = trace.best.bits;
    if (trace.best.fitness) j["best_fitness"] = *trace.best.fitness;
    j["final_structure"] = trace.final_structure;
    detail::write_file_atomically(path, j.dump());
}

std::pair<RunTrace, TraceMeta> load_trace(const std::filesystem::path& path) {
    const json j = json::parse(detail::read_file(path));
    TraceMeta meta;
    meta.algorithm = j.at("algorithm").get<std::string>();
    meta.n = j.at("n").get<int>();
    meta.k = j.at("k").get<int>();
    meta.landscape = j.at("landscape").get<int>();
    meta.run = j.at("run").get<int>();
    meta.seed = j.at("seed").get<std::uint64_t>();
    meta.mu = j.at("mu").get<int>();
    meta.lambda = j.at("lambda").get<int>();
    meta.t_max = j.at("t_max").get<long long>();

    RunTrace trace;
    trace.iterations = j.at("iterations").get<int>();
    trace.evals_used = j.at("evals_used").get<long long>();
    trace.success = j.at("success").get<bool>();
    trace.adjustments = j.at("adjustments").get<std::vector<std::uint8_t>>();
    trace.shd_series = j.at("shd_series").get<std::vector<int>>();
    trace.best_fitness_series = j.at("best_fitness_series").get<std::vector<double>>();
    trace.best.bits = j.at("best_bits").get<std::vector<std::uint8_t>>();
    if (j.contains("best_fitness")) trace.best.fitness = j.at("best_fitness").get<double>();
    trace.final_structure = j.at("final_structure").get<std::string>();
    return {std::move(trace), std::move(meta)};
}

}  // namespace edalab
