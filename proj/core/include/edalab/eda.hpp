#ifndef EDALAB_EDA_HPP
#define EDALAB_EDA_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "edalab/nk.hpp"
#include "edalab/pattern.hpp"

namespace edalab {

enum class SuccessRule {
    exact_optimum,  // best fitness reaches the enumerated optimum (1e-12 slack)
    relative_gap,   // relative gap to the optimum falls below gap_eps
};

struct EdaConfig {
    int mu = 100;                  // sampled solutions per generation, |S|
    int lambda = 40;               // selected population size, |P|
    long long max_evals = 50000;   // evaluation budget
    SuccessRule success_rule = SuccessRule::exact_optimum;
    double gap_eps = 0.0;
    std::uint64_t seed = 0;
    bool k2_random_order = false;  // per-run random node order for the learner
    int max_parents = -1;          // parent cap forwarded to the learner, <0 = none
};

void validate_config(const EdaConfig& cfg);

/// Number of loop iterations a run performs when it exhausts the full budget:
/// the initial sample costs mu evaluations and each iteration costs mu more.
long long max_iterations(const EdaConfig& cfg);

/// Per-run record. `iterations` counts optimisation loop iterations (the
/// initial sample is iteration zero's predecessor and is not counted);
/// evals_used == (iterations + 1) * mu. `adjustments` holds one flag per
/// iteration; `shd_series` holds the structural Hamming distance between
/// consecutive learned structures, recorded at rebuild iterations only.
/// `best_fitness_series` tracks the best-so-far fitness after the initial
/// sample and after every iteration (length iterations + 1).
struct RunTrace {
    int iterations = 0;
    long long evals_used = 0;
    std::vector<std::uint8_t> adjustments;
    std::vector<int> shd_series;
    std::vector<double> best_fitness_series;
    bool success = false;
    Solution best;
    std::string final_structure;  // adjacency dump of the last model

    int rebuild_count() const;

    bool operator==(const RunTrace&) const = default;
};

/// The standard loop: sample mu solutions, keep the best lambda, relearn the
/// model every iteration. The instance must carry its enumerated optimum.
RunTrace run_boa(const NkInstance& inst, const EdaConfig& cfg);

/// Schedule-driven variant: iteration t rebuilds the model only with
/// probability p_t taken from `pattern` (clamped at its last entry);
/// otherwise structure and parameters are reused verbatim. p_t >= 1 rebuilds
/// and p_t <= 0 skips without consuming randomness, so an all-ones pattern
/// reproduces run_boa draw for draw.
RunTrace run_fboa(const NkInstance& inst, const EdaConfig& cfg, const UpdatePattern& pattern);

/// Runs `runs` repetitions per instance; run i of instance j uses seed
/// cfg.seed + j*runs + i. Null pattern means the standard algorithm. Traces
/// come back ordered by (instance, run) regardless of `jobs`.
std::vector<RunTrace> run_campaign(std::span<const NkInstance> instances, const EdaConfig& cfg,
                                   int runs, const UpdatePattern* pattern, int jobs = 1);

/// Standard-algorithm campaign used to collect SHD vectors for pattern
/// extraction.
std::vector<RunTrace> trace_shd_campaign(std::span<const NkInstance> instances,
                                         const EdaConfig& cfg, int runs, int jobs = 1);

struct TraceMeta {
    std::string algorithm;  // "boa" | "fboa"
    int n = 0;
    int k = 0;
    int landscape = 0;
    int run = 0;
    std::uint64_t seed = 0;
    int mu = 0;
    int lambda = 0;
    long long t_max = 0;
};

void save_trace(const std::filesystem::path& path, const RunTrace& trace, const TraceMeta& meta);
std::pair<RunTrace, TraceMeta> load_trace(const std::filesystem::path& path);

}  // namespace edalab

#endif
