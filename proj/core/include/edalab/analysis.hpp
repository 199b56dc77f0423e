#ifndef EDALAB_ANALYSIS_HPP
#define EDALAB_ANALYSIS_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edalab/eda.hpp"
#include "edalab/pattern.hpp"

namespace edalab {

/// Aggregated campaign summary feeding the runtime estimate.
struct CampaignStats {
    int t_s = 0;                          // successful runs
    int t_total = 0;                      // total runs
    std::vector<long long> success_T;     // evaluations per successful run
    std::vector<long long> success_U;     // model rebuilds per successful run
    double fail_U = 0.0;                  // rebuilds of a full-budget run
    long long t_max = 0;
    int mu = 0;
    int n = 0;
};

/// E[T] = ((1 - ps)/ps) * t_max + mean(success_T) with ps = t_s/t_total.
/// Campaigns without a single success report +infinity.
double expected_evals(const CampaignStats& stats);

/// E[U] = ((1 - ps)/ps) * fail_U + mean(success_U).
double expected_adjustments(const CampaignStats& stats);

struct ErtReport {
    double e_t = 0.0;
    double e_u = 0.0;
    double ert = 0.0;
};

/// Elementary-operation runtime estimate:
/// ert = mu*n*E[T] + 2*(n^5 + n^4)*E[U].
ErtReport estimate_runtime(const CampaignStats& stats);

struct RegressionFit {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double r2 = 0.0;

    bool operator==(const RegressionFit&) const = default;
};

/// OLS of log(ert) on log(k). Points must be positive with at least two
/// distinct k values.
RegressionFit loglog_regression(const std::vector<std::pair<double, double>>& points);

/// Average multiplicative separation between two fitted curves over the given
/// k grid, back-transformed from log space. Symmetric under swapping the two
/// fits: distance(a,b) * distance(b,a) == 1.
double curve_distance(const RegressionFit& fit_a, const RegressionFit& fit_b,
                      const std::vector<double>& k_values);

struct McNemarResult {
    long long b = 0;  // first succeeded, second failed
    long long c = 0;  // first failed, second succeeded
    double statistic = 0.0;
    double p = 1.0;
};

/// Continuity-corrected McNemar chi-square on paired success flags:
/// chi2 = max(|b-c|-1, 0)^2 / (b+c), p from the chi-square(1) tail.
McNemarResult mcnemar(const std::vector<std::pair<bool, bool>>& paired);

/// Rebuild count of a run that exhausts its full iteration budget: i_max for
/// the standard algorithm (null pattern), sum of the clamped schedule
/// probabilities otherwise.
double full_budget_rebuilds(const UpdatePattern* pattern, long long i_max);

CampaignStats make_campaign_stats(std::span<const RunTrace> traces, double fail_u,
                                  long long t_max, int mu, int n);

// --- campaign result files -------------------------------------------------

/// One row per (algorithm, N, K, landscape) of the per-landscape results CSV.
struct ResultRow {
    std::string algorithm;
    int n = 0;
    int k = 0;
    int landscape = 0;
    int t_s = 0;
    int t_total = 0;
    double mean_gap = 0.0;
    double e_t = 0.0;
    double e_u = 0.0;
    double ert = 0.0;
    double fail_u = 0.0;
    long long i_max = 0;
    int mu = 0;
    long long t_max = 0;
};

/// One row per run of the raw per-run export.
struct RunRow {
    std::string algorithm;
    int n = 0;
    int k = 0;
    int landscape = 0;
    int run = 0;
    std::uint64_t seed = 0;
    bool success = false;
    long long evals = 0;
    int iterations = 0;
    int rebuilds = 0;
    double best_fitness = 0.0;
    double gap = 0.0;
};

void write_results_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results_csv(const std::filesystem::path& path);

void write_runs_csv(const std::filesystem::path& path, const std::vector<RunRow>& rows);
std::vector<RunRow> read_runs_csv(const std::filesystem::path& path);

}  // namespace edalab

#endif
