#include "edalab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "io_util.hpp"

namespace edalab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_stats(const CampaignStats& stats) {
    if (stats.t_total < 1) throw std::invalid_argument("stats: no runs");
    if (stats.t_s < 0 || stats.t_s > stats.t_total)
        throw std::invalid_argument("stats: success count out of range");
    if (stats.success_T.size() != static_cast<std::size_t>(stats.t_s) ||
        stats.success_U.size() != static_cast<std::size_t>(stats.t_s))
        throw std::invalid_argument("stats: one entry per successful run expected");
}

double mean_ll(const std::vector<long long>& v) {
    long long sum = 0;
    for (long long x : v) sum += x;
    return static_cast<double>(sum) / static_cast<double>(v.size());
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               const std::string& expected_header) {
    std::istringstream in(detail::read_file(path));
    std::string line;
    if (!std::getline(in, line) || line != expected_header)
        throw std::runtime_error("unexpected csv header in " + path.string());
    std::vector<std::vector<std::string>> rows;
    const std::size_t width = split_csv_line(expected_header).size();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != width)
            throw std::runtime_error("ragged csv row in " + path.string());
        rows.push_back(std::move(fields));
    }
    return rows;
}

constexpr const char* kResultsHeader =
    "algorithm,n,k,landscape,t_s,t_total,mean_gap,e_t,e_u,ert,fail_u,i_max,mu,t_max";
constexpr const char* kRunsHeader =
    "algorithm,n,k,landscape,run,seed,success,evals,iterations,rebuilds,best_fitness,gap";

}  // namespace

double expected_evals(const CampaignStats& stats) {
    check_stats(stats);
    if (stats.t_s == 0) return kInf;
    const double ps = static_cast<double>(stats.t_s) / static_cast<double>(stats.t_total);
    return ((1.0 - ps) / ps) * static_cast<double>(stats.t_max) + mean_ll(stats.success_T);
}

double expected_adjustments(const CampaignStats& stats) {
    check_stats(stats);
    if (stats.t_s == 0) return kInf;
    const double ps = static_cast<double>(stats.t_s) / static_cast<double>(stats.t_total);
    return ((1.0 - ps) / ps) * stats.fail_U + mean_ll(stats.success_U);
}

ErtReport estimate_runtime(const CampaignStats& stats) {
    ErtReport report;
    report.e_t = expected_evals(stats);
    report.e_u = expected_adjustments(stats);
    const double n = stats.n;
    report.ert = static_cast<double>(stats.mu) * n * report.e_t +
                 2.0 * (std::pow(n, 5.0) + std::pow(n, 4.0)) * report.e_u;
    return report;
}

RegressionFit loglog_regression(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("regression: at least two points required");
    std::vector<double> xs, ys;
    for (const auto& [k, ert] : points) {
        if (!(k > 0.0) || !(ert > 0.0) || !std::isfinite(ert) || !std::isfinite(k))
            throw std::invalid_argument("regression: points must be positive and finite");
        xs.push_back(std::log(k));
        ys.push_back(std::log(ert));
    }
    const double n = static_cast<double>(xs.size());
    const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw std::invalid_argument("regression: needs at least two distinct k values");

    RegressionFit fit;
    fit.beta1 = sxy / sxx;
    fit.beta0 = mean_y - fit.beta1 * mean_x;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.beta0 + fit.beta1 * xs[i]);
        ss_res += r * r;
    }
    fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

double curve_distance(const RegressionFit& fit_a, const RegressionFit& fit_b,
                      const std::vector<double>& k_values) {
    if (k_values.empty()) throw std::invalid_argument("curve_distance: empty grid");
    double log_ratio_sum = 0.0;
    for (double k : k_values) {
        if (!(k > 0.0)) throw std::invalid_argument("curve_distance: k values must be positive");
        const double lk = std::log(k);
        log_ratio_sum += (fit_a.beta0 + fit_a.beta1 * lk) - (fit_b.beta0 + fit_b.beta1 * lk);
    }
    return std::exp(log_ratio_sum / static_cast<double>(k_values.size()));
}

McNemarResult mcnemar(const std::vector<std::pair<bool, bool>>& paired) {
    if (paired.empty()) throw std::invalid_argument("mcnemar: no paired observations");
    McNemarResult result;
    for (const auto& [first, second] : paired) {
        if (first && !second) ++result.b;
        if (!first && second) ++result.c;
    }
    const long long discordant = result.b + result.c;
    if (discordant == 0) {
        result.statistic = 0.0;
        result.p = 1.0;
        return result;
    }
    const double corrected =
        std::max(std::abs(static_cast<double>(result.b - result.c)) - 1.0, 0.0);
    result.statistic = corrected * corrected / static_cast<double>(discordant);
    // Upper tail of chi-square with one degree of freedom.
    result.p = std::erfc(std::sqrt(result.statistic / 2.0));
    return result;
}

double full_budget_rebuilds(const UpdatePattern* pattern, long long i_max) {
    if (i_max < 0) throw std::invalid_argument("full_budget_rebuilds: negative iteration cap");
    if (!pattern) return static_cast<double>(i_max);
    double total = 0.0;
    for (long long t = 1; t <= i_max; ++t)
        total += std::clamp(pattern_prob_at(*pattern, static_cast<std::size_t>(t)), 0.0, 1.0);
    return total;
}

CampaignStats make_campaign_stats(std::span<const RunTrace> traces, double fail_u,
                                  long long t_max, int mu, int n) {
    CampaignStats stats;
    stats.t_total = static_cast<int>(traces.size());
    for (const RunTrace& trace : traces) {
        if (!trace.success) continue;
        ++stats.t_s;
        stats.success_T.push_back(trace.evals_used);
        stats.success_U.push_back(trace.rebuild_count());
    }
    stats.fail_U = fail_u;
    stats.t_max = t_max;
    stats.mu = mu;
    stats.n = n;
    return stats;
}

void write_results_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << kResultsHeader << '\n';
    for (const ResultRow& r : rows) {
        out << r.algorithm << ',' << r.n << ',' << r.k << ',' << r.landscape << ',' << r.t_s
            << ',' << r.t_total << ',' << detail::format_double(r.mean_gap) << ','
            << detail::format_double(r.e_t) << ',' << detail::format_double(r.e_u) << ','
            << detail::format_double(r.ert) << ',' << detail::format_double(r.fail_u) << ','
            << r.i_max << ',' << r.mu << ',' << r.t_max << '\n';
    }
    detail::write_file_atomically(path, out.str());
}

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path) {
    std::vector<ResultRow> rows;
    for (const auto& f : read_csv(path, kResultsHeader)) {
        ResultRow r;
        r.algorithm = f[0];
        r.n = static_cast<int>(detail::parse_ll(f[1]));
        r.k = static_cast<int>(detail::parse_ll(f[2]));
        r.landscape = static_cast<int>(detail::parse_ll(f[3]));
        r.t_s = static_cast<int>(detail::parse_ll(f[4]));
        r.t_total = static_cast<int>(detail::parse_ll(f[5]));
        r.mean_gap = detail::parse_double(f[6]);
        r.e_t = detail::parse_double(f[7]);
        r.e_u = detail::parse_double(f[8]);
        r.ert = detail::parse_double(f[9]);
        r.fail_u = detail::parse_double(f[10]);
        r.i_max = detail::parse_ll(f[11]);
        r.mu = static_cast<int>(detail::parse_ll(f[12]));
        r.t_max = detail::parse_ll(f[13]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_runs_csv(const std::filesystem::path& path, const std::vector<RunRow>& rows) {
    std::ostringstream out;
    out << kRunsHeader << '\n';
    for (const RunRow& r : rows) {
        out << r.algorithm << ',' << r.n << ',' << r.k << ',' << r.landscape << ',' << r.run
            << ',' << r.seed << ',' << (r.success ? 1 : 0) << ',' << r.evals << ','
            << r.iterations << ',' << r.rebuilds << ',' << detail::format_double(r.best_fitness)
            << ',' << detail::format_double(r.gap) << '\n';
    }
    detail::write_file_atomically(path, out.str());
}

std::vector<RunRow> read_runs_csv(const std::filesystem::path& path) {
    std::vector<RunRow> rows;
    for (const auto& f : read_csv(path, kRunsHeader)) {
        RunRow r;
        r.algorithm = f[0];
        r.n = static_cast<int>(detail::parse_ll(f[1]));
        r.k = static_cast<int>(detail::parse_ll(f[2]));
        r.landscape = static_cast<int>(detail::parse_ll(f[3]));
        r.run = static_cast<int>(detail::parse_ll(f[4]));
        r.seed = detail::parse_ull(f[5]);
        r.success = detail::parse_ll(f[6]) != 0;
        r.evals = detail::parse_ll(f[7]);
        r.iterations = static_cast<int>(detail::parse_ll(f[8]));
        r.rebuilds = static_cast<int>(detail::parse_ll(f[9]));
        r.best_fitness = detail::parse_double(f[10]);
        r.gap = detail::parse_double(f[11]);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace edalab
