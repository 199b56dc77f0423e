// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Campaign-backed criteria share two grids (n=10 easy cell, n=14
// k-sweep) run once up front.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edalab/analysis.hpp"
#include "edalab/bnet.hpp"
#include "edalab/eda.hpp"
#include "edalab/nk.hpp"
#include "edalab/pattern.hpp"
#include "edalab/rng.hpp"

using namespace edalab;

namespace {

int g_failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " | ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, ...) {
    va_list args;
    va_start(args, pattern);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

// --- criterion 1: independent brute-force optimiser ------------------------

// Second-route evaluator: index accumulated with explicit powers from the
// least significant neighbour upward instead of the library's shift-or walk.
double eval_independent(const NkInstance& inst, const std::vector<std::uint8_t>& bits) {
    double total = 0.0;
    for (int q = 0; q < inst.n; ++q) {
        const auto& nb = inst.neighbors[static_cast<std::size_t>(q)];
        std::size_t idx = 0;
        std::size_t weight = 1;
        for (int j = inst.k - 1; j >= 0; --j) {
            if (bits[static_cast<std::size_t>(nb[static_cast<std::size_t>(j)])]) idx += weight;
            weight *= 2;
        }
        if (bits[static_cast<std::size_t>(q)]) idx += weight;
        total += inst.tables[static_cast<std::size_t>(q)][idx];
    }
    return total;
}

Optimum brute_force_optimum(const NkInstance& inst) {
    Optimum best;
    best.value = -1.0;
    const std::uint64_t total = 1ULL << inst.n;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(inst.n));
    for (std::uint64_t v = 0; v < total; ++v) {
        for (int i = 0; i < inst.n; ++i)
            bits[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((v >> (inst.n - 1 - i)) & 1ULL);
        const double value = eval_independent(inst, bits);
        if (value > best.value) {
            best.value = value;
            best.bits = bits;
        }
    }
    return best;
}

bool criterion_1(std::string& detail) {
    Rng rng(101);
    for (int round = 0; round < 50; ++round) {
        const int n = 2 + static_cast<int>(rng.next_below(11));  // 2..12
        const int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        const NkInstance inst = generate_instance(n, k, rng.next_u64());
        const Optimum lib = enumerate_optimum(inst);
        const Optimum ref = brute_force_optimum(inst);
        if (std::abs(lib.value - ref.value) > 1e-12 || lib.bits != ref.bits) {
            detail = fmt("mismatch at round %d (n=%d k=%d): %.17g vs %.17g", round, n, k,
                         lib.value, ref.value);
            return false;
        }
    }
    detail = "50 instances, optimum value and argmax identical";
    return true;
}

// --- criterion 2: exact-rational score oracle ------------------------------

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial_exact(int x) {
    cpp_int out = 1;
    for (int i = 2; i <= x; ++i) out *= i;
    return out;
}

// Marginal likelihood as an exact rational: per node, per parent combination,
// N0! N1! / (N+1)!. Unobserved combinations contribute 1.
cpp_rational exact_marginal(const Dag& dag, const DataSet& data) {
    cpp_int num = 1;
    cpp_int den = 1;
    for (int m = 0; m < dag.node_count; ++m) {
        const auto& parents = dag.parents[static_cast<std::size_t>(m)];
        const std::size_t combos = std::size_t{1} << parents.size();
        for (std::size_t j = 0; j < combos; ++j) {
            int counts[2] = {0, 0};
            for (const auto& row : data.rows) {
                std::size_t combo = 0;
                for (int p : parents) combo = combo * 2 + row[static_cast<std::size_t>(p)];
                if (combo == j) ++counts[row[static_cast<std::size_t>(m)]];
            }
            num *= factorial_exact(counts[0]) * factorial_exact(counts[1]);
            den *= factorial_exact(counts[0] + counts[1] + 1);
        }
    }
    return cpp_rational(num, den);
}

std::vector<Dag> all_three_node_dags() {
    const int pair_a[3] = {0, 0, 1};
    const int pair_b[3] = {1, 2, 2};
    std::vector<Dag> dags;
    for (int code = 0; code < 27; ++code) {
        std::vector<std::pair<int, int>> edges;
        int rest = code;
        for (int p = 0; p < 3; ++p) {
            const int state = rest % 3;
            rest /= 3;
            if (state == 1) edges.push_back({pair_a[p], pair_b[p]});
            if (state == 2) edges.push_back({pair_b[p], pair_a[p]});
        }
        // Kahn check: keep acyclic digraphs only.
        int indeg[3] = {0, 0, 0};
        for (auto [u, v] : edges) ++indeg[v];
        std::vector<int> queue;
        for (int v = 0; v < 3; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        int removed = 0;
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            ++removed;
            for (auto [a, b] : edges)
                if (a == u && --indeg[b] == 0) queue.push_back(b);
        }
        if (removed != 3) continue;
        Dag dag(3);
        for (auto [u, v] : edges) dag.add_edge(u, v);
        dags.push_back(std::move(dag));
    }
    return dags;
}

bool criterion_2(std::string& detail) {
    const std::vector<Dag> dags = all_three_node_dags();
    if (dags.size() != 25) {
        detail = fmt("expected 25 acyclic structures, enumerated %zu", dags.size());
        return false;
    }
    int checked = 0;
    for (int d = 0; d < 20; ++d) {
        Rng rng(mix_seed(777, static_cast<std::uint64_t>(d), 0, 0));
        DataSet data;
        data.num_vars = 3;
        const int rows = d % 7;  // 0..6 rows
        for (int r = 0; r < rows; ++r)
            data.rows.push_back({static_cast<std::uint8_t>(rng.next_below(2)),
                                 static_cast<std::uint8_t>(rng.next_below(2)),
                                 static_cast<std::uint8_t>(rng.next_below(2))});
        for (const Dag& dag : dags) {
            const double lib = std::exp(k2_score(dag, data));
            const double ref = exact_marginal(dag, data).convert_to<double>();
            if (std::abs(lib - ref) > 1e-9 * ref) {
                detail = fmt("dataset %d (%d rows), %d edges: exp(score)=%.17g oracle=%.17g",
                             d, rows, dag.edge_count(), lib, ref);
                return false;
            }
            ++checked;
        }
    }
    detail = fmt("%d structure/dataset pairs within 1e-9 relative", checked);
    return true;
}

// --- criterion 3: sampling fidelity on a hand-built chain ------------------

bool criterion_3(std::string& detail) {
    BayesNet net;
    net.structure = Dag(3);
    net.structure.add_edge(0, 1);
    net.structure.add_edge(1, 2);
    net.params.theta = {
        {0.7, 0.3},
        {0.8, 0.2, 0.1, 0.9},
        {0.6, 0.4, 0.3, 0.7},
    };
    Rng rng(12345);
    const int count = 100000;
    const DataSet out = sample(net, count, rng);
    int cells[8] = {0};
    for (const auto& row : out.rows) cells[4 * row[0] + 2 * row[1] + row[2]] += 1;
    double worst = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                const double exact = net.params.theta[0][static_cast<std::size_t>(a)] *
                                     net.params.theta[1][static_cast<std::size_t>(2 * a + b)] *
                                     net.params.theta[2][static_cast<std::size_t>(2 * b + c)];
                const double empirical = cells[4 * a + 2 * b + c] / static_cast<double>(count);
                worst = std::max(worst, std::abs(empirical - exact));
            }
    detail = fmt("largest cell deviation %.5f over 100000 samples (bound 0.01)", worst);
    return worst <= 0.01;
}

// --- criterion 4: all-ones schedule reproduces the standard loop -----------

bool criterion_4(std::string& detail) {
    UpdatePattern ones;
    ones.p.assign(7, 1.0);
    for (int i = 0; i < 20; ++i) {
        const int n = 6 + (i % 7);
        const int k = std::min(1 + (i % 4), n - 1);
        NkInstance inst =
            generate_instance(n, k, mix_seed(9000, static_cast<std::uint64_t>(n),
                                             static_cast<std::uint64_t>(k),
                                             static_cast<std::uint64_t>(i)));
        inst.optimum = enumerate_optimum(inst);
        EdaConfig cfg;
        cfg.mu = 30;
        cfg.lambda = 12;
        cfg.max_evals = 600;
        cfg.seed = 100 + static_cast<std::uint64_t>(i);
        const RunTrace standard = run_boa(inst, cfg);
        const RunTrace scheduled = run_fboa(inst, cfg, ones);
        if (!(standard == scheduled)) {
            detail = fmt("trace diverged at pair %d (n=%d k=%d)", i, n, k);
            return false;
        }
    }
    detail = "20 (instance, seed) pairs bitwise identical";
    return true;
}

// --- shared campaign grids -------------------------------------------------

struct CellResult {
    int n = 0;
    int k = 0;
    int landscape = 0;
    NkInstance inst;
    std::vector<RunTrace> boa;
    std::vector<RunTrace> fboa;
};

constexpr int kRunsPerCell = 30;

int successes(const std::vector<RunTrace>& traces) {
    return static_cast<int>(std::count_if(traces.begin(), traces.end(),
                                          [](const RunTrace& t) { return t.success; }));
}

// The standard-algorithm pass fills `boa`; the schedule for the variant pass
// is aggregated from those traces afterwards, mirroring the pipeline order.
std::vector<CellResult> run_boa_grid(int n, const std::vector<int>& ks) {
    std::vector<CellResult> cells;
    for (int k : ks)
        for (int l = 0; l < 3; ++l) {
            CellResult cell;
            cell.n = n;
            cell.k = k;
            cell.landscape = l;
            cell.inst = generate_instance(
                n, k, mix_seed(4242, static_cast<std::uint64_t>(n),
                               static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l)));
            cell.inst.optimum = enumerate_optimum(cell.inst);
            EdaConfig cfg;
            cfg.seed = mix_seed(1717, static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l));
            cell.boa = run_campaign(std::span<const NkInstance>(&cell.inst, 1), cfg,
                                    kRunsPerCell, nullptr);
            std::printf("-- boa  n=%d k=%d l=%d: %d/%d successes\n", n, k, l,
                        successes(cell.boa), kRunsPerCell);
            std::fflush(stdout);
            cells.push_back(std::move(cell));
        }
    return cells;
}

UpdatePattern pattern_from_grid(const std::vector<CellResult>& cells) {
    std::vector<std::vector<int>> series;
    for (const CellResult& cell : cells)
        for (const RunTrace& trace : cell.boa) series.push_back(trace.shd_series);
    return aggregate(series);
}

void run_fboa_grid(std::vector<CellResult>& cells, const UpdatePattern& pattern) {
    for (CellResult& cell : cells) {
        EdaConfig cfg;
        cfg.seed = mix_seed(1717, static_cast<std::uint64_t>(cell.n),
                            static_cast<std::uint64_t>(cell.k),
                            static_cast<std::uint64_t>(cell.landscape));
        cell.fboa = run_campaign(std::span<const NkInstance>(&cell.inst, 1), cfg, kRunsPerCell,
                                 &pattern);
        std::printf("-- fboa n=%d k=%d l=%d: %d/%d successes\n", cell.n, cell.k, cell.landscape,
                    successes(cell.fboa), kRunsPerCell);
        std::fflush(stdout);
    }
}

// Spearman rank correlation with mid-ranks for ties.
double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    const auto ranks = [](const std::vector<double>& v) {
        const std::size_t m = v.size();
        std::vector<std::size_t> idx(m);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> out(m);
        std::size_t i = 0;
        while (i < m) {
            std::size_t j = i;
            while (j + 1 < m && v[idx[j + 1]] == v[idx[i]]) ++j;
            const double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (std::size_t t = i; t <= j; ++t) out[idx[t]] = mid;
            i = j + 1;
        }
        return out;
    };
    const std::vector<double> rx = ranks(xs);
    const std::vector<double> ry = ranks(ys);
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

bool criterion_5(const std::vector<CellResult>& cells10, const std::vector<CellResult>& cells14,
                 std::string& detail) {
    int boa_ok = 0, fboa_ok = 0;
    for (const CellResult& cell : cells10) {
        boa_ok += successes(cell.boa);
        fboa_ok += successes(cell.fboa);
    }
    const int total10 = static_cast<int>(cells10.size()) * kRunsPerCell;
    const double boa_rate = boa_ok / static_cast<double>(total10);
    const double fboa_rate = fboa_ok / static_cast<double>(total10);

    std::map<int, std::pair<int, int>> by_k;  // k -> (boa successes, fboa successes)
    for (const CellResult& cell : cells14) {
        by_k[cell.k].first += successes(cell.boa);
        by_k[cell.k].second += successes(cell.fboa);
    }
    std::vector<double> ks, boa_rates, fboa_rates;
    for (const auto& [k, counts] : by_k) {
        ks.push_back(k);
        boa_rates.push_back(counts.first / 90.0);
        fboa_rates.push_back(counts.second / 90.0);
    }
    const double rho_boa = spearman(ks, boa_rates);
    const double rho_fboa = spearman(ks, fboa_rates);

    detail = fmt("n=10 k=2 rates boa=%.3f fboa=%.3f (>=0.95); n=14 spearman(k, rate) "
                 "boa=%.2f fboa=%.2f (<0)",
                 boa_rate, fboa_rate, rho_boa, rho_fboa);
    return boa_rate >= 0.95 && fboa_rate >= 0.95 && rho_boa < 0.0 && rho_fboa < 0.0;
}

bool criterion_6(const std::vector<CellResult>& cells14, std::string& detail) {
    std::vector<std::vector<int>> series;
    std::size_t max_iterations = 0;
    for (const CellResult& cell : cells14)
        for (const RunTrace& trace : cell.boa) {
            series.push_back(trace.shd_series);
            max_iterations = std::max(max_iterations, trace.shd_series.size());
        }
    const UpdatePattern pattern = aggregate(series);
    if (pattern.p.size() != max_iterations) {
        detail = fmt("length %zu, max iterations observed %zu", pattern.p.size(), max_iterations);
        return false;
    }
    double max_value = 0.0;
    for (double v : pattern.p) {
        if (v < 0.0 || v > 1.0) {
            detail = fmt("value %.17g outside [0,1]", v);
            return false;
        }
        max_value = std::max(max_value, v);
    }
    if (max_value != 1.0) {
        detail = fmt("max value %.17g, expected 1", max_value);
        return false;
    }

    Rng rng(31337);
    for (int round = 0; round < 1000; ++round) {
        const std::size_t len = rng.next_below(30);
        const std::size_t target = std::max<std::size_t>(len + rng.next_below(40), 1);
        std::vector<int> values(len);
        for (auto& v : values) v = static_cast<int>(rng.next_below(50));
        const std::vector<int> padded = pad_uniform(values, target);
        if (padded.size() != target) {
            detail = fmt("round %d: padded length %zu, want %zu", round, padded.size(), target);
            return false;
        }
        std::vector<int> kept;
        for (int v : padded)
            if (v != kGap) kept.push_back(v);
        std::vector<int> expect = values;
        std::sort(kept.begin(), kept.end());
        std::sort(expect.begin(), expect.end());
        if (kept != expect) {
            detail = fmt("round %d: padding altered the value multiset", round);
            return false;
        }
    }
    detail = fmt("aggregate over %zu traces: length %zu, values in [0,1], max 1; "
                 "1000 padding rounds conserve multisets",
                 series.size(), pattern.p.size());
    return true;
}

bool criterion_7(std::string& detail) {
    CampaignStats evals_case;
    evals_case.t_s = 1;
    evals_case.t_total = 2;
    evals_case.success_T = {1000};
    evals_case.success_U = {0};
    evals_case.t_max = 50000;
    evals_case.mu = 100;
    evals_case.n = 10;
    const double e_t = expected_evals(evals_case);

    const UpdatePattern half{std::vector<double>(1, 0.5)};
    const double fail_u = full_budget_rebuilds(&half, 500);
    CampaignStats adjust_case = evals_case;
    adjust_case.success_U = {4};
    adjust_case.fail_U = fail_u;
    const double e_u = expected_adjustments(adjust_case);

    CampaignStats ert_case;
    ert_case.t_s = 1;
    ert_case.t_total = 1;
    ert_case.success_T = {100};
    ert_case.success_U = {1};
    ert_case.t_max = 50000;
    ert_case.mu = 100;
    ert_case.n = 10;
    const ErtReport ert = estimate_runtime(ert_case);

    detail = fmt("E[T]=%.1f (want 51000), E[U]=%.1f (want 254), ert=%.1f (want 320000)", e_t,
                 e_u, ert.ert);
    return e_t == 51000.0 && fail_u == 250.0 && e_u == 254.0 && ert.e_t == 100.0 &&
           ert.e_u == 1.0 && ert.ert == 320000.0;
}

struct CellErt {
    ErtReport boa;
    ErtReport fboa;
};

std::vector<CellErt> grid_erts(const std::vector<CellResult>& cells, const UpdatePattern& pattern) {
    EdaConfig defaults;
    const long long i_max = max_iterations(defaults);
    std::vector<CellErt> out;
    for (const CellResult& cell : cells) {
        CellErt e;
        e.boa = estimate_runtime(make_campaign_stats(cell.boa,
                                                     full_budget_rebuilds(nullptr, i_max),
                                                     defaults.max_evals, defaults.mu, cell.n));
        e.fboa = estimate_runtime(make_campaign_stats(cell.fboa,
                                                      full_budget_rebuilds(&pattern, i_max),
                                                      defaults.max_evals, defaults.mu, cell.n));
        out.push_back(e);
    }
    return out;
}

bool criterion_8(const std::vector<CellResult>& cells14, const std::vector<CellErt>& erts,
                 std::string& detail) {
    double boa_eu = 0.0, fboa_eu = 0.0, log_ratio = 0.0;
    for (std::size_t i = 0; i < erts.size(); ++i) {
        const CellErt& e = erts[i];
        if (!std::isfinite(e.boa.ert) || !std::isfinite(e.fboa.ert)) {
            detail = fmt("cell k=%d l=%d has an infinite estimate", cells14[i].k,
                         cells14[i].landscape);
            return false;
        }
        if (e.fboa.ert >= e.boa.ert) {
            detail = fmt("cell k=%d l=%d: fboa ert %.3g >= boa ert %.3g", cells14[i].k,
                         cells14[i].landscape, e.fboa.ert, e.boa.ert);
            return false;
        }
        boa_eu += e.boa.e_u;
        fboa_eu += e.fboa.e_u;
        log_ratio += std::log(e.boa.ert / e.fboa.ert);
    }
    const double cells = static_cast<double>(erts.size());
    const double ratio = std::exp(log_ratio / cells);
    detail = fmt("fboa ert below boa in all %zu cells; mean E[U] %.1f vs %.1f; mean speedup "
                 "%.2fx (>1.5)",
                 erts.size(), fboa_eu / cells, boa_eu / cells, ratio);
    return fboa_eu / cells < boa_eu / cells && ratio > 1.5;
}

double mean_gap(const NkInstance& inst, const std::vector<RunTrace>& traces) {
    double total = 0.0;
    for (const RunTrace& trace : traces)
        total += relative_gap(inst.optimum->value, trace.best.fitness.value());
    return total / static_cast<double>(traces.size());
}

bool criterion_9(const std::vector<CellResult>& cells14, std::string& detail) {
    double worst_abs = 0.0;
    double worst_variant = 0.0;  // largest (variant gap - standard gap): variant worse
    std::string cells_text;
    bool ok = true;
    for (const CellResult& cell : cells14) {
        const double diff = mean_gap(cell.inst, cell.fboa) - mean_gap(cell.inst, cell.boa);
        worst_abs = std::max(worst_abs, std::abs(diff));
        worst_variant = std::max(worst_variant, diff);
        if (std::abs(diff) > 0.03) {
            ok = false;
            cells_text += fmt(" k=%d,l=%d:%+.4f", cell.k, cell.landscape, diff);
        }
    }
    if (!ok) {
        detail = fmt("cells over the 0.03 bound (negative = variant better):%s; worst "
                     "variant-worse difference %+.4f",
                     cells_text.c_str(), worst_variant);
        return false;
    }
    detail = fmt("largest |mean gap difference| %.4f across %zu cells (bound 0.03)", worst_abs,
                 cells14.size());
    return true;
}

bool criterion_10(std::string& detail) {
    Rng rng(2024);
    std::vector<std::pair<double, double>> points;
    for (int k = 2; k <= 16; k += 2) {
        const double noise = 1.0 + 0.01 * (2.0 * rng.next_double() - 1.0);
        points.push_back({static_cast<double>(k), 7.0 * std::pow(k, 2.5) * noise});
    }
    const RegressionFit fit = loglog_regression(points);
    detail = fmt("beta1=%.4f (want [2.4,2.6]), r2=%.5f (want >=0.99)", fit.beta1, fit.r2);
    return fit.beta1 >= 2.4 && fit.beta1 <= 2.6 && fit.r2 >= 0.99;
}

}  // namespace

int main() {
    std::string detail;

    detail.clear();
    report(1, "optimum enumeration matches an independent brute force", criterion_1(detail), detail);

    detail.clear();
    report(2, "exp(k2 score) matches an exact-rational factorial oracle", criterion_2(detail),
           detail);

    detail.clear();
    report(3, "ancestral sampling reproduces a hand-built chain joint", criterion_3(detail),
           detail);

    detail.clear();
    report(4, "all-ones schedule reproduces the standard loop bitwise", criterion_4(detail),
           detail);

    std::printf("-- running shared campaign grids (n=10 easy cell, n=14 k sweep)\n");
    std::fflush(stdout);
    std::vector<CellResult> cells10 = run_boa_grid(10, {2});
    const UpdatePattern pattern10 = pattern_from_grid(cells10);
    run_fboa_grid(cells10, pattern10);
    std::vector<CellResult> cells14 = run_boa_grid(14, {2, 6, 10});
    const UpdatePattern pattern14 = pattern_from_grid(cells14);
    run_fboa_grid(cells14, pattern14);

    detail.clear();
    report(5, "easy-instance success rates and decay with ruggedness",
           criterion_5(cells10, cells14, detail), detail);

    detail.clear();
    report(6, "schedule aggregation properties and padding conservation",
           criterion_6(cells14, detail), detail);

    detail.clear();
    report(7, "runtime estimator arithmetic on frozen examples", criterion_7(detail), detail);

    const std::vector<CellErt> erts = grid_erts(cells14, pattern14);

    detail.clear();
    report(8, "variant is estimated faster in every grid cell", criterion_8(cells14, erts, detail),
           detail);

    detail.clear();
    report(9, "solution quality parity across the grid", criterion_9(cells14, detail), detail);

    detail.clear();
    report(10, "log-log regression recovers a known power law", criterion_10(detail), detail);

    if (g_failures > 0) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
