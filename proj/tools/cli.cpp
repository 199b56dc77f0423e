#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "edalab/analysis.hpp"
#include "edalab/eda.hpp"
#include "edalab/nk.hpp"
#include "edalab/pattern.hpp"
#include "edalab/rng.hpp"

namespace edalab::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string cell_stem(int n, int k, int landscape) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "n%02d_k%02d_l%02d", n, k, landscape);
    return buf;
}

std::string trace_name(int n, int k, int landscape, int run) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_r%03d.json", cell_stem(n, k, landscape).c_str(), run);
    return buf;
}

struct CellRef {
    int n = 0;
    int k = 0;
    int landscape = 0;
    fs::path file;

    auto key() const { return std::tuple{n, k, landscape}; }
};

bool selected(int value, const std::vector<int>& filter) {
    return filter.empty() || std::find(filter.begin(), filter.end(), value) != filter.end();
}

// Instance files under out/instances, filtered by the optional n and k lists,
// sorted by (n, k, landscape). The position in this list fixes the per-run
// seed derivation.
std::vector<CellRef> list_instances(const fs::path& out, const std::vector<int>& ns,
                                    const std::vector<int>& ks) {
    const fs::path dir = out / "instances";
    if (!fs::is_directory(dir))
        throw std::runtime_error("no instance directory at " + dir.string() +
                                 " (generate instances first)");
    std::vector<CellRef> cells;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        CellRef cell;
        cell.file = entry.path();
        const std::string name = entry.path().filename().string();
        if (std::sscanf(name.c_str(), "n%d_k%d_l%d", &cell.n, &cell.k, &cell.landscape) != 3) {
            std::cerr << "skipping unrecognised file " << name << '\n';
            continue;
        }
        if (selected(cell.n, ns) && selected(cell.k, ks)) cells.push_back(std::move(cell));
    }
    std::sort(cells.begin(), cells.end(),
              [](const CellRef& a, const CellRef& b) { return a.key() < b.key(); });
    return cells;
}

double run_gap(double optimum, const RunTrace& trace) {
    const double best = *trace.best.fitness;
    if (optimum > 0.0) return relative_gap(optimum, std::min(best, optimum));
    return trace.success ? 0.0 : 1.0;
}

json fit_to_json(const RegressionFit& fit) {
    return json{{"beta0", fit.beta0}, {"beta1", fit.beta1}, {"r2", fit.r2}};
}

json mcnemar_to_json(const McNemarResult& r) {
    return json{{"b", r.b}, {"c", r.c}, {"statistic", r.statistic}, {"p", r.p}};
}

}  // namespace

void cmd_gen(const GenOptions& opts) {
    if (opts.ns.empty() || opts.ks.empty())
        throw std::runtime_error("gen: --n and --k must name at least one value each");
    if (opts.landscapes < 1) throw std::runtime_error("gen: --landscapes must be positive");

    const fs::path dir = opts.out / "instances";
    fs::create_directories(dir);

    int written = 0, kept = 0, skipped = 0;
    for (int n : opts.ns)
        for (int k : opts.ks) {
            if (k < 1 || k > n - 1) {
                std::cerr << "gen: skipping infeasible cell n=" << n << " k=" << k << '\n';
                ++skipped;
                continue;
            }
            for (int l = 1; l <= opts.landscapes; ++l) {
                const fs::path file = dir / (cell_stem(n, k, l) + ".json");
                if (fs::exists(file) && !opts.force) {
                    ++kept;
                    continue;
                }
                NkInstance inst = generate_instance(
                    n, k, mix_seed(opts.seed, static_cast<std::uint64_t>(n),
                                   static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l)));
                inst.optimum = enumerate_optimum(inst);
                save_instance(file, inst);
                ++written;
            }
        }
    std::cout << "gen: wrote " << written << " instance(s) to " << dir.string();
    if (kept) std::cout << ", kept " << kept << " existing";
    if (skipped) std::cout << ", skipped " << skipped << " infeasible cell(s)";
    std::cout << '\n';
    if (written + kept == 0) throw std::runtime_error("gen: nothing generated");
}

void cmd_run(const RunOptions& opts) {
    if (opts.runs < 1) throw std::runtime_error("run: --runs must be positive");
    if (opts.jobs < 1) throw std::runtime_error("run: --jobs must be positive");
    if (opts.algo != "boa" && opts.algo != "fboa")
        throw std::runtime_error("run: --algo must be boa or fboa");
    if (opts.algo == "boa" && opts.pattern)
        throw std::runtime_error("run: --pattern only applies to fboa");

    EdaConfig cfg;
    cfg.mu = opts.mu;
    cfg.lambda = opts.lambda;
    cfg.max_evals = opts.t_max;
    cfg.gap_eps = opts.gap_eps;
    cfg.success_rule =
        opts.gap_eps > 0.0 ? SuccessRule::relative_gap : SuccessRule::exact_optimum;
    validate_config(cfg);

    UpdatePattern pattern;
    const UpdatePattern* pattern_ptr = nullptr;
    fs::path pattern_path;
    if (opts.algo == "fboa") {
        pattern_path = opts.pattern.value_or(opts.out / "pattern.txt");
        pattern = load_pattern(pattern_path);
        pattern_ptr = &pattern;
    }

    const fs::path results_file = opts.out / ("results_" + opts.algo + ".csv");
    if (fs::exists(results_file) && !opts.force)
        throw std::runtime_error("run: " + results_file.string() +
                                 " already exists (use --force to redo)");

    const std::vector<CellRef> cells = list_instances(opts.out, opts.ns, opts.ks);
    if (cells.empty()) throw std::runtime_error("run: no instances selected");

    const fs::path trace_dir = opts.out / "traces" / opts.algo;
    fs::create_directories(trace_dir);

    const long long i_max = max_iterations(cfg);
    const double fail_u = full_budget_rebuilds(pattern_ptr, i_max);

    std::vector<ResultRow> results;
    std::vector<RunRow> run_rows;
    json manifest_cells = json::array();

    for (std::size_t j = 0; j < cells.size(); ++j) {
        const CellRef& cell = cells[j];
        const NkInstance inst = load_instance(cell.file);
        if (!inst.optimum)
            throw std::runtime_error("run: instance lacks its optimum: " + cell.file.string());
        if (inst.n != cell.n || inst.k != cell.k)
            throw std::runtime_error("run: file name disagrees with content: " +
                                     cell.file.string());

        EdaConfig cell_cfg = cfg;
        cell_cfg.seed = opts.seed + j * static_cast<std::size_t>(opts.runs);
        const std::vector<RunTrace> traces =
            run_campaign(std::span{&inst, 1}, cell_cfg, opts.runs, pattern_ptr, opts.jobs);

        json trace_files = json::array();
        double gap_sum = 0.0;
        for (int r = 0; r < opts.runs; ++r) {
            const RunTrace& trace = traces[static_cast<std::size_t>(r)];
            const std::uint64_t seed = cell_cfg.seed + static_cast<std::uint64_t>(r);

            TraceMeta meta;
            meta.algorithm = opts.algo;
            meta.n = cell.n;
            meta.k = cell.k;
            meta.landscape = cell.landscape;
            meta.run = r;
            meta.seed = seed;
            meta.mu = cfg.mu;
            meta.lambda = cfg.lambda;
            meta.t_max = cfg.max_evals;
            const std::string name = trace_name(cell.n, cell.k, cell.landscape, r);
            save_trace(trace_dir / name, trace, meta);
            trace_files.push_back(("traces/" + opts.algo + "/") + name);

            const double gap = run_gap(inst.optimum->value, trace);
            gap_sum += gap;
            run_rows.push_back({opts.algo, cell.n, cell.k, cell.landscape, r, seed,
                                trace.success, trace.evals_used, trace.iterations,
                                trace.rebuild_count(), *trace.best.fitness, gap});
        }

        const CampaignStats stats =
            make_campaign_stats(traces, fail_u, cfg.max_evals, cfg.mu, inst.n);
        const ErtReport ert = estimate_runtime(stats);
        results.push_back({opts.algo, cell.n, cell.k, cell.landscape, stats.t_s, stats.t_total,
                           gap_sum / opts.runs, ert.e_t, ert.e_u, ert.ert, fail_u, i_max,
                           cfg.mu, cfg.max_evals});

        manifest_cells.push_back({{"n", cell.n},
                                  {"k", cell.k},
                                  {"landscape", cell.landscape},
                                  {"instance", "instances/" + cell.file.filename().string()},
                                  {"successes", stats.t_s},
                                  {"traces", std::move(trace_files)}});
        std::cout << opts.algo << " n=" << cell.n << " k=" << cell.k
                  << " l=" << cell.landscape << ": " << stats.t_s << '/' << stats.t_total
                  << " success" << std::endl;
    }

    write_results_csv(results_file, results);
    write_runs_csv(opts.out / ("runs_" + opts.algo + ".csv"), run_rows);

    json manifest;
    manifest["algorithm"] = opts.algo;
    manifest["mu"] = cfg.mu;
    manifest["lambda"] = cfg.lambda;
    manifest["t_max"] = cfg.max_evals;
    manifest["seed"] = opts.seed;
    manifest["runs"] = opts.runs;
    manifest["gap_eps"] = cfg.gap_eps;
    if (pattern_ptr) manifest["pattern"] = pattern_path.string();
    manifest["cells"] = std::move(manifest_cells);
    write_text(opts.out / ("manifest_" + opts.algo + ".json"), manifest.dump(2) + "\n");

    std::cout << "run: wrote " << results.size() << " cell(s) to " << results_file.string()
              << '\n';
}

void cmd_pattern(const PatternOptions& opts) {
    const fs::path trace_dir = opts.out / "traces" / "boa";
    if (!fs::is_directory(trace_dir))
        throw std::runtime_error("pattern: no standard-algorithm traces at " +
                                 trace_dir.string());

    const fs::path target = opts.pattern_out.value_or(opts.out / "pattern.txt");
    if (fs::exists(target) && !opts.force)
        throw std::runtime_error("pattern: " + target.string() +
                                 " already exists (use --force to redo)");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(trace_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<std::vector<int>> shd_vectors;
    for (const fs::path& file : files) {
        const auto [trace, meta] = load_trace(file);
        if (!selected(meta.n, opts.ns) || !selected(meta.k, opts.ks)) continue;
        shd_vectors.push_back(trace.shd_series);
    }
    if (shd_vectors.empty())
        throw std::runtime_error("pattern: no traces match the selection");

    const UpdatePattern pattern = aggregate(shd_vectors);
    save_pattern(target, pattern);
    std::cout << "pattern: aggregated " << shd_vectors.size() << " run(s) into "
              << target.string() << " (length " << pattern.p.size() << ")\n";
}

void cmd_analyze(const AnalyzeOptions& opts) {
    const fs::path boa_results = opts.out / "results_boa.csv";
    const fs::path fboa_results = opts.out / "results_fboa.csv";
    for (const fs::path* p : {&boa_results, &fboa_results})
        if (!fs::exists(*p))
            throw std::runtime_error("analyze: missing " + p->string() +
                                     " (run both algorithms first)");

    const std::vector<ResultRow> boa_rows = read_results_csv(boa_results);
    const std::vector<ResultRow> fboa_rows = read_results_csv(fboa_results);

    std::set<std::tuple<int, int, int>> boa_cells, fboa_cells;
    for (const auto& r : boa_rows) boa_cells.insert({r.n, r.k, r.landscape});
    for (const auto& r : fboa_rows) fboa_cells.insert({r.n, r.k, r.landscape});
    if (boa_cells != fboa_cells)
        throw std::runtime_error("analyze: the two campaigns cover different cells");

    // Per-landscape (k, ert) points for each problem size.
    const auto collect = [](const std::vector<ResultRow>& rows) {
        std::map<int, std::vector<std::pair<double, double>>> points;
        for (const auto& r : rows)
            if (std::isfinite(r.ert))
                points[r.n].push_back({static_cast<double>(r.k), r.ert});
        return points;
    };
    const auto boa_points = collect(boa_rows);
    const auto fboa_points = collect(fboa_rows);

    std::set<int> all_n;
    for (const auto& r : boa_rows) all_n.insert(r.n);

    const auto fit_for = [](const std::map<int, std::vector<std::pair<double, double>>>& points,
                            int n) -> std::optional<RegressionFit> {
        const auto it = points.find(n);
        if (it == points.end()) return std::nullopt;
        std::set<double> distinct;
        for (const auto& [k, ert] : it->second) distinct.insert(k);
        if (distinct.size() < 2) return std::nullopt;
        return loglog_regression(it->second);
    };

    // Paired success flags keyed by (n, k, landscape, run).
    const auto load_success = [&](const std::string& algo) {
        std::map<std::tuple<int, int, int, int>, bool> flags;
        for (const auto& r : read_runs_csv(opts.out / ("runs_" + algo + ".csv")))
            flags[{r.n, r.k, r.landscape, r.run}] = r.success;
        return flags;
    };
    const auto boa_flags = load_success("boa");
    const auto fboa_flags = load_success("fboa");
    if (boa_flags.size() != fboa_flags.size())
        throw std::runtime_error("analyze: the two campaigns cover different runs");

    std::map<int, std::vector<std::pair<bool, bool>>> paired_by_n;
    std::vector<std::pair<bool, bool>> paired_all;
    for (const auto& [key, flag] : boa_flags) {
        const auto other = fboa_flags.find(key);
        if (other == fboa_flags.end())
            throw std::runtime_error("analyze: the two campaigns cover different runs");
        paired_by_n[std::get<0>(key)].push_back({flag, other->second});
        paired_all.push_back({flag, other->second});
    }

    json per_n = json::array();
    int fitted = 0;
    for (int n : all_n) {
        json entry;
        entry["n"] = n;
        const auto boa_fit = fit_for(boa_points, n);
        const auto fboa_fit = fit_for(fboa_points, n);
        if (boa_fit && fboa_fit) {
            std::set<double> grid;
            for (const auto& r : boa_rows)
                if (r.n == n) grid.insert(static_cast<double>(r.k));
            const std::vector<double> ks(grid.begin(), grid.end());
            const double distance = curve_distance(*fboa_fit, *boa_fit, ks);
            entry["boa"] = fit_to_json(*boa_fit);
            entry["fboa"] = fit_to_json(*fboa_fit);
            entry["distance"] = distance;
            ++fitted;
            std::cout << "n=" << n << ": boa beta1=" << boa_fit->beta1
                      << " r2=" << boa_fit->r2 << " | fboa beta1=" << fboa_fit->beta1
                      << " r2=" << fboa_fit->r2 << " | distance=" << distance;
        } else {
            std::cerr << "analyze: skipping regression for n=" << n
                      << " (needs two distinct k with finite estimates per algorithm)\n";
            std::cout << "n=" << n << ": regression skipped";
        }
        const McNemarResult mc = mcnemar(paired_by_n.at(n));
        entry["mcnemar"] = mcnemar_to_json(mc);
        std::cout << " | mcnemar p=" << mc.p << '\n';
        per_n.push_back(std::move(entry));
    }
    if (fitted == 0)
        throw std::runtime_error(
            "analyze: no problem size has two distinct k values with finite estimates");

    json report;
    report["per_n"] = std::move(per_n);
    report["mcnemar_overall"] = mcnemar_to_json(mcnemar(paired_all));
    const fs::path report_file = opts.out / "report.json";
    write_text(report_file, report.dump(2) + "\n");
    std::cout << "analyze: wrote " << report_file.string() << '\n';
}

int run_main(int argc, const char* const* argv) {
    CLI::App app{"Bayesian-network EDA lab for NK landscapes"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate landscape instances");
    gen_cmd->add_option("--n", gen.ns, "problem sizes")->required()->delimiter(',');
    gen_cmd->add_option("--k", gen.ks, "epistasis degrees")->required()->delimiter(',');
    gen_cmd->add_option("--landscapes", gen.landscapes, "instances per (n, k) cell");
    gen_cmd->add_option("--seed", gen.seed, "master seed");
    gen_cmd->add_option("--out", gen.out, "workspace directory");
    gen_cmd->add_flag("--force", gen.force, "overwrite existing instances");

    RunOptions run;
    CLI::App* run_cmd = app.add_subcommand("run", "Run an optimisation campaign");
    run_cmd->add_option("--algo", run.algo, "boa or fboa")
        ->required()
        ->check(CLI::IsMember({"boa", "fboa"}));
    run_cmd->add_option("--n", run.ns, "restrict to these problem sizes")->delimiter(',');
    run_cmd->add_option("--k", run.ks, "restrict to these epistasis degrees")->delimiter(',');
    run_cmd->add_option("--runs", run.runs, "repetitions per instance");
    run_cmd->add_option("--mu", run.mu, "sampled solutions per generation");
    run_cmd->add_option("--lambda", run.lambda, "selected population size");
    run_cmd->add_option("--t-max", run.t_max, "evaluation budget per run");
    run_cmd->add_option("--seed", run.seed, "campaign seed");
    run_cmd->add_option("--gap-eps", run.gap_eps,
                        "success when the relative gap falls to this level (0 = exact)");
    std::string run_pattern;
    run_cmd->add_option("--pattern", run_pattern, "schedule file for fboa");
    run_cmd->add_option("--out", run.out, "workspace directory");
    run_cmd->add_option("--jobs", run.jobs, "parallel workers");
    run_cmd->add_flag("--force", run.force, "redo existing results");

    PatternOptions pat;
    CLI::App* pat_cmd = app.add_subcommand("pattern", "Extract the model-change schedule");
    pat_cmd->add_option("--n", pat.ns, "restrict to these problem sizes")->delimiter(',');
    pat_cmd->add_option("--k", pat.ks, "restrict to these epistasis degrees")->delimiter(',');
    std::string pat_out;
    pat_cmd->add_option("--pattern", pat_out, "output file (default <out>/pattern.txt)");
    pat_cmd->add_option("--out", pat.out, "workspace directory");
    pat_cmd->add_flag("--force", pat.force, "overwrite an existing schedule");

    AnalyzeOptions ana;
    CLI::App* ana_cmd = app.add_subcommand("analyze", "Fit scaling curves and compare");
    ana_cmd->add_option("--out", ana.out, "workspace directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*gen_cmd) cmd_gen(gen);
        if (*run_cmd) {
            if (!run_pattern.empty()) run.pattern = fs::path(run_pattern);
            cmd_run(run);
        }
        if (*pat_cmd) {
            if (!pat_out.empty()) pat.pattern_out = fs::path(pat_out);
            cmd_pattern(pat);
        }
        if (*ana_cmd) cmd_analyze(ana);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace edalab::cli
