#ifndef EDALAB_TOOLS_CLI_HPP
#define EDALAB_TOOLS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace edalab::cli {

struct GenOptions {
    std::vector<int> ns;
    std::vector<int> ks;
    int landscapes = 10;
    std::uint64_t seed = 1;
    std::filesystem::path out = "out";
    bool force = false;
};

struct RunOptions {
    std::string algo = "boa";
    std::vector<int> ns;  // empty selects every instance present
    std::vector<int> ks;
    int runs = 100;
    int mu = 100;
    int lambda = 40;
    long long t_max = 50000;
    std::uint64_t seed = 1;
    double gap_eps = 0.0;  // > 0 switches success to the relative-gap rule
    std::optional<std::filesystem::path> pattern;
    std::filesystem::path out = "out";
    int jobs = 1;
    bool force = false;
};

struct PatternOptions {
    std::vector<int> ns;
    std::vector<int> ks;
    std::filesystem::path out = "out";
    std::optional<std::filesystem::path> pattern_out;  // defaults to out/pattern.txt
    bool force = false;
};

struct AnalyzeOptions {
    std::filesystem::path out = "out";
};

void cmd_gen(const GenOptions& opts);
void cmd_run(const RunOptions& opts);
void cmd_pattern(const PatternOptions& opts);
void cmd_analyze(const AnalyzeOptions& opts);

/// Full argv-style entry point; returns the process exit code.
int run_main(int argc, const char* const* argv);

}  // namespace edalab::cli

#endif
