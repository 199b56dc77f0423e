#include "edalab/nk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "edalab/rng.hpp"
#include "io_util.hpp"

namespace edalab {

namespace {

using json = nlohmann::ordered_json;

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

NkInstance generate_instance(int n, int k, std::uint64_t seed) {
    require(n >= 2, "generate_instance: n must be at least 2");
    require(k >= 1 && k <= n - 1, "generate_instance: k must lie in [1, n-1]");

    NkInstance inst;
    inst.n = n;
    inst.k = k;
    inst.seed = seed;
    inst.neighbors.resize(static_cast<std::size_t>(n));
    inst.tables.resize(static_cast<std::size_t>(n));

    Rng rng(seed);
    const std::size_t table_size = std::size_t{1} << (k + 1);
    for (int q = 0; q < n; ++q) {
        std::vector<int> candidates;
        candidates.reserve(static_cast<std::size_t>(n) - 1);
        for (int other = 0; other < n; ++other)
            if (other != q) candidates.push_back(other);
        inst.neighbors[static_cast<std::size_t>(q)] =
            rng.sample_without_replacement(std::move(candidates), k);

        auto& table = inst.tables[static_cast<std::size_t>(q)];
        table.resize(table_size);
        for (double& v : table) v = rng.next_double();
    }
    return inst;
}

void validate_instance(const NkInstance& inst) {
    require(inst.n >= 2, "instance: n must be at least 2");
    require(inst.k >= 1 && inst.k <= inst.n - 1, "instance: k must lie in [1, n-1]");
    const auto n = static_cast<std::size_t>(inst.n);
    require(inst.neighbors.size() == n, "instance: one neighbourhood per variable");
    require(inst.tables.size() == n, "instance: one table per variable");
    const std::size_t table_size = std::size_t{1} << (inst.k + 1);
    for (int q = 0; q < inst.n; ++q) {
        const auto& nbs = inst.neighbors[static_cast<std::size_t>(q)];
        require(nbs.size() == static_cast<std::size_t>(inst.k),
                "instance: neighbourhood size must equal k");
        std::vector<int> sorted = nbs;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "instance: duplicate neighbour");
        for (int nb : nbs) {
            require(nb >= 0 && nb < inst.n, "instance: neighbour out of range");
            require(nb != q, "instance: a variable cannot neighbour itself");
        }
        const auto& table = inst.tables[static_cast<std::size_t>(q)];
        require(table.size() == table_size, "instance: table size must be 2^(k+1)");
        for (double v : table)
            require(std::isfinite(v) && v >= 0.0 && v < 1.0,
                    "instance: table entries must lie in [0, 1)");
    }
    if (inst.optimum) {
        require(inst.optimum->bits.size() == n, "instance: optimum length mismatch");
        for (auto b : inst.optimum->bits)
            require(b <= 1, "instance: optimum bits must be binary");
        require(std::abs(evaluate(inst, inst.optimum->bits) - inst.optimum->value) <= 1e-9,
                "instance: stored optimum value disagrees with its bits");
    }
}

double evaluate(const NkInstance& inst, const std::vector<std::uint8_t>& bits) {
    if (bits.size() != static_cast<std::size_t>(inst.n))
        throw std::invalid_argument("evaluate: solution length mismatch");
    double total = 0.0;
    for (int q = 0; q < inst.n; ++q) {
        const auto& nbs = inst.neighbors[static_cast<std::size_t>(q)];
        std::size_t idx = bits[static_cast<std::size_t>(q)];
        for (int nb : nbs) idx = (idx << 1) | bits[static_cast<std::size_t>(nb)];
        total += inst.tables[static_cast<std::size_t>(q)][idx];
    }
    return total;
}

Optimum enumerate_optimum(const NkInstance& inst) {
    if (inst.n > 30)
        throw std::invalid_argument("enumerate_optimum: exhaustive search capped at n = 30");
    validate_instance(inst);
    const std::uint64_t total = std::uint64_t{1} << inst.n;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(inst.n));
    Optimum best;
    best.value = -1.0;  // every fitness is non-negative
    for (std::uint64_t v = 0; v < total; ++v) {
        for (int q = 0; q < inst.n; ++q)
            bits[static_cast<std::size_t>(q)] =
                static_cast<std::uint8_t>((v >> (inst.n - 1 - q)) & 1ULL);
        const double val = evaluate(inst, bits);
        if (val > best.value) {
            best.value = val;
            best.bits = bits;
        }
    }
    return best;
}

double relative_gap(double optimum, double best) {
    if (!(optimum > 0.0)) throw std::invalid_argument("relative_gap: optimum must be positive");
    if (best > optimum) throw std::invalid_argument("relative_gap: best exceeds the optimum");
    return (optimum - best) / optimum;
}

void save_instance(const std::filesystem::path& path, const NkInstance& inst) {
    validate_instance(inst);
    json j;
    j["n"] = inst.n;
    j["k"] = inst.k;
    j["seed"] = inst.seed;
    json nbs = json::array();
    for (const auto& row : inst.neighbors) {
        json one = json::array();
        for (int nb : row) one.push_back(nb + 1);
        nbs.push_back(std::move(one));
    }
    j["neighbors"] = std::move(nbs);
    j["tables"] = inst.tables;
    if (inst.optimum) {
        j["optimum"] = {{"value", inst.optimum->value}, {"bits", inst.optimum->bits}};
    }
    detail::write_file_atomically(path, j.dump());
}

NkInstance load_instance(const std::filesystem::path& path) {
    const json j = json::parse(detail::read_file(path));
    NkInstance inst;
    inst.n = j.at("n").get<int>();
    inst.k = j.at("k").get<int>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& row : j.at("neighbors")) {
        std::vector<int> nbs;
        for (const auto& nb : row) nbs.push_back(nb.get<int>() - 1);
        inst.neighbors.push_back(std::move(nbs));
    }
    inst.tables = j.at("tables").get<std::vector<std::vector<double>>>();
    if (j.contains("optimum")) {
        Optimum opt;
        opt.value = j.at("optimum").at("value").get<double>();
        opt.bits = j.at("optimum").at("bits").get<std::vector<std::uint8_t>>();
        inst.optimum = std::move(opt);
    }
    validate_instance(inst);
    return inst;
}

}  // namespace edalab
