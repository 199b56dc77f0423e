#ifndef EDALAB_NK_HPP
#define EDALAB_NK_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace edalab {

struct Solution {
    std::vector<std::uint8_t> bits;
    std::optional<double> fitness;

    bool operator==(const Solution&) const = default;
};

struct Optimum {
    double value = 0.0;
    std::vector<std::uint8_t> bits;

    bool operator==(const Optimum&) const = default;
};

/// An NK landscape: n binary variables, each contributing a subfunction over
/// itself and k distinct neighbours. Subfunction tables are indexed with the
/// variable's own bit most significant, followed by the neighbour bits in
/// their stored order: index = (x_q << k) | (x_nb1 << (k-1)) | ... | x_nbk.
struct NkInstance {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> neighbors;    // per variable, k indices, 0-based
    std::vector<std::vector<double>> tables;    // per variable, 2^(k+1) values in [0,1)
    std::optional<Optimum> optimum;

    bool operator==(const NkInstance&) const = default;
};

/// Draws a random instance: neighbourhoods uniform without replacement,
/// table entries i.i.d. uniform on [0,1). Deterministic in (n, k, seed).
NkInstance generate_instance(int n, int k, std::uint64_t seed);

/// Throws std::invalid_argument if any instance invariant is violated.
void validate_instance(const NkInstance& inst);

double evaluate(const NkInstance& inst, const std::vector<std::uint8_t>& bits);

/// Exhaustive maximisation over all 2^n assignments (n <= 30). Ties are broken
/// towards the lowest bitstring read as an integer with bit 1 most significant.
Optimum enumerate_optimum(const NkInstance& inst);

/// (optimum - best) / optimum; requires optimum > 0 and best <= optimum.
double relative_gap(double optimum, double best);

/// JSON instance files use 1-based neighbour indices and the table layout
/// documented on NkInstance; see README for the full schema.
void save_instance(const std::filesystem::path& path, const NkInstance& inst);
NkInstance load_instance(const std::filesystem::path& path);

}  // namespace edalab

#endif
