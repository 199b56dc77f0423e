#ifndef EDALAB_RNG_HPP
#define EDALAB_RNG_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace edalab {

// splitmix64 step, used to derive child seeds from a campaign seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                              std::uint64_t c) {
    return splitmix64(splitmix64(splitmix64(seed ^ a) ^ b) ^ c);
}

/// Deterministic random source. All distributions are implemented on top of
/// the raw mt19937_64 stream so that a fixed seed yields the same draws on
/// every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), bound >= 1, rejection-sampled.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    /// Uniform permutation of {0, ..., n-1} by Fisher-Yates.
    std::vector<int> permutation(int n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<int>(next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
        return perm;
    }

    /// k distinct values drawn uniformly from `candidates` (order random).
    std::vector<int> sample_without_replacement(std::vector<int> candidates, int k) {
        const auto n = static_cast<int>(candidates.size());
        if (k < 0 || k > n)
            throw std::invalid_argument("sample_without_replacement: bad sample size");
        for (int i = 0; i < k; ++i) {
            const auto j =
                i + static_cast<int>(next_below(static_cast<std::uint64_t>(n - i)));
            std::swap(candidates[static_cast<std::size_t>(i)], candidates[static_cast<std::size_t>(j)]);
        }
        candidates.resize(static_cast<std::size_t>(k));
        return candidates;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace edalab

#endif
