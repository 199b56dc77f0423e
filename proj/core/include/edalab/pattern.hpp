#ifndef EDALAB_PATTERN_HPP
#define EDALAB_PATTERN_HPP

#include <cstddef>
#include <filesystem>
#include <vector>

namespace edalab {

/// Gap marker used in padded SHD rows. SHD values themselves are >= 0.
inline constexpr int kGap = -1;

/// Normalised per-iteration model-change profile; entry t-1 is the
/// rebuild probability p_t used by the schedule-driven optimiser.
struct UpdatePattern {
    std::vector<double> p;

    bool operator==(const UpdatePattern&) const = default;
};

/// Stretches `values` to `target_len` slots by inserting gap markers at the
/// centred-stride positions floor((i + 0.5) * target_len / gaps); the values
/// keep their relative order in the remaining slots.
std::vector<int> pad_uniform(const std::vector<int>& values, std::size_t target_len);

/// Aggregates per-run SHD vectors: pads every vector to the maximum observed
/// length, averages each column over its non-gap entries (all-gap columns
/// yield 0), then divides by the largest column mean to land in [0,1].
UpdatePattern aggregate(const std::vector<std::vector<int>>& vectors);

/// Probability for 1-based iteration t; iterations past the end reuse the
/// last entry.
double pattern_prob_at(const UpdatePattern& pattern, std::size_t t);

/// Pattern file format: first line the length L, then L decimal values, one
/// per line, '.' decimal separator regardless of locale.
void save_pattern(const std::filesystem::path& path, const UpdatePattern& pattern);
UpdatePattern load_pattern(const std::filesystem::path& path);

}  // namespace edalab

#endif
