#include "edalab/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "io_util.hpp"

namespace edalab {

std::vector<int> pad_uniform(const std::vector<int>& values, std::size_t target_len) {
    if (target_len < values.size())
        throw std::invalid_argument("pad_uniform: target shorter than the input");
    const std::size_t gaps = target_len - values.size();
    if (gaps == 0) return values;

    std::vector<char> is_gap(target_len, 0);
    for (std::size_t i = 0; i < gaps; ++i) {
        // Centred stride; the positions are pairwise distinct already, the
        // wrap-around probe guards the slot anyway.
        std::size_t pos = ((2 * i + 1) * target_len) / (2 * gaps);
        while (is_gap[pos]) pos = (pos + 1) % target_len;
        is_gap[pos] = 1;
    }

    std::vector<int> padded(target_len, kGap);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < target_len; ++slot)
        if (!is_gap[slot]) padded[slot] = values[next++];
    return padded;
}

UpdatePattern aggregate(const std::vector<std::vector<int>>& vectors) {
    std::size_t target = 0;
    for (const auto& v : vectors) target = std::max(target, v.size());
    if (target == 0)
        throw std::invalid_argument("aggregate: no observed model-change values");

    std::vector<double> sums(target, 0.0);
    std::vector<std::size_t> counts(target, 0);
    for (const auto& v : vectors) {
        const std::vector<int> padded = pad_uniform(v, target);
        for (std::size_t i = 0; i < target; ++i) {
            if (padded[i] == kGap) continue;
            if (padded[i] < 0)
                throw std::invalid_argument("aggregate: negative distance value");
            sums[i] += padded[i];
            ++counts[i];
        }
    }

    UpdatePattern pattern;
    pattern.p.resize(target);
    double max_mean = 0.0;
    for (std::size_t i = 0; i < target; ++i) {
        pattern.p[i] = counts[i] == 0 ? 0.0 : sums[i] / static_cast<double>(counts[i]);
        max_mean = std::max(max_mean, pattern.p[i]);
    }
    if (max_mean > 0.0)
        for (double& v : pattern.p) v /= max_mean;
    return pattern;
}

double pattern_prob_at(const UpdatePattern& pattern, std::size_t t) {
    if (pattern.p.empty()) throw std::invalid_argument("pattern: empty schedule");
    if (t == 0) throw std::invalid_argument("pattern: iterations are 1-based");
    return pattern.p[std::min(t, pattern.p.size()) - 1];
}

void save_pattern(const std::filesystem::path& path, const UpdatePattern& pattern) {
    if (pattern.p.empty()) throw std::invalid_argument("save_pattern: empty schedule");
    std::ostringstream out;
    out << pattern.p.size() << '\n';
    for (double v : pattern.p) out << detail::format_double(v) << '\n';
    detail::write_file_atomically(path, out.str());
}

UpdatePattern load_pattern(const std::filesystem::path& path) {
    std::istringstream in(detail::read_file(path));
    long long count = 0;
    if (!(in >> count) || count < 1)
        throw std::runtime_error("pattern file: bad length line in " + path.string());

    UpdatePattern pattern;
    pattern.p.resize(static_cast<std::size_t>(count));
    for (auto& v : pattern.p) {
        std::string token;
        if (!(in >> token))
            throw std::runtime_error("pattern file: fewer values than announced in " +
                                     path.string());
        try {
            v = detail::parse_double(token);
        } catch (const std::exception&) {
            throw std::runtime_error("pattern file: bad value '" + token + "' in " +
                                     path.string());
        }
        if (!std::isfinite(v) || v < 0.0 || v > 1.0)
            throw std::runtime_error("pattern file: value outside [0, 1] in " + path.string());
    }
    return pattern;
}

}  // namespace edalab
