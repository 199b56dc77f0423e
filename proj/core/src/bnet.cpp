#include "edalab/bnet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edalab {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

std::vector<int> natural_order(int m) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

void check_order(int m, const std::vector<int>& order) {
    require(order.size() == static_cast<std::size_t>(m), "order: wrong length");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int v : order) {
        require(v >= 0 && v < m, "order: node out of range");
        require(!seen[static_cast<std::size_t>(v)], "order: duplicate node");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

// Cumulative log-factorial table, grown on demand. thread_local keeps the
// learner reentrant across campaign workers.
double log_factorial(std::size_t x) {
    thread_local std::vector<double> table{0.0, 0.0};  // 0! and 1!
    while (table.size() <= x) table.push_back(table.back() + std::log(static_cast<double>(table.size())));
    return table[x];
}

std::size_t parent_combo(const std::vector<std::uint8_t>& row, const std::vector<int>& parents) {
    std::size_t j = 0;
    for (int p : parents) j = (j << 1) | row[static_cast<std::size_t>(p)];
    return j;
}

void check_data(const DataSet& data) {
    require(data.num_vars >= 1, "data: needs at least one variable");
    for (const auto& row : data.rows) {
        require(row.size() == static_cast<std::size_t>(data.num_vars), "data: ragged row");
        for (auto b : row) require(b <= 1, "data: entries must be binary");
    }
}

}  // namespace

Dag::Dag(int m)
    : node_count(m), parents(static_cast<std::size_t>(m)), order(natural_order(m)) {
    require(m >= 1, "Dag: needs at least one node");
}

Dag::Dag(int m, std::vector<int> order_)
    : node_count(m), parents(static_cast<std::size_t>(m)), order(std::move(order_)) {
    require(m >= 1, "Dag: needs at least one node");
    check_order(m, order);
}

void Dag::add_edge(int parent, int child) {
    require(parent >= 0 && parent < node_count && child >= 0 && child < node_count,
            "add_edge: node out of range");
    require(parent != child, "add_edge: self loop");
    auto& ps = parents[static_cast<std::size_t>(child)];
    const auto it = std::lower_bound(ps.begin(), ps.end(), parent);
    if (it == ps.end() || *it != parent) ps.insert(it, parent);
}

bool Dag::has_edge(int parent, int child) const {
    if (child < 0 || child >= node_count) return false;
    const auto& ps = parents[static_cast<std::size_t>(child)];
    return std::binary_search(ps.begin(), ps.end(), parent);
}

int Dag::edge_count() const {
    std::size_t total = 0;
    for (const auto& ps : parents) total += ps.size();
    return static_cast<int>(total);
}

BayesNet uniform_net(int m) { return uniform_net(m, natural_order(m)); }

BayesNet uniform_net(int m, std::vector<int> order) {
    BayesNet net;
    net.structure = Dag(m, std::move(order));
    net.params.theta.assign(static_cast<std::size_t>(m), {0.5, 0.5});
    return net;
}

Cpt fit_params(const Dag& structure, const DataSet& data) {
    check_data(data);
    require(data.num_vars == structure.node_count, "fit_params: variable count mismatch");
    Cpt cpt;
    cpt.theta.resize(static_cast<std::size_t>(structure.node_count));
    for (int m = 0; m < structure.node_count; ++m) {
        const auto& parents = structure.parents[static_cast<std::size_t>(m)];
        const std::size_t combos = std::size_t{1} << parents.size();
        std::vector<std::size_t> ones(combos, 0), totals(combos, 0);
        for (const auto& row : data.rows) {
            const std::size_t j = parent_combo(row, parents);
            ++totals[j];
            ones[j] += row[static_cast<std::size_t>(m)];
        }
        auto& theta = cpt.theta[static_cast<std::size_t>(m)];
        theta.resize(2 * combos);
        for (std::size_t j = 0; j < combos; ++j) {
            const double p1 = (static_cast<double>(ones[j]) + 1.0) /
                              (static_cast<double>(totals[j]) + 2.0);
            theta[2 * j] = 1.0 - p1;
            theta[2 * j + 1] = p1;
        }
    }
    return cpt;
}

DataSet sample(const BayesNet& net, int count, Rng& rng) {
    require(count >= 0, "sample: negative count");
    const int m = net.structure.node_count;
    check_order(m, net.structure.order);
    std::vector<int> pos(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(net.structure.order[i])] = i;
    for (int child = 0; child < m; ++child)
        for (int parent : net.structure.parents[static_cast<std::size_t>(child)])
            require(pos[static_cast<std::size_t>(parent)] < pos[static_cast<std::size_t>(child)],
                    "sample: order must list parents before children");
    require(net.params.theta.size() == static_cast<std::size_t>(m), "sample: table count mismatch");
    for (int node = 0; node < m; ++node)
        require(net.params.theta[static_cast<std::size_t>(node)].size() ==
                    (std::size_t{2} << net.structure.parents[static_cast<std::size_t>(node)].size()),
                "sample: table size mismatch");

    DataSet data;
    data.num_vars = m;
    data.rows.assign(static_cast<std::size_t>(count),
                     std::vector<std::uint8_t>(static_cast<std::size_t>(m), 0));
    for (auto& row : data.rows) {
        for (int node : net.structure.order) {
            const auto& parents = net.structure.parents[static_cast<std::size_t>(node)];
            const std::size_t j = parent_combo(row, parents);
            const double p1 = net.params.theta[static_cast<std::size_t>(node)][2 * j + 1];
            row[static_cast<std::size_t>(node)] =
                static_cast<std::uint8_t>(rng.next_bernoulli(p1));
        }
    }
    return data;
}

double k2_family_score(const DataSet& data, int node, const std::vector<int>& parents) {
    check_data(data);
    require(node >= 0 && node < data.num_vars, "k2: node out of range");
    for (int p : parents) {
        require(p >= 0 && p < data.num_vars, "k2: parent out of range");
        require(p != node, "k2: node cannot parent itself");
    }

    // Only observed parent combinations contribute; unobserved ones score 0.
    // Keys pack the combination above the child's value bit.
    std::vector<std::uint64_t> keys;
    keys.reserve(data.rows.size());
    for (const auto& row : data.rows)
        keys.push_back((static_cast<std::uint64_t>(parent_combo(row, parents)) << 1) |
                       row[static_cast<std::size_t>(node)]);
    std::sort(keys.begin(), keys.end());

    double score = 0.0;
    std::size_t i = 0;
    while (i < keys.size()) {
        const std::uint64_t combo = keys[i] >> 1;
        std::size_t counts[2] = {0, 0};
        while (i < keys.size() && (keys[i] >> 1) == combo) {
            ++counts[keys[i] & 1];
            ++i;
        }
        const std::size_t total = counts[0] + counts[1];
        score += log_factorial(1) - log_factorial(total + 1) + log_factorial(counts[0]) +
                 log_factorial(counts[1]);
    }
    return score;
}

double k2_score(const Dag& structure, const DataSet& data) {
    check_data(data);
    require(data.num_vars == structure.node_count, "k2: variable count mismatch");
    double total = 0.0;
    for (int m = 0; m < structure.node_count; ++m)
        total += k2_family_score(data, m, structure.parents[static_cast<std::size_t>(m)]);
    return total;
}

Dag k2_learn(const DataSet& data, const std::vector<int>& order, int max_parents) {
    check_data(data);
    const int m = data.num_vars;
    check_order(m, order);
    const std::size_t cap = max_parents < 0 ? static_cast<std::size_t>(m) - 1
                                            : static_cast<std::size_t>(max_parents);

    Dag dag(m, order);
    for (int i = 0; i < m; ++i) {
        const int node = order[static_cast<std::size_t>(i)];
        std::vector<int> candidates(order.begin(), order.begin() + i);
        std::sort(candidates.begin(), candidates.end());

        auto& parents = dag.parents[static_cast<std::size_t>(node)];
        double current = k2_family_score(data, node, parents);
        while (parents.size() < cap && !candidates.empty()) {
            int best_candidate = -1;
            double best_score = current;
            for (int cand : candidates) {
                std::vector<int> trial = parents;
                trial.insert(std::lower_bound(trial.begin(), trial.end(), cand), cand);
                const double s = k2_family_score(data, node, trial);
                if (s > best_score) {  // strict: ties keep the earlier candidate
                    best_score = s;
                    best_candidate = cand;
                }
            }
            if (best_candidate < 0) break;
            parents.insert(std::lower_bound(parents.begin(), parents.end(), best_candidate),
                           best_candidate);
            candidates.erase(std::find(candidates.begin(), candidates.end(), best_candidate));
            current = best_score;
        }
    }
    return dag;
}

int shd(const Dag& a, const Dag& b) {
    require(a.node_count == b.node_count, "shd: node counts differ");
    int distance = 0;
    for (int u = 0; u < a.node_count; ++u)
        for (int v = u + 1; v < a.node_count; ++v) {
            const int status_a = a.has_edge(u, v) ? 1 : (a.has_edge(v, u) ? 2 : 0);
            const int status_b = b.has_edge(u, v) ? 1 : (b.has_edge(v, u) ? 2 : 0);
            if (status_a != status_b) ++distance;
        }
    return distance;
}

std::string dump_structure(const Dag& dag) {
    std::ostringstream out;
    for (int node = 0; node < dag.node_count; ++node) {
        out << node + 1 << ':';
        const auto& ps = dag.parents[static_cast<std::size_t>(node)];
        for (std::size_t i = 0; i < ps.size(); ++i)
            out << (i == 0 ? " " : ",") << ps[i] + 1;
        out << '\n';
    }
    return out.str();
}

Dag parse_structure(const std::string& text) {
    std::vector<std::vector<int>> parsed;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(':');
        require(colon != std::string::npos, "structure: missing ':'");
        const int node = std::stoi(line.substr(0, colon));
        require(node == static_cast<int>(parsed.size()) + 1,
                "structure: nodes must appear as 1..m in order");
        std::vector<int> parents;
        std::string rest = line.substr(colon + 1);
        std::istringstream fields(rest);
        std::string field;
        while (std::getline(fields, field, ',')) {
            if (field.find_first_not_of(" \t") == std::string::npos) continue;
            parents.push_back(std::stoi(field) - 1);
        }
        parsed.push_back(std::move(parents));
    }
    require(!parsed.empty(), "structure: empty dump");

    Dag dag(static_cast<int>(parsed.size()));
    for (std::size_t child = 0; child < parsed.size(); ++child)
        for (int parent : parsed[child]) dag.add_edge(parent, static_cast<int>(child));
    return dag;
}

}  // namespace edalab
