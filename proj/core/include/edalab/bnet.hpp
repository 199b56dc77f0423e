#ifndef EDALAB_BNET_HPP
#define EDALAB_BNET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "edalab/rng.hpp"

namespace edalab {

/// Directed acyclic graph over binary nodes. `order` is the node ordering the
/// K2 learner works with; a structure is guaranteed acyclic whenever every
/// parent precedes its child in `order`.
struct Dag {
    int node_count = 0;
    std::vector<std::vector<int>> parents;  // sorted ascending, no duplicates
    std::vector<int> order;                 // defaults to 0..m-1

    Dag() = default;
    explicit Dag(int m);
    Dag(int m, std::vector<int> order);

    void add_edge(int parent, int child);
    bool has_edge(int parent, int child) const;
    int edge_count() const;

    bool operator==(const Dag&) const = default;
};

/// Conditional probability tables: theta[m][2*j + v] is the probability that
/// node m takes value v given its parents are in combination j. Combination
/// index j uses the stored parent order, first parent most significant.
struct Cpt {
    std::vector<std::vector<double>> theta;

    bool operator==(const Cpt&) const = default;
};

struct BayesNet {
    Dag structure;
    Cpt params;

    bool operator==(const BayesNet&) const = default;
};

struct DataSet {
    int num_vars = 0;
    std::vector<std::vector<std::uint8_t>> rows;
};

/// Edgeless network with uniform CPTs over m nodes.
BayesNet uniform_net(int m);
BayesNet uniform_net(int m, std::vector<int> order);

/// Bayesian parameter estimate with a Dirichlet(1) prior:
/// theta_mjv = (N_mjv + 1) / (N_mj + 2). Every row is strictly positive.
Cpt fit_params(const Dag& structure, const DataSet& data);

/// Ancestral sampling of `count` rows. The net's `order` must list parents
/// before children; throws std::invalid_argument otherwise.
DataSet sample(const BayesNet& net, int count, Rng& rng);

/// Log marginal likelihood of the structure given the data, the sum of the
/// per-node family scores. Zero counts give score 0.
double k2_score(const Dag& structure, const DataSet& data);
double k2_family_score(const DataSet& data, int node, const std::vector<int>& parents);

/// Greedy structure search: per node in `order`, repeatedly adds the single
/// predecessor that most increases the family score, stopping when no strict
/// improvement remains or the parent cap is hit. Ties go to the lowest
/// candidate index. max_parents < 0 means unbounded.
Dag k2_learn(const DataSet& data, const std::vector<int>& order, int max_parents = -1);

/// Structural Hamming distance: number of unordered node pairs whose edge
/// status (absent / u->v / v->u) differs between the two structures.
int shd(const Dag& a, const Dag& b);

/// Plain-text adjacency dump, one line per node: "node: parent,parent,...".
/// Node ids are 1-based in the text form.
std::string dump_structure(const Dag& dag);
Dag parse_structure(const std::string& text);

}  // namespace edalab

#endif
