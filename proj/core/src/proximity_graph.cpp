#include "lapmap/proximity_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace lapmap {

namespace {

std::vector<std::string> default_labels(Eigen::Index k) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

ProximityGraph from_edge_set(const DistanceMatrix& d, std::set<std::pair<int, int>> edge_set,
                             AdjacencyRule rule, double rule_value) {
    ProximityGraph g;
    g.vertex_labels = default_labels(d.size());
    g.edges.assign(edge_set.begin(), edge_set.end());
    g.rule = rule;
    g.rule_value = rule_value;
    return g;
}

// Indices of the first n candidates of vertex i under the given ordering of
// squared distances; ties resolved toward the lower vertex index.
template <typename Better>
std::vector<int> ranked_candidates(const DistanceMatrix& d, int i, int n, Better better) {
    const int k = static_cast<int>(d.size());
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(k) - 1);
    for (int j = 0; j < k; ++j) {
        if (j != i) order.push_back(j);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double da = d.sq_dist(i, a);
        const double db = d.sq_dist(i, b);
        if (da != db) return better(da, db);
        return a < b;
    });
    order.resize(static_cast<std::size_t>(n));
    return order;
}

ProximityGraph neighbor_rule_graph(const DistanceMatrix& d, int n, AdjacencyRule rule) {
    const int k = static_cast<int>(d.size());
    if (n < 1 || n > k - 1) {
        throw std::invalid_argument("neighbor count must lie in [1, k-1], got n=" +
                                    std::to_string(n) + " for k=" + std::to_string(k));
    }
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < k; ++i) {
        std::vector<int> picks =
            rule == AdjacencyRule::Nearest
                ? ranked_candidates(d, i, n, [](double a, double b) { return a < b; })
                : ranked_candidates(d, i, n, [](double a, double b) { return a > b; });
        for (int j : picks) {
            edge_set.insert({std::min(i, j), std::max(i, j)});
        }
    }
    return from_edge_set(d, std::move(edge_set), rule, static_cast<double>(n));
}

}  // namespace

const char* to_string(AdjacencyRule rule) {
    switch (rule) {
        case AdjacencyRule::Epsilon: return "epsilon";
        case AdjacencyRule::Nearest: return "nearest";
        case AdjacencyRule::Farthest: return "farthest";
    }
    return "?";
}

bool ProximityGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    const std::pair<int, int> e{std::min(i, j), std::max(i, j)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<std::vector<int>> ProximityGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count()));
    for (const auto& [i, j] : edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<std::vector<std::uint64_t>> ProximityGraph::adjacency_bits() const {
    const std::size_t k = static_cast<std::size_t>(vertex_count());
    const std::size_t words = (k + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(k, std::vector<std::uint64_t>(words, 0));
    for (const auto& [i, j] : edges) {
        bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] |=
            std::uint64_t{1} << (static_cast<std::size_t>(j) % 64);
        bits[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) / 64] |=
            std::uint64_t{1} << (static_cast<std::size_t>(i) % 64);
    }
    return bits;
}

std::vector<int> ProximityGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count()), 0);
    for (const auto& [i, j] : edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

ProximityGraph epsilon_graph(const DistanceMatrix& d, double epsilon) {
    const int k = static_cast<int>(d.size());
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (d.sq_dist(i, j) < epsilon) edge_set.insert({i, j});
        }
    }
    return from_edge_set(d, std::move(edge_set), AdjacencyRule::Epsilon, epsilon);
}

ProximityGraph knn_graph(const DistanceMatrix& d, int n) {
    return neighbor_rule_graph(d, n, AdjacencyRule::Nearest);
}

ProximityGraph farthest_graph(const DistanceMatrix& d, int n) {
    return neighbor_rule_graph(d, n, AdjacencyRule::Farthest);
}

}  // namespace lapmap
