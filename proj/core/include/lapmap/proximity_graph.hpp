#pragma once

#include "lapmap/distance.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lapmap {

enum class AdjacencyRule { Epsilon, Nearest, Farthest };

const char* to_string(AdjacencyRule rule);

/// Undirected simple graph on data points. Edges are stored as ordered
/// (i < j) pairs sorted lexicographically, which makes edge sets directly
/// comparable across runs.
struct ProximityGraph {
    std::vector<std::string> vertex_labels;
    std::vector<std::pair<int, int>> edges;
    AdjacencyRule rule = AdjacencyRule::Epsilon;
    double rule_value = 0.0;  // epsilon for Epsilon, n for Nearest/Farthest

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int i, int j) const;

    /// Neighbor lists, each sorted ascending.
    std::vector<std::vector<int>> adjacency() const;

    /// Adjacency rows packed as 64-bit words, for fast neighborhood
    /// intersections.
    std::vector<std::vector<std::uint64_t>> adjacency_bits() const;

    std::vector<int> degrees() const;
};

/// Edge {i,j} iff sq_dist(i,j) < epsilon (strict). Nonpositive epsilon
/// yields the edgeless graph, so sweep grids may span below the smallest
/// distance.
ProximityGraph epsilon_graph(const DistanceMatrix& d, double epsilon);

/// Edge {i,j} iff j is among the n nearest neighbors of i or i among those
/// of j (union symmetrization). Neighbors are ranked by squared distance,
/// ties broken toward the lower vertex index.
///
/// Throws std::invalid_argument unless 1 <= n <= size-1.
ProximityGraph knn_graph(const DistanceMatrix& d, int n);

/// Edge {i,j} iff j is among the n vertices farthest from i or vice versa
/// (union symmetrization), ties broken toward the lower vertex index.
///
/// Throws std::invalid_argument unless 1 <= n <= size-1.
ProximityGraph farthest_graph(const DistanceMatrix& d, int n);

}  // namespace lapmap
