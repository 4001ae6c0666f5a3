#pragma once

#include "lapmap/proximity_graph.hpp"

#include <Eigen/Core>

namespace lapmap {

/// Heat-kernel weighted graph: W_ij = exp(-sq_dist(i,j)/t) on edges and 0
/// elsewhere, D the diagonal of row sums, L = D - W. Every row of L sums to
/// zero and L is symmetric positive semidefinite.
struct HeatWeightedGraph {
    ProximityGraph graph;
    double t = 1.0;
    Eigen::MatrixXd weights;       // W, symmetric, zero diagonal
    Eigen::VectorXd degree;        // D_ii = sum_j W_ji
    Eigen::MatrixXd laplacian;     // L = D - W

    Eigen::Index size() const { return weights.rows(); }
};

/// Attaches heat-kernel weights to a proximity graph.
/// Throws std::invalid_argument if t <= 0 or the graph and distance matrix
/// disagree on the vertex count.
HeatWeightedGraph heat_weights(const ProximityGraph& g, const DistanceMatrix& d, double t);

}  // namespace lapmap
