#pragma once

#include "lapmap/feature_matrix.hpp"

#include <Eigen/Core>

namespace lapmap {

/// Symmetric matrix of squared Euclidean distances between data points.
/// On {0,1} vectors the squared distance equals the Hamming distance.
struct DistanceMatrix {
    Eigen::MatrixXd sq_dist;

    DistanceMatrix() = default;
    explicit DistanceMatrix(Eigen::MatrixXd d);

    Eigen::Index size() const { return sq_dist.rows(); }

    double max_off_diagonal() const;
    /// Smallest off-diagonal entry; 0 for matrices with fewer than 2 points.
    double min_off_diagonal() const;
};

/// Squared Euclidean distances between the rows of m.
/// Throws lapmap::InputError if any cell is missing (impute first).
DistanceMatrix pairwise_sq_distances(const FeatureMatrix& m);

}  // namespace lapmap
