#pragma once

#include "lapmap/feature_matrix.hpp"

#include <cstdint>

namespace lapmap {

/// Generates a binary feature matrix with known cluster ground truth:
/// n_clusters random binary centroids, each point a noisy copy of the
/// centroid it is assigned to (round-robin), with every coordinate flipped
/// independently with probability flip_prob.
///
/// Row labels carry the assignment as a suffix, e.g. "p004_c1". The output
/// is deterministic for a fixed seed.
///
/// Throws std::invalid_argument if n_clusters is zero or exceeds n_points,
/// or if flip_prob is outside [0, 0.5).
FeatureMatrix generate_synthetic(int n_points, int n_coords, int n_clusters,
                                 double flip_prob, std::uint64_t seed);

}  // namespace lapmap
