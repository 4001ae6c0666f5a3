#pragma once

#include "lapmap/feature_matrix.hpp"
#include "lapmap/gaussian_fit.hpp"
#include "lapmap/graph_metrics.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lapmap {

struct SweepCell {
    double mean_variance = 0.0;
    double max_variance = 0.0;
    double outlier_count = 0.0;  // per-coordinate counts averaged over coordinates
};

/// Grid of per-(epsilon, t) measurements. The proximity graph depends only
/// on epsilon, so graph statistics are stored once per epsilon row and
/// referenced by every cell in that row.
struct SweepGrid {
    std::vector<double> epsilon_values;  // ascending
    std::vector<double> t_values;        // ascending, positive
    std::vector<std::vector<SweepCell>> cells;      // [epsilon_index][t_index]
    std::vector<GraphSummary> epsilon_summaries;    // [epsilon_index]

    /// Argmax cell of mean_variance, row-major first on ties.
    std::pair<int, int> peak_variance_cell() const;
    /// Argmax cell of outlier_count, row-major first on ties.
    std::pair<int, int> peak_outlier_cell() const;
};

struct CurvePoint {
    double value = 0.0;  // epsilon or n
    int vertex_connectivity = 0;
    double average_clustering = 0.0;
};

/// Connectivity and clustering of the graphs built on pairwise squared
/// distances of m's rows, one row of output per grid value. `rule` must be
/// Epsilon or Nearest.
std::vector<CurvePoint> curve_connectivity_clustering(const FeatureMatrix& m,
                                                      AdjacencyRule rule,
                                                      const std::vector<double>& values);

/// For each (epsilon, t): builds the heat-weighted graph on m's rows and
/// the m_dims-row transform, embeds the column entities of m (rows of the
/// transpose), and records the mean and max over coordinates of the
/// population variance of each reduced coordinate. Edgeless cells record 0.
SweepGrid sweep_variance(const FeatureMatrix& m, const std::vector<double>& epsilon_values,
                         const std::vector<double>& t_values, Eigen::Index m_dims);

/// Same traversal as sweep_variance, but each cell records the number of
/// reduced-coordinate values outside the Tukey fences, averaged over
/// coordinates. The fence multiplier defaults to the standard 1.5.
SweepGrid sweep_outliers(const FeatureMatrix& m, const std::vector<double>& epsilon_values,
                         const std::vector<double>& t_values, Eigen::Index m_dims,
                         double fence_multiplier = 1.5);

/// Clustering-coefficient variance of epsilon_graph(eps) per grid point.
std::vector<std::pair<double, double>> clustering_variance_curve(
    const FeatureMatrix& m, const std::vector<double>& epsilon_values);

struct BaselineRow {
    int n_vertices = 0;
    GaussianFitResult fit;
};

/// Random-matrix baseline: for each n, draws a uniform random binary
/// n x n_coords matrix (rows are graph vertices), runs the clustering-
/// variance curve over epsilon_values and fits the Gaussian law.
/// Deterministic per seed; each n gets its own derived substream, so the
/// result for a given (seed, n) does not depend on the rest of the list.
std::vector<BaselineRow> random_baseline(const std::vector<int>& n_vertices_list,
                                         int n_coords, const std::vector<double>& epsilon_values,
                                         std::uint64_t seed);

/// Uniform random binary matrix, rows labeled r0..r{n-1}. Deterministic per
/// seed; exposed for tests and the baseline command.
FeatureMatrix random_binary_matrix(int n_rows, int n_cols, std::uint64_t seed);

}  // namespace lapmap
