#include "lapmap/sweep.hpp"

#include "lapmap/distance.hpp"
#include "lapmap/heat_kernel.hpp"
#include "lapmap/spectral.hpp"
#include "lapmap/stats.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lapmap {

namespace {

void check_axis(const std::vector<double>& values, const char* name, bool require_positive) {
    if (values.empty()) {
        throw std::invalid_argument(std::string(name) + " grid is empty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument(std::string(name) + " grid has a non-finite value");
        }
        if (require_positive && values[i] <= 0.0) {
            throw std::invalid_argument(std::string(name) + " grid values must be positive");
        }
        if (i > 0 && values[i] <= values[i - 1]) {
            throw std::invalid_argument(std::string(name) +
                                        " grid must be strictly ascending");
        }
    }
}

enum class CellStatistic { Variance, Outliers };

SweepGrid run_sweep(const FeatureMatrix& m, const std::vector<double>& epsilon_values,
                    const std::vector<double>& t_values, Eigen::Index m_dims,
                    CellStatistic statistic, double fence_multiplier) {
    check_axis(epsilon_values, "epsilon", false);
    check_axis(t_values, "t", true);
    if (m_dims < 1) {
        throw std::invalid_argument("m_dims must be at least 1");
    }

    const DistanceMatrix distances = pairwise_sq_distances(m);
    const FeatureMatrix entities = transpose_orientation(m);

    SweepGrid grid;
    grid.epsilon_values = epsilon_values;
    grid.t_values = t_values;
    grid.cells.resize(epsilon_values.size());
    grid.epsilon_summaries.reserve(epsilon_values.size());

    std::vector<double> coordinate(static_cast<std::size_t>(entities.rows()));
    for (std::size_t e = 0; e < epsilon_values.size(); ++e) {
        const ProximityGraph g = epsilon_graph(distances, epsilon_values[e]);
        grid.epsilon_summaries.push_back(graph_summary(g));
        grid.cells[e].resize(t_values.size());
        for (std::size_t ti = 0; ti < t_values.size(); ++ti) {
            const HeatWeightedGraph h = heat_weights(g, distances, t_values[ti]);
            SpectralEmbedding se = analyze_spectrum(h, m_dims);
            const Eigen::MatrixXd reduced = embed(entities, se.transform);

            SweepCell& cell = grid.cells[e][ti];
            if (reduced.rows() == 0) continue;
            double mean_stat = 0.0;
            double max_var = 0.0;
            for (Eigen::Index c = 0; c < reduced.cols(); ++c) {
                for (Eigen::Index r = 0; r < reduced.rows(); ++r) {
                    coordinate[static_cast<std::size_t>(r)] = reduced(r, c);
                }
                if (statistic == CellStatistic::Variance) {
                    const double var = population_variance(coordinate);
                    mean_stat += var;
                    max_var = std::max(max_var, var);
                } else {
                    mean_stat += static_cast<double>(
                        count_outliers(coordinate, fence_multiplier));
                }
            }
            mean_stat /= static_cast<double>(reduced.cols());
            if (statistic == CellStatistic::Variance) {
                cell.mean_variance = mean_stat;
                cell.max_variance = max_var;
            } else {
                cell.outlier_count = mean_stat;
            }
        }
    }
    return grid;
}

template <typename Extract>
std::pair<int, int> argmax_cell(const SweepGrid& grid, Extract extract) {
    std::pair<int, int> best{-1, -1};
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < grid.cells.size(); ++e) {
        for (std::size_t ti = 0; ti < grid.cells[e].size(); ++ti) {
            const double value = extract(grid.cells[e][ti]);
            if (value > best_value) {
                best_value = value;
                best = {static_cast<int>(e), static_cast<int>(ti)};
            }
        }
    }
    return best;
}

}  // namespace

std::pair<int, int> SweepGrid::peak_variance_cell() const {
    return argmax_cell(*this, [](const SweepCell& c) { return c.mean_variance; });
}

std::pair<int, int> SweepGrid::peak_outlier_cell() const {
    return argmax_cell(*this, [](const SweepCell& c) { return c.outlier_count; });
}

std::vector<CurvePoint> curve_connectivity_clustering(const FeatureMatrix& m,
                                                      AdjacencyRule rule,
                                                      const std::vector<double>& values) {
    if (rule == AdjacencyRule::Farthest) {
        throw std::invalid_argument("curve supports the epsilon and nearest rules only");
    }
    const DistanceMatrix distances = pairwise_sq_distances(m);
    std::vector<CurvePoint> curve;
    curve.reserve(values.size());
    for (double value : values) {
        ProximityGraph g;
        if (rule == AdjacencyRule::Epsilon) {
            g = epsilon_graph(distances, value);
        } else {
            const double rounded = std::nearbyint(value);
            if (rounded != value) {
                throw std::invalid_argument("neighbor counts must be integers");
            }
            g = knn_graph(distances, static_cast<int>(rounded));
        }
        CurvePoint point;
        point.value = value;
        point.vertex_connectivity = vertex_connectivity(g);
        point.average_clustering = average_clustering(g);
        curve.push_back(point);
    }
    return curve;
}

SweepGrid sweep_variance(const FeatureMatrix& m, const std::vector<double>& epsilon_values,
                         const std::vector<double>& t_values, Eigen::Index m_dims) {
    return run_sweep(m, epsilon_values, t_values, m_dims, CellStatistic::Variance, 1.5);
}

SweepGrid sweep_outliers(const FeatureMatrix& m, const std::vector<double>& epsilon_values,
                         const std::vector<double>& t_values, Eigen::Index m_dims,
                         double fence_multiplier) {
    return run_sweep(m, epsilon_values, t_values, m_dims, CellStatistic::Outliers,
                     fence_multiplier);
}

std::vector<std::pair<double, double>> clustering_variance_curve(
    const FeatureMatrix& m, const std::vector<double>& epsilon_values) {
    const DistanceMatrix distances = pairwise_sq_distances(m);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(epsilon_values.size());
    for (double eps : epsilon_values) {
        const ProximityGraph g = epsilon_graph(distances, eps);
        curve.emplace_back(eps, clustering_variance(g));
    }
    return curve;
}

FeatureMatrix random_binary_matrix(int n_rows, int n_cols, std::uint64_t seed) {
    if (n_rows < 1 || n_cols < 1) {
        throw std::invalid_argument("random matrix needs positive dimensions");
    }
    FeatureMatrix m;
    m.domain = ValueDomain::Binary;
    m.orientation = Orientation::ParametersAsRows;
    m.row_labels.reserve(static_cast<std::size_t>(n_rows));
    for (int i = 0; i < n_rows; ++i) m.row_labels.push_back("r" + std::to_string(i));
    m.col_labels.reserve(static_cast<std::size_t>(n_cols));
    for (int j = 0; j < n_cols; ++j) m.col_labels.push_back("c" + std::to_string(j));
    m.values.resize(n_rows, n_cols);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n_rows; ++i) {
        for (int j = 0; j < n_cols; ++j) {
            m.values(i, j) = static_cast<double>(detail::random_bit(rng));
        }
    }
    return m;
}

std::vector<BaselineRow> random_baseline(const std::vector<int>& n_vertices_list,
                                         int n_coords, const std::vector<double>& epsilon_values,
                                         std::uint64_t seed) {
    if (n_vertices_list.empty()) {
        throw std::invalid_argument("baseline needs at least one graph size");
    }
    std::vector<BaselineRow> rows;
    rows.reserve(n_vertices_list.size());
    std::vector<double> xs(epsilon_values.begin(), epsilon_values.end());
    for (int n : n_vertices_list) {
        const std::uint64_t sub_seed =
            detail::mix_seed(seed, static_cast<std::uint64_t>(n));
        const FeatureMatrix m = random_binary_matrix(n, n_coords, sub_seed);
        const auto curve = clustering_variance_curve(m, epsilon_values);
        std::vector<double> ys;
        ys.reserve(curve.size());
        for (const auto& [eps, var] : curve) ys.push_back(var);
        BaselineRow row;
        row.n_vertices = n;
        row.fit = fit_gaussian(xs, ys);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace lapmap
