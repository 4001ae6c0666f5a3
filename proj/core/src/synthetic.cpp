#include "lapmap/synthetic.hpp"

#include "rng.hpp"

#include <stdexcept>
#include <string>

namespace lapmap {

FeatureMatrix generate_synthetic(int n_points, int n_coords, int n_clusters,
                                 double flip_prob, std::uint64_t seed) {
    if (n_points <= 0 || n_coords < 0) {
        throw std::invalid_argument("n_points must be positive and n_coords nonnegative");
    }
    if (n_clusters <= 0 || n_clusters > n_points) {
        throw std::invalid_argument("n_clusters must lie in [1, n_points]");
    }
    if (flip_prob < 0.0 || flip_prob >= 0.5) {
        throw std::invalid_argument("flip_prob must lie in [0, 0.5)");
    }

    std::mt19937_64 rng(seed);

    Eigen::MatrixXd centroids(n_clusters, n_coords);
    for (int c = 0; c < n_clusters; ++c) {
        for (int j = 0; j < n_coords; ++j) {
            centroids(c, j) = detail::random_bit(rng);
        }
    }

    FeatureMatrix m;
    m.domain = ValueDomain::Binary;
    m.orientation = Orientation::LanguagesAsRows;
    m.values.resize(n_points, n_coords);
    m.row_labels.reserve(static_cast<std::size_t>(n_points));
    m.col_labels.reserve(static_cast<std::size_t>(n_coords));
    for (int j = 0; j < n_coords; ++j) {
        m.col_labels.push_back("f" + std::to_string(j));
    }

    for (int i = 0; i < n_points; ++i) {
        const int cluster = i % n_clusters;
        m.row_labels.push_back("p" + std::to_string(i) + "_c" + std::to_string(cluster));
        for (int j = 0; j < n_coords; ++j) {
            double v = centroids(cluster, j);
            if (flip_prob > 0.0 && detail::bernoulli(rng, flip_prob)) {
                v = 1.0 - v;
            }
            m.values(i, j) = v;
        }
    }
    return m;
}

}  // namespace lapmap
