#include "lapmap/distance.hpp"

#include "lapmap/errors.hpp"

#include <limits>
#include <stdexcept>

namespace lapmap {

DistanceMatrix::DistanceMatrix(Eigen::MatrixXd d) : sq_dist(std::move(d)) {
    if (sq_dist.rows() != sq_dist.cols()) {
        throw std::invalid_argument("distance matrix must be square");
    }
    for (Eigen::Index i = 0; i < sq_dist.rows(); ++i) {
        if (sq_dist(i, i) != 0.0) {
            throw std::invalid_argument("distance matrix diagonal must be zero");
        }
        for (Eigen::Index j = i + 1; j < sq_dist.cols(); ++j) {
            if (sq_dist(i, j) < 0.0 || sq_dist(i, j) != sq_dist(j, i)) {
                throw std::invalid_argument("distance matrix must be symmetric and nonnegative");
            }
        }
    }
}

double DistanceMatrix::max_off_diagonal() const {
    double best = 0.0;
    for (Eigen::Index i = 0; i < size(); ++i) {
        for (Eigen::Index j = i + 1; j < size(); ++j) {
            best = std::max(best, sq_dist(i, j));
        }
    }
    return best;
}

double DistanceMatrix::min_off_diagonal() const {
    if (size() < 2) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < size(); ++i) {
        for (Eigen::Index j = i + 1; j < size(); ++j) {
            best = std::min(best, sq_dist(i, j));
        }
    }
    return best;
}

DistanceMatrix pairwise_sq_distances(const FeatureMatrix& m) {
    if (m.has_missing()) {
        throw InputError("impute before distance computation");
    }
    const Eigen::Index k = m.rows();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            const double v = (m.values.row(i) - m.values.row(j)).squaredNorm();
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    DistanceMatrix out;
    out.sq_dist = std::move(d);
    return out;
}

}  // namespace lapmap
