#include "lapmap/heat_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace lapmap {

HeatWeightedGraph heat_weights(const ProximityGraph& g, const DistanceMatrix& d, double t) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("heat parameter t must be positive");
    }
    if (g.vertex_count() != d.size()) {
        throw std::invalid_argument("graph and distance matrix disagree on vertex count");
    }

    const Eigen::Index k = d.size();
    HeatWeightedGraph h;
    h.graph = g;
    h.t = t;
    h.weights = Eigen::MatrixXd::Zero(k, k);
    for (const auto& [i, j] : g.edges) {
        const double w = std::exp(-d.sq_dist(i, j) / t);
        h.weights(i, j) = w;
        h.weights(j, i) = w;
    }
    h.degree = h.weights.colwise().sum();
    h.laplacian = -h.weights;
    h.laplacian.diagonal() = h.degree;
    return h;
}

}  // namespace lapmap
