#include "lapmap/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lapmap {

namespace {

// Flip so the largest-magnitude entry is positive; the first such entry
// decides on ties. Keeps eigenvector output reproducible.
void normalize_sign(Eigen::VectorXd& v) {
    Eigen::Index pick = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > best) {
            best = mag;
            pick = i;
        }
    }
    if (v[pick] < 0.0) v = -v;
}

}  // namespace

int SpectralEmbedding::zero_eigenvalue_count(double tol) const {
    int count = 0;
    for (double lambda : eigenvalues) {
        if (std::abs(lambda) <= tol) ++count;
    }
    return count;
}

std::vector<EigenPair> solve_component_eigen(const HeatWeightedGraph& h,
                                             const std::vector<int>& component) {
    const Eigen::Index nc = static_cast<Eigen::Index>(component.size());
    if (nc < 2) {
        throw std::invalid_argument(
            "component too small; embedding is the zero vector by convention");
    }

    Eigen::MatrixXd sub_w(nc, nc);
    for (Eigen::Index a = 0; a < nc; ++a) {
        for (Eigen::Index b = 0; b < nc; ++b) {
            sub_w(a, b) = h.weights(component[static_cast<std::size_t>(a)],
                                    component[static_cast<std::size_t>(b)]);
        }
    }
    // Degrees restricted to the component equal the global ones: no weight
    // crosses a component boundary.
    Eigen::VectorXd deg = sub_w.colwise().sum();
    for (Eigen::Index a = 0; a < nc; ++a) {
        if (!(deg[a] > 0.0)) {
            throw std::invalid_argument("vertex with zero degree inside a component");
        }
    }

    // Symmetric reduction: S = D^{-1/2} (D - W) D^{-1/2} = I - D^{-1/2} W D^{-1/2}.
    const Eigen::VectorXd inv_sqrt = deg.array().rsqrt();
    Eigen::MatrixXd s = -(inv_sqrt.asDiagonal() * sub_w * inv_sqrt.asDiagonal());
    s.diagonal().array() += 1.0;
    s = 0.5 * (s + s.transpose().eval());  // enforce exact symmetry

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }

    std::vector<EigenPair> pairs;
    pairs.reserve(static_cast<std::size_t>(nc));
    for (Eigen::Index j = 0; j < nc; ++j) {
        EigenPair p;
        p.eigenvalue = solver.eigenvalues()[j];
        // psi = D^{-1/2} u keeps psi' D psi = u' u = I (D-orthonormal).
        p.vector = inv_sqrt.asDiagonal() * solver.eigenvectors().col(j);
        normalize_sign(p.vector);
        pairs.push_back(std::move(p));
    }
    return pairs;
}

Eigen::MatrixXd build_transform(const std::vector<ComponentSpectrum>& spectra,
                                Eigen::Index m, Eigen::Index vertex_count) {
    if (m < 1) {
        throw std::invalid_argument("target dimension m must be at least 1");
    }
    Eigen::MatrixXd transform = Eigen::MatrixXd::Zero(m, vertex_count);
    for (const auto& spectrum : spectra) {
        const Eigen::Index size = static_cast<Eigen::Index>(spectrum.vertices.size());
        if (size < 2) continue;  // singleton components contribute zeros
        const Eigen::Index capacity = std::min(m, size - 1);
        for (Eigen::Index r = 0; r < capacity; ++r) {
            const Eigen::VectorXd& psi = spectrum.pairs[static_cast<std::size_t>(r + 1)].vector;
            for (Eigen::Index a = 0; a < size; ++a) {
                transform(r, spectrum.vertices[static_cast<std::size_t>(a)]) = psi[a];
            }
        }
    }
    return transform;
}

Eigen::MatrixXd embed(const FeatureMatrix& entities, const Eigen::MatrixXd& transform) {
    if (entities.cols() != transform.cols()) {
        throw std::invalid_argument("dimension mismatch: entity vectors have length " +
                                    std::to_string(entities.cols()) +
                                    " but the transform expects " +
                                    std::to_string(transform.cols()));
    }
    return entities.values * transform.transpose();
}

SpectralEmbedding analyze_spectrum(const HeatWeightedGraph& h, Eigen::Index m_dims) {
    SpectralEmbedding e;
    e.m_dims = m_dims;
    e.partition = connected_components(h.graph);
    e.spectra.reserve(e.partition.components.size());

    for (const auto& comp : e.partition.components) {
        ComponentSpectrum spectrum;
        spectrum.vertices = comp;
        if (comp.size() >= 2) {
            spectrum.pairs = solve_component_eigen(h, comp);
        } else {
            spectrum.pairs.push_back(EigenPair{0.0, Eigen::VectorXd()});
        }
        e.spectra.push_back(std::move(spectrum));
    }

    for (const auto& spectrum : e.spectra) {
        for (const auto& p : spectrum.pairs) e.eigenvalues.push_back(p.eigenvalue);
    }
    std::sort(e.eigenvalues.begin(), e.eigenvalues.end());

    e.transform = build_transform(e.spectra, m_dims, h.size());
    return e;
}

}  // namespace lapmap
