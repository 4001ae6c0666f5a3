#pragma once

#include "lapmap/components.hpp"
#include "lapmap/feature_matrix.hpp"
#include "lapmap/heat_kernel.hpp"

#include <Eigen/Core>

#include <vector>

namespace lapmap {

/// One generalized eigenpair of L psi = lambda D psi, restricted to a
/// connected component. The eigenvector is stored compactly: entry r
/// belongs to the r-th vertex of the component's sorted index list.
struct EigenPair {
    double eigenvalue = 0.0;
    Eigen::VectorXd vector;
};

/// Spectrum of one connected component. Singleton components get the
/// conventional spectrum {0} with an empty eigenvector.
struct ComponentSpectrum {
    std::vector<int> vertices;
    std::vector<EigenPair> pairs;
};

/// Full spectral picture of a heat-weighted graph: per-component spectra,
/// the m x k transform whose rows assemble the first nontrivial
/// eigenvectors of every component, and (after embed) the reduced
/// coordinates of the entities.
struct SpectralEmbedding {
    ComponentPartition partition;
    std::vector<ComponentSpectrum> spectra;   // aligned with partition.components
    std::vector<double> eigenvalues;          // all eigenvalues, ascending
    Eigen::Index m_dims = 0;
    Eigen::MatrixXd transform;                // m_dims x k
    Eigen::MatrixXd reduced;                  // entities x m_dims, filled by embed()

    /// Number of eigenvalues within `tol` of zero; equals the component
    /// count on well-conditioned inputs.
    int zero_eigenvalue_count(double tol = 1e-8) const;
};

/// Solves L psi = lambda D psi restricted to one connected component of at
/// least 2 vertices, via the symmetric reduction D^{-1/2} L D^{-1/2}.
/// Eigenpairs come back sorted by ascending eigenvalue, D-orthonormal, with
/// each vector's sign fixed so its largest-magnitude entry (lowest index on
/// ties) is positive.
///
/// Throws std::invalid_argument on a singleton component; the caller embeds
/// those as zeros by convention.
std::vector<EigenPair> solve_component_eigen(const HeatWeightedGraph& h,
                                             const std::vector<int>& component);

/// Assembles the m x k transform: for each component, eigenvectors
/// psi_1..psi_cap (cap = min(m, size-1), skipping the constant psi_0) fill
/// rows 0..cap-1 at that component's vertex indices. Everything else is 0.
Eigen::MatrixXd build_transform(const std::vector<ComponentSpectrum>& spectra,
                                Eigen::Index m, Eigen::Index vertex_count);

/// Maps each row p of `entities` to p' = T p. The row count of T's
/// transpose must match the entity vector length (the graph vertex count).
///
/// Throws std::invalid_argument on dimension mismatch.
Eigen::MatrixXd embed(const FeatureMatrix& entities, const Eigen::MatrixXd& transform);

/// Runs the whole spectral pipeline on a weighted graph: component
/// partition, per-component eigensolves (singletons by convention), the
/// flattened ascending eigenvalue list and the transform. `reduced` is left
/// empty; fill it with embed().
SpectralEmbedding analyze_spectrum(const HeatWeightedGraph& h, Eigen::Index m_dims);

}  // namespace lapmap
