#pragma once

#include "lapmap/gaussian_fit.hpp"
#include "lapmap/graph_metrics.hpp"
#include "lapmap/spectral.hpp"
#include "lapmap/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lapmap {

/// Shortest round-trip decimal rendering of a double ("0.5", "2", ...).
/// All CSV/JSON writers below use it, so outputs are byte-stable.
std::string format_double(double v);

/// GraphSummary as JSON: scalar fields plus a per-vertex table with degree,
/// local clustering and the neighborhood-edge diagnostic.
std::string summary_to_json(const GraphSummary& summary);

/// Per-component eigenvalue lists plus the zero-eigenvalue count.
std::string eigen_report_json(const SpectralEmbedding& e,
                              const std::vector<std::string>& vertex_labels);

/// CSV "row_label,c1,...,cm" of reduced coordinates.
void write_embedding_csv(std::ostream& out, const std::vector<std::string>& row_labels,
                         const Eigen::MatrixXd& reduced);

/// CSV "value,vertex_connectivity,average_clustering".
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve);

/// CSV "x,y".
void write_xy_csv(std::ostream& out, const std::vector<std::pair<double, double>>& series);

/// Long-format CSV "epsilon,t,mean_variance,max_variance,outliers" joining
/// a variance grid with the outlier grid computed on the same axes.
/// Throws std::invalid_argument if the two grids disagree on the axes.
void write_grid_csv(std::ostream& out, const SweepGrid& variance_grid,
                    const SweepGrid& outlier_grid);

/// Peak-cell coordinates of both grids as JSON.
std::string grid_peaks_json(const SweepGrid& variance_grid, const SweepGrid& outlier_grid);

/// {A, H, sigma, V, one_sigma_errors{...}, residual_norm, converged}.
std::string fit_to_json(const GaussianFitResult& fit);

/// CSV "n,A,H,sigma,V,converged".
void write_baseline_csv(std::ostream& out, const std::vector<BaselineRow>& rows);

std::string baseline_to_json(const std::vector<BaselineRow>& rows);

}  // namespace lapmap
