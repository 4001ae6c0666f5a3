#include "lapmap/reports.hpp"

#include <json.hpp>

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace lapmap {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

json fit_json(const GaussianFitResult& fit) {
    json errors;
    json errors_percent;
    const char* names[4] = {"A", "H", "sigma", "V"};
    for (int i = 0; i < 4; ++i) {
        errors[names[i]] = fit.one_sigma_errors[static_cast<std::size_t>(i)];
        errors_percent[names[i]] = fit.one_sigma_errors_percent[static_cast<std::size_t>(i)];
    }
    return json{{"A", fit.amplitude},
                {"H", fit.center},
                {"sigma", fit.width},
                {"V", fit.offset},
                {"one_sigma_errors", errors},
                {"one_sigma_errors_percent", errors_percent},
                {"residual_norm", fit.residual_norm},
                {"converged", fit.converged}};
}

}  // namespace

std::string summary_to_json(const GraphSummary& summary) {
    json vertices = json::array();
    for (std::size_t v = 0; v < summary.vertex_labels.size(); ++v) {
        vertices.push_back(json{{"label", summary.vertex_labels[v]},
                                {"degree", summary.degree_by_vertex[v]},
                                {"local_clustering", summary.local_clustering[v]},
                                {"neighborhood_edges", summary.neighborhood_edge_counts[v]}});
    }
    const json doc{{"component_count", summary.component_sizes.size()},
                   {"component_sizes", summary.component_sizes},
                   {"vertex_connectivity", summary.vertex_connectivity},
                   {"average_clustering", summary.average_clustering},
                   {"clustering_variance", summary.clustering_variance},
                   {"betti_1", summary.betti_1},
                   {"vertices", vertices}};
    return doc.dump(2) + "\n";
}

std::string eigen_report_json(const SpectralEmbedding& e,
                              const std::vector<std::string>& vertex_labels) {
    json components = json::array();
    for (const auto& spectrum : e.spectra) {
        json labels = json::array();
        for (int v : spectrum.vertices) {
            labels.push_back(vertex_labels.at(static_cast<std::size_t>(v)));
        }
        json eigenvalues = json::array();
        for (const auto& pair : spectrum.pairs) eigenvalues.push_back(pair.eigenvalue);
        components.push_back(json{{"vertices", labels}, {"eigenvalues", eigenvalues}});
    }
    const json doc{{"m_dims", e.m_dims},
                   {"eigenvalues", e.eigenvalues},
                   {"zero_eigenvalue_count", e.zero_eigenvalue_count()},
                   {"components", components}};
    return doc.dump(2) + "\n";
}

void write_embedding_csv(std::ostream& out, const std::vector<std::string>& row_labels,
                         const Eigen::MatrixXd& reduced) {
    if (static_cast<Eigen::Index>(row_labels.size()) != reduced.rows()) {
        throw std::invalid_argument("label count does not match embedding rows");
    }
    out << "row_label";
    for (Eigen::Index c = 0; c < reduced.cols(); ++c) out << ",c" << (c + 1);
    out << "\n";
    for (Eigen::Index r = 0; r < reduced.rows(); ++r) {
        out << row_labels[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < reduced.cols(); ++c) {
            out << ',' << format_double(reduced(r, c));
        }
        out << "\n";
    }
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve) {
    out << "value,vertex_connectivity,average_clustering\n";
    for (const auto& point : curve) {
        out << format_double(point.value) << ',' << point.vertex_connectivity << ','
            << format_double(point.average_clustering) << "\n";
    }
}

void write_xy_csv(std::ostream& out, const std::vector<std::pair<double, double>>& series) {
    out << "x,y\n";
    for (const auto& [x, y] : series) {
        out << format_double(x) << ',' << format_double(y) << "\n";
    }
}

void write_grid_csv(std::ostream& out, const SweepGrid& variance_grid,
                    const SweepGrid& outlier_grid) {
    if (variance_grid.epsilon_values != outlier_grid.epsilon_values ||
        variance_grid.t_values != outlier_grid.t_values) {
        throw std::invalid_argument("variance and outlier grids use different axes");
    }
    out << "epsilon,t,mean_variance,max_variance,outliers\n";
    for (std::size_t e = 0; e < variance_grid.epsilon_values.size(); ++e) {
        for (std::size_t ti = 0; ti < variance_grid.t_values.size(); ++ti) {
            const SweepCell& var_cell = variance_grid.cells[e][ti];
            const SweepCell& out_cell = outlier_grid.cells[e][ti];
            out << format_double(variance_grid.epsilon_values[e]) << ','
                << format_double(variance_grid.t_values[ti]) << ','
                << format_double(var_cell.mean_variance) << ','
                << format_double(var_cell.max_variance) << ','
                << format_double(out_cell.outlier_count) << "\n";
        }
    }
}

namespace {

json peak_json(const SweepGrid& grid, std::pair<int, int> cell, const char* value_key,
               double value) {
    json doc;
    doc["epsilon_index"] = cell.first;
    doc["t_index"] = cell.second;
    if (cell.first >= 0 && cell.second >= 0) {
        doc["epsilon"] = grid.epsilon_values[static_cast<std::size_t>(cell.first)];
        doc["t"] = grid.t_values[static_cast<std::size_t>(cell.second)];
        doc[value_key] = value;
    }
    return doc;
}

}  // namespace

std::string grid_peaks_json(const SweepGrid& variance_grid, const SweepGrid& outlier_grid) {
    const auto var_cell = variance_grid.peak_variance_cell();
    const auto out_cell = outlier_grid.peak_outlier_cell();
    json doc;
    doc["peak_variance"] = peak_json(
        variance_grid, var_cell, "mean_variance",
        var_cell.first >= 0 ? variance_grid.cells[static_cast<std::size_t>(var_cell.first)]
                                  [static_cast<std::size_t>(var_cell.second)]
                                      .mean_variance
                            : 0.0);
    doc["peak_outliers"] = peak_json(
        outlier_grid, out_cell, "outlier_count",
        out_cell.first >= 0 ? outlier_grid.cells[static_cast<std::size_t>(out_cell.first)]
                                  [static_cast<std::size_t>(out_cell.second)]
                                      .outlier_count
                            : 0.0);
    return doc.dump(2) + "\n";
}

std::string fit_to_json(const GaussianFitResult& fit) {
    return fit_json(fit).dump(2) + "\n";
}

void write_baseline_csv(std::ostream& out, const std::vector<BaselineRow>& rows) {
    out << "n,A,H,sigma,V,converged\n";
    for (const auto& row : rows) {
        out << row.n_vertices << ',' << format_double(row.fit.amplitude) << ','
            << format_double(row.fit.center) << ',' << format_double(row.fit.width) << ','
            << format_double(row.fit.offset) << ',' << (row.fit.converged ? 1 : 0) << "\n";
    }
}

std::string baseline_to_json(const std::vector<BaselineRow>& rows) {
    json list = json::array();
    for (const auto& row : rows) {
        list.push_back(json{{"n", row.n_vertices}, {"fit", fit_json(row.fit)}});
    }
    const json doc{{"rows", list}};
    return doc.dump(2) + "\n";
}

}  // namespace lapmap
