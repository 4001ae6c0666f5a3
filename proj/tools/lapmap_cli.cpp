// Command-line front end: ingest, graph, embed, sweep, baseline, synth.
//
// Every command prints its primary result as JSON (or CSV for ingest/synth
// without --out) on stdout; --out adds files. All outputs are deterministic
// for fixed inputs and flags. Exit codes: 0 success, 2 bad input or usage,
// 1 internal failure.

#include "lapmap/distance.hpp"
#include "lapmap/errors.hpp"
#include "lapmap/feature_matrix.hpp"
#include "lapmap/gaussian_fit.hpp"
#include "lapmap/graph_export.hpp"
#include "lapmap/graph_metrics.hpp"
#include "lapmap/heat_kernel.hpp"
#include "lapmap/matrix_io.hpp"
#include "lapmap/proximity_graph.hpp"
#include "lapmap/reports.hpp"
#include "lapmap/spectral.hpp"
#include "lapmap/sweep.hpp"
#include "lapmap/synthetic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Tracks files created during a command so a failure can remove them
// instead of leaving partial output behind.
class OutputWriter {
public:
    void write_file(const fs::path& path, const std::string& content) {
        if (path.has_parent_path()) {
            fs::create_directories(path.parent_path());
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw lapmap::InputError("cannot open output file: " + path.string());
        }
        written_.push_back(path);
        out << content;
        out.close();
        if (!out) {
            throw std::runtime_error("failed writing " + path.string());
        }
    }

    void discard_all() {
        for (const auto& path : written_) {
            std::error_code ec;
            fs::remove(path, ec);
        }
        written_.clear();
    }

private:
    std::vector<fs::path> written_;
};

struct IngestOptions {
    std::string input;
    std::string domain = "binary";
    double min_coverage = 0.55;
    double fill = std::numeric_limits<double>::quiet_NaN();
};

struct GraphChoice {
    std::string rule = "eps";
    double eps = 8.0;
    int n = 1;
};

void add_ingest_options(CLI::App* cmd, IngestOptions& o) {
    cmd->add_option("--input", o.input, "Feature-matrix CSV (rows are languages)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--domain", o.domain, "Cell domain of the input")
        ->check(CLI::IsMember({"binary", "ternary"}))
        ->capture_default_str();
    cmd->add_option("--min-coverage", o.min_coverage,
                    "Keep rows with at least this fraction of known cells")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--fill", o.fill,
                    "Imputation value for missing cells (default: 0.5 binary, 0 ternary)");
}

void add_orientation_option(CLI::App* cmd, std::string& orientation) {
    cmd->add_option("--orientation", orientation,
                    "Graph vertices: params (transpose the input) or languages")
        ->check(CLI::IsMember({"params", "languages"}))
        ->capture_default_str();
}

void add_graph_choice(CLI::App* cmd, GraphChoice& g) {
    cmd->add_option("--rule", g.rule, "Adjacency rule")
        ->check(CLI::IsMember({"eps", "knn", "far"}))
        ->capture_default_str();
    cmd->add_option("--eps", g.eps, "Squared-distance threshold for --rule eps")
        ->capture_default_str();
    cmd->add_option("--n", g.n, "Neighbor count for --rule knn/far")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

lapmap::ValueDomain domain_of(const std::string& name) {
    return name == "ternary" ? lapmap::ValueDomain::Ternary : lapmap::ValueDomain::Binary;
}

double resolve_fill(const IngestOptions& o) {
    if (!std::isnan(o.fill)) return o.fill;
    return o.domain == "ternary" ? 0.0 : 0.5;
}

// read -> coverage filter -> impute; keeps the input's languages-as-rows
// orientation.
lapmap::FeatureMatrix cleaned_input(const IngestOptions& o) {
    lapmap::FeatureMatrix m = lapmap::read_matrix_file(o.input, domain_of(o.domain));
    m = lapmap::filter_rows_by_coverage(m, o.min_coverage);
    return lapmap::impute_missing(m, resolve_fill(o));
}

lapmap::FeatureMatrix analyzed_matrix(const IngestOptions& o, const std::string& orientation) {
    lapmap::FeatureMatrix m = cleaned_input(o);
    if (orientation == "params") {
        m = lapmap::transpose_orientation(m);
    }
    return m;
}

lapmap::ProximityGraph build_graph(const GraphChoice& choice, const lapmap::DistanceMatrix& d,
                                   const std::vector<std::string>& labels) {
    lapmap::ProximityGraph g;
    if (choice.rule == "eps") {
        g = lapmap::epsilon_graph(d, choice.eps);
    } else if (choice.rule == "knn") {
        g = lapmap::knn_graph(d, choice.n);
    } else {
        g = lapmap::farthest_graph(d, choice.n);
    }
    g.vertex_labels = labels;
    return g;
}

// "a:b:s" (inclusive, s > 0) or a comma-separated ascending list.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> values;
    const auto parse_one = [&](const std::string& token) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid value: '" + token + "'");
        }
        if (pos != token.size()) {
            throw std::invalid_argument("bad grid value: '" + token + "'");
        }
        return v;
    };
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string part;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        if (parts.size() != 3) {
            throw std::invalid_argument("grid must be start:stop:step, got '" + spec + "'");
        }
        const double start = parse_one(parts[0]);
        const double stop = parse_one(parts[1]);
        const double step = parse_one(parts[2]);
        if (step <= 0.0 || stop < start) {
            throw std::invalid_argument("grid needs step > 0 and stop >= start");
        }
        const double slack =
            1e-9 * std::max({std::abs(start), std::abs(stop), std::abs(step)});
        for (int i = 0;; ++i) {
            const double v = start + step * i;
            if (v > stop + slack) break;
            values.push_back(v);
        }
    } else {
        std::stringstream ss(spec);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (!token.empty()) values.push_back(parse_one(token));
        }
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i] <= values[i - 1]) {
                throw std::invalid_argument("grid list must be strictly ascending");
            }
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("grid '" + spec + "' is empty");
    }
    return values;
}

std::vector<int> parse_int_list(const std::string& spec) {
    const auto raw = parse_grid(spec);
    std::vector<int> values;
    values.reserve(raw.size());
    for (double v : raw) {
        if (v != std::nearbyint(v)) {
            throw std::invalid_argument("expected integers in '" + spec + "'");
        }
        values.push_back(static_cast<int>(v));
    }
    return values;
}

std::string transform_csv(const lapmap::SpectralEmbedding& se,
                          const std::vector<std::string>& vertex_labels) {
    std::ostringstream out;
    out << "dim";
    for (const auto& label : vertex_labels) out << ',' << label;
    out << "\n";
    for (Eigen::Index r = 0; r < se.transform.rows(); ++r) {
        out << 'c' << (r + 1);
        for (Eigen::Index c = 0; c < se.transform.cols(); ++c) {
            out << ',' << lapmap::format_double(se.transform(r, c));
        }
        out << "\n";
    }
    return out.str();
}

void register_ingest(CLI::App& app, OutputWriter& writer) {
    auto cmd = app.add_subcommand(
        "ingest", "Filter low-coverage rows, impute missing cells, write the cleaned CSV "
                  "and a coverage report");
    auto o = std::make_shared<IngestOptions>();
    auto out_dir = std::make_shared<std::string>();
    add_ingest_options(cmd, *o);
    cmd->add_option("--out", *out_dir,
                    "Directory for cleaned.csv and coverage_report.json "
                    "(CSV to stdout when omitted)");
    cmd->callback([o, out_dir, &writer]() {
        lapmap::FeatureMatrix raw =
            lapmap::read_matrix_file(o->input, domain_of(o->domain));
        lapmap::FeatureMatrix kept = lapmap::filter_rows_by_coverage(raw, o->min_coverage);
        long missing = 0;
        for (Eigen::Index i = 0; i < kept.rows(); ++i) {
            for (Eigen::Index j = 0; j < kept.cols(); ++j) {
                if (lapmap::FeatureMatrix::is_missing(kept.values(i, j))) ++missing;
            }
        }
        const double fill = resolve_fill(*o);
        const lapmap::FeatureMatrix cleaned = lapmap::impute_missing(kept, fill);
        if (out_dir->empty()) {
            lapmap::serialize_matrix(cleaned, std::cout);
            return;
        }

        json row_report = json::array();
        json dropped = json::array();
        for (Eigen::Index i = 0; i < raw.rows(); ++i) {
            const double coverage = raw.row_coverage(i);
            const bool keep = coverage >= o->min_coverage;
            row_report.push_back(json{{"label", raw.row_labels[static_cast<std::size_t>(i)]},
                                      {"coverage", coverage},
                                      {"kept", keep}});
            if (!keep) dropped.push_back(raw.row_labels[static_cast<std::size_t>(i)]);
        }
        const json report{{"min_coverage", o->min_coverage},
                          {"fill", fill},
                          {"rows_in", raw.rows()},
                          {"rows_kept", cleaned.rows()},
                          {"cols", cleaned.cols()},
                          {"missing_filled", missing},
                          {"rows", row_report},
                          {"dropped", dropped}};
        const std::string report_text = report.dump(2) + "\n";

        std::ostringstream csv;
        lapmap::serialize_matrix(cleaned, csv);
        const fs::path dir(*out_dir);
        writer.write_file(dir / "cleaned.csv", csv.str());
        writer.write_file(dir / "coverage_report.json", report_text);
        std::cout << report_text;
    });
}

void register_graph(CLI::App& app, OutputWriter& writer) {
    auto cmd = app.add_subcommand(
        "graph", "Build the proximity graph and report its structure");
    auto o = std::make_shared<IngestOptions>();
    auto orientation = std::make_shared<std::string>("params");
    auto choice = std::make_shared<GraphChoice>();
    auto t = std::make_shared<double>(0.0);
    auto out_dir = std::make_shared<std::string>();
    add_ingest_options(cmd, *o);
    add_orientation_option(cmd, *orientation);
    add_graph_choice(cmd, *choice);
    cmd->add_option("--t", *t, "Heat-kernel scale; > 0 adds edge weights to the exports")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--out", *out_dir,
                    "Directory for graph_summary.json, graph.graphml, graph.dot");
    cmd->callback([o, orientation, choice, t, out_dir, &writer]() {
        const lapmap::FeatureMatrix m = analyzed_matrix(*o, *orientation);
        const lapmap::DistanceMatrix d = lapmap::pairwise_sq_distances(m);
        const lapmap::ProximityGraph g = build_graph(*choice, d, m.row_labels);
        const std::string summary = lapmap::summary_to_json(lapmap::graph_summary(g));
        if (!out_dir->empty()) {
            lapmap::HeatWeightedGraph weighted;
            const lapmap::HeatWeightedGraph* weighted_ptr = nullptr;
            if (*t > 0.0) {
                weighted = lapmap::heat_weights(g, d, *t);
                weighted_ptr = &weighted;
            }
            std::ostringstream graphml;
            lapmap::write_graphml(graphml, g, d, weighted_ptr);
            std::ostringstream dot;
            lapmap::write_dot(dot, g, d, weighted_ptr);
            const fs::path dir(*out_dir);
            writer.write_file(dir / "graph_summary.json", summary);
            writer.write_file(dir / "graph.graphml", graphml.str());
            writer.write_file(dir / "graph.dot", dot.str());
        }
        std::cout << summary;
    });
}

void register_embed(CLI::App& app, OutputWriter& writer) {
    auto cmd = app.add_subcommand(
        "embed", "Solve the weighted-graph eigenproblem and embed the column entities");
    auto o = std::make_shared<IngestOptions>();
    auto orientation = std::make_shared<std::string>("params");
    auto choice = std::make_shared<GraphChoice>();
    auto t = std::make_shared<double>(1.0);
    auto m_dims = std::make_shared<int>(2);
    auto out_dir = std::make_shared<std::string>();
    add_ingest_options(cmd, *o);
    add_orientation_option(cmd, *orientation);
    add_graph_choice(cmd, *choice);
    cmd->add_option("--t", *t, "Heat-kernel scale")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--m-dims", *m_dims, "Reduced dimension count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--out", *out_dir,
                    "Directory for embedding.csv, transform.csv, eigen_report.json");
    cmd->callback([o, orientation, choice, t, m_dims, out_dir, &writer]() {
        const lapmap::FeatureMatrix m = analyzed_matrix(*o, *orientation);
        const lapmap::DistanceMatrix d = lapmap::pairwise_sq_distances(m);
        const lapmap::ProximityGraph g = build_graph(*choice, d, m.row_labels);
        const lapmap::HeatWeightedGraph h = lapmap::heat_weights(g, d, *t);
        lapmap::SpectralEmbedding se = lapmap::analyze_spectrum(h, *m_dims);
        const lapmap::FeatureMatrix entities = lapmap::transpose_orientation(m);
        se.reduced = lapmap::embed(entities, se.transform);
        const std::string report = lapmap::eigen_report_json(se, m.row_labels);
        if (!out_dir->empty()) {
            std::ostringstream embedding;
            lapmap::write_embedding_csv(embedding, entities.row_labels, se.reduced);
            const fs::path dir(*out_dir);
            writer.write_file(dir / "embedding.csv", embedding.str());
            writer.write_file(dir / "transform.csv", transform_csv(se, m.row_labels));
            writer.write_file(dir / "eigen_report.json", report);
        }
        std::cout << report;
    });
}

void register_sweep(CLI::App& app, OutputWriter& writer) {
    auto cmd = app.add_subcommand(
        "sweep", "Scan the (epsilon, t) grid: variances, outliers, curves and the "
                 "clustering-variance fit");
    auto o = std::make_shared<IngestOptions>();
    auto orientation = std::make_shared<std::string>("params");
    auto eps_grid = std::make_shared<std::string>("1:80:1");
    auto t_grid = std::make_shared<std::string>("1:100:5");
    auto m_dims = std::make_shared<int>(2);
    auto fence = std::make_shared<double>(1.5);
    auto n_grid = std::make_shared<std::string>();
    auto out_dir = std::make_shared<std::string>();
    add_ingest_options(cmd, *o);
    add_orientation_option(cmd, *orientation);
    cmd->add_option("--eps-grid", *eps_grid, "Epsilon grid, start:stop:step or list")
        ->capture_default_str();
    cmd->add_option("--t-grid", *t_grid, "Heat-scale grid, start:stop:step or list")
        ->capture_default_str();
    cmd->add_option("--m-dims", *m_dims, "Reduced dimension count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--fence", *fence, "Tukey fence multiplier")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--n-grid", *n_grid,
                    "Optional neighbor-count grid for a nearest-rule curve");
    cmd->add_option("--out", *out_dir,
                    "Directory for grid.csv, peaks.json, curve_eps.csv, "
                    "clustering_variance.csv, fit.json");
    cmd->callback([o, orientation, eps_grid, t_grid, m_dims, fence, n_grid, out_dir,
                   &writer]() {
        const lapmap::FeatureMatrix m = analyzed_matrix(*o, *orientation);
        const std::vector<double> eps_values = parse_grid(*eps_grid);
        const std::vector<double> t_values = parse_grid(*t_grid);
        std::vector<double> n_values;
        if (!n_grid->empty()) {
            for (int n : parse_int_list(*n_grid)) {
                n_values.push_back(static_cast<double>(n));
            }
        }

        const lapmap::SweepGrid var_grid =
            lapmap::sweep_variance(m, eps_values, t_values, *m_dims);
        const lapmap::SweepGrid out_grid =
            lapmap::sweep_outliers(m, eps_values, t_values, *m_dims, *fence);
        const auto curve_eps =
            lapmap::curve_connectivity_clustering(m, lapmap::AdjacencyRule::Epsilon,
                                                  eps_values);
        const auto cv_curve = lapmap::clustering_variance_curve(m, eps_values);

        bool have_fit = false;
        lapmap::GaussianFitResult fit;
        try {
            std::vector<double> ys;
            ys.reserve(cv_curve.size());
            for (const auto& [eps, var] : cv_curve) ys.push_back(var);
            fit = lapmap::fit_gaussian(eps_values, ys);
            have_fit = true;
        } catch (const std::invalid_argument& e) {
            std::cerr << "warning: clustering-variance fit skipped: " << e.what() << "\n";
        }

        const std::string peaks = lapmap::grid_peaks_json(var_grid, out_grid);
        if (!out_dir->empty()) {
            const fs::path dir(*out_dir);
            std::ostringstream grid_csv;
            lapmap::write_grid_csv(grid_csv, var_grid, out_grid);
            writer.write_file(dir / "grid.csv", grid_csv.str());
            writer.write_file(dir / "peaks.json", peaks);
            std::ostringstream curve_csv;
            lapmap::write_curve_csv(curve_csv, curve_eps);
            writer.write_file(dir / "curve_eps.csv", curve_csv.str());
            std::ostringstream cv_csv;
            lapmap::write_xy_csv(cv_csv, cv_curve);
            writer.write_file(dir / "clustering_variance.csv", cv_csv.str());
            if (have_fit) {
                writer.write_file(dir / "fit.json", lapmap::fit_to_json(fit));
            }
            if (!n_values.empty()) {
                const auto curve_n = lapmap::curve_connectivity_clustering(
                    m, lapmap::AdjacencyRule::Nearest, n_values);
                std::ostringstream curve_n_csv;
                lapmap::write_curve_csv(curve_n_csv, curve_n);
                writer.write_file(dir / "curve_n.csv", curve_n_csv.str());
            }
        }
        std::cout << peaks;
    });
}

void register_baseline(CLI::App& app, OutputWriter& writer) {
    auto cmd = app.add_subcommand(
        "baseline", "Clustering-variance Gaussian fits on uniform random binary matrices");
    auto n_list = std::make_shared<std::string>("25,50,100,150,200");
    auto coords = std::make_shared<int>(260);
    auto eps_grid = std::make_shared<std::string>("85:175:2");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out_dir = std::make_shared<std::string>();
    cmd->add_option("--n-list", *n_list, "Graph sizes, comma list or start:stop:step")
        ->capture_default_str();
    cmd->add_option("--coords", *coords, "Coordinates per random point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--eps-grid", *eps_grid, "Epsilon grid for the variance curve")
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", *out_dir, "Directory for baseline.csv, baseline.json");
    cmd->callback([n_list, coords, eps_grid, seed, out_dir, &writer]() {
        const std::vector<int> sizes = parse_int_list(*n_list);
        const std::vector<double> eps_values = parse_grid(*eps_grid);
        const auto rows = lapmap::random_baseline(sizes, *coords, eps_values, *seed);
        const std::string report = lapmap::baseline_to_json(rows);
        if (!out_dir->empty()) {
            const fs::path dir(*out_dir);
            std::ostringstream csv;
            lapmap::write_baseline_csv(csv, rows);
            writer.write_file(dir / "baseline.csv", csv.str());
            writer.write_file(dir / "baseline.json", report);
        }
        std::cout << report;
    });
}

void register_synth(CLI::App& app, OutputWriter& writer) {
    auto cmd = app.add_subcommand(
        "synth", "Generate a clustered binary matrix with known ground truth");
    auto points = std::make_shared<int>(60);
    auto coords = std::make_shared<int>(260);
    auto clusters = std::make_shared<int>(3);
    auto flip = std::make_shared<double>(0.1);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--points", *points, "Number of rows")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--coords", *coords, "Number of columns")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--clusters", *clusters, "Number of centroids")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--flip", *flip, "Per-cell flip probability, in [0, 0.5)")
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", *out_path, "Output CSV path (stdout when omitted)");
    cmd->callback([points, coords, clusters, flip, seed, out_path, &writer]() {
        const lapmap::FeatureMatrix m =
            lapmap::generate_synthetic(*points, *coords, *clusters, *flip, *seed);
        if (out_path->empty()) {
            lapmap::serialize_matrix(m, std::cout);
            return;
        }
        std::ostringstream csv;
        lapmap::serialize_matrix(m, csv);
        writer.write_file(*out_path, csv.str());
        const json echo{{"output", *out_path}, {"points", *points},  {"coords", *coords},
                        {"clusters", *clusters}, {"flip", *flip},    {"seed", *seed}};
        std::cout << echo.dump(2) << "\n";
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heat-kernel spectral analysis of binary/ternary feature matrices"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Read options from an INI config file ([subcommand] sections)");

    OutputWriter writer;
    register_ingest(app, writer);
    register_graph(app, writer);
    register_embed(app, writer);
    register_sweep(app, writer);
    register_baseline(app, writer);
    register_synth(app, writer);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lapmap::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        writer.discard_all();
        return 2;
    } catch (const lapmap::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        writer.discard_all();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        writer.discard_all();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        writer.discard_all();
        return 1;
    }
    return 0;
}
