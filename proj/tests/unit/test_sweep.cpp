#include <doctest.h>

#include "lapmap/distance.hpp"
#include "lapmap/graph_metrics.hpp"
#include "lapmap/heat_kernel.hpp"
#include "lapmap/proximity_graph.hpp"
#include "lapmap/spectral.hpp"
#include "lapmap/stats.hpp"
#include "lapmap/sweep.hpp"
#include "lapmap/synthetic.hpp"

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using namespace lapmap;

TEST_SUITE("sweep") {

TEST_CASE("connectivity curve saturates on the complete graph") {
    auto m = random_binary_matrix(8, 10, 2024);
    auto d = pairwise_sq_distances(m);
    const double lo = d.min_off_diagonal();
    const double hi = d.max_off_diagonal();
    auto curve = curve_connectivity_clustering(m, AdjacencyRule::Epsilon, {lo - 1.0, hi + 1.0});
    REQUIRE(curve.size() == 2);
    CHECK(curve[0].value == lo - 1.0);
    CHECK(curve[0].vertex_connectivity == 0);
    CHECK(curve[0].average_clustering == 0.0);
    CHECK(curve[1].vertex_connectivity == 7);
    CHECK(curve[1].average_clustering == 1.0);
}

TEST_CASE("curve points agree with the standalone graph metrics") {
    auto m = oracles::random_real_matrix(10, 6, 555);
    auto d = pairwise_sq_distances(m);
    const double lo = d.min_off_diagonal();
    const double hi = d.max_off_diagonal();
    std::vector<double> values;
    for (int i = 0; i <= 8; ++i) values.push_back(lo + (hi - lo) * i / 8.0 + 0.01);
    auto curve = curve_connectivity_clustering(m, AdjacencyRule::Epsilon, values);
    REQUIRE(curve.size() == values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto g = epsilon_graph(d, values[i]);
        CHECK(curve[i].value == values[i]);
        CHECK(curve[i].vertex_connectivity == vertex_connectivity(g));
        CHECK(curve[i].average_clustering == average_clustering(g));
    }
}

TEST_CASE("neighbor-count curve takes integral grid values only") {
    auto m = oracles::random_real_matrix(7, 4, 808);
    auto d = pairwise_sq_distances(m);
    auto curve = curve_connectivity_clustering(m, AdjacencyRule::Nearest, {1.0, 2.0, 3.0});
    REQUIRE(curve.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        auto g = knn_graph(d, static_cast<int>(i) + 1);
        CHECK(curve[i].vertex_connectivity == vertex_connectivity(g));
        CHECK(curve[i].average_clustering == average_clustering(g));
    }
    CHECK_THROWS_AS(
        curve_connectivity_clustering(m, AdjacencyRule::Nearest, {1.5}),
        std::invalid_argument);
}

TEST_CASE("clustering saturates before connectivity on clustered data") {
    // Three tight clusters complete their local triangles long before any
    // between-cluster edge appears, so the clustering curve reaches half of
    // its maximum at a strictly smaller epsilon than the connectivity curve.
    auto m = generate_synthetic(24, 40, 3, 0.05, 77);
    std::vector<double> grid;
    for (int e = 1; e <= 30; ++e) grid.push_back(static_cast<double>(e));
    auto curve = curve_connectivity_clustering(m, AdjacencyRule::Epsilon, grid);
    REQUIRE(curve.size() == grid.size());

    double max_conn = 0.0;
    double max_clust = 0.0;
    for (const auto& p : curve) {
        max_conn = std::max(max_conn, static_cast<double>(p.vertex_connectivity));
        max_clust = std::max(max_clust, p.average_clustering);
    }
    REQUIRE(max_conn > 0.0);
    REQUIRE(max_clust > 0.0);

    auto half_max_index = [&](auto value_of, double max_value) {
        for (std::size_t i = 0; i < curve.size(); ++i) {
            if (value_of(curve[i]) >= 0.5 * max_value) return i;
        }
        return curve.size();
    };
    const std::size_t clust_at = half_max_index(
        [](const CurvePoint& p) { return p.average_clustering; }, max_clust);
    const std::size_t conn_at = half_max_index(
        [](const CurvePoint& p) { return static_cast<double>(p.vertex_connectivity); },
        max_conn);
    CHECK(clust_at < conn_at);
    CHECK(conn_at < curve.size());
}

TEST_CASE("farthest rule is not a curve axis") {
    auto m = random_binary_matrix(5, 6, 99);
    CHECK_THROWS_AS(curve_connectivity_clustering(m, AdjacencyRule::Farthest, {1.0}),
                    std::invalid_argument);
}

TEST_CASE("grid axes are validated") {
    auto m = random_binary_matrix(5, 6, 7);
    CHECK_THROWS_AS(sweep_variance(m, {}, {1.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sweep_variance(m, {1.0}, {}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sweep_variance(m, {2.0, 1.0}, {1.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sweep_variance(m, {1.0, 1.0}, {1.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sweep_variance(m, {1.0}, {0.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sweep_variance(m, {1.0}, {-3.0, 1.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sweep_variance(m, {1.0}, {1.0}, 0), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(sweep_variance(m, {nan}, {1.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sweep_outliers(m, {1.0}, {1.0}, 2, -1.0), std::invalid_argument);
}

TEST_CASE("grid shape mirrors the axes") {
    auto m = random_binary_matrix(6, 8, 31);
    std::vector<double> eps = {2.0, 4.0, 6.0};
    std::vector<double> ts = {1.0, 10.0};
    auto grid = sweep_variance(m, eps, ts, 2);
    CHECK(grid.epsilon_values == eps);
    CHECK(grid.t_values == ts);
    REQUIRE(grid.cells.size() == 3);
    for (const auto& row : grid.cells) CHECK(row.size() == 2);
    REQUIRE(grid.epsilon_summaries.size() == 3);
    for (std::size_t e = 0; e < eps.size(); ++e) {
        auto g = epsilon_graph(pairwise_sq_distances(m), eps[e]);
        CHECK(grid.epsilon_summaries[e].component_sizes ==
              connected_components(g).sizes_desc());
    }
}

TEST_CASE("constant matrix sweeps to zero everywhere") {
    // All rows identical: every distance is 0, the graph is complete with
    // unit weights, and every entity vector is constant, which the transform
    // annihilates.
    std::vector<std::vector<double>> cells(6, std::vector<double>(5, 1.0));
    std::vector<std::string> rl, cl;
    for (int i = 0; i < 6; ++i) rl.push_back("r" + std::to_string(i));
    for (int j = 0; j < 5; ++j) cl.push_back("c" + std::to_string(j));
    auto m = oracles::matrix_from(rl, cl, cells, ValueDomain::Binary);

    auto var_grid = sweep_variance(m, {0.5, 1.0}, {1.0, 5.0}, 3);
    auto out_grid = sweep_outliers(m, {0.5, 1.0}, {1.0, 5.0}, 3);
    for (const auto& row : var_grid.cells) {
        for (const auto& cell : row) {
            CHECK(cell.mean_variance == 0.0);
            CHECK(cell.max_variance == 0.0);
        }
    }
    for (const auto& row : out_grid.cells) {
        for (const auto& cell : row) CHECK(cell.outlier_count == 0.0);
    }
}

TEST_CASE("identity matrix has a closed-form sweep cell") {
    // 5 rows of I_5: all pairwise squared distances are 2, so with epsilon 3
    // the graph is complete with equal weights w = exp(-2/t) and degree 4w.
    // Every nontrivial eigenvector has zero mean and squared norm 1/(4w), so
    // each reduced coordinate has population variance exactly 1/(20w).
    std::vector<std::vector<double>> cells(5, std::vector<double>(5, 0.0));
    std::vector<std::string> rl, cl;
    for (int i = 0; i < 5; ++i) {
        rl.push_back("r" + std::to_string(i));
        cl.push_back("c" + std::to_string(i));
        cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    }
    auto m = oracles::matrix_from(rl, cl, cells, ValueDomain::Binary);

    const double t = 4.0;
    auto grid = sweep_variance(m, {1.0, 3.0}, {t}, 4);
    // Below every distance: edgeless graph, zero transform, zero variance.
    CHECK(grid.cells[0][0].mean_variance == 0.0);
    CHECK(grid.cells[0][0].max_variance == 0.0);
    CHECK(grid.epsilon_summaries[0].component_sizes == std::vector<int>{1, 1, 1, 1, 1});

    const double w = std::exp(-2.0 / t);
    const double expected = 1.0 / (20.0 * w);
    CHECK(grid.cells[1][0].mean_variance == doctest::Approx(expected).epsilon(1e-9));
    CHECK(grid.cells[1][0].max_variance == doctest::Approx(expected).epsilon(1e-9));
    CHECK(grid.epsilon_summaries[1].component_sizes == std::vector<int>{5});
}

TEST_CASE("huge t reduces to unit edge weights") {
    auto m = oracles::random_real_matrix(9, 5, 246802);
    auto d = pairwise_sq_distances(m);
    const double eps = (d.min_off_diagonal() + d.max_off_diagonal()) / 2.0;
    const Eigen::Index m_dims = 2;

    auto grid = sweep_variance(m, {eps}, {1e12}, m_dims);

    // Oracle: the same pipeline with weights pinned to exactly 1.
    auto g = epsilon_graph(d, eps);
    HeatWeightedGraph unit;
    unit.graph = g;
    unit.t = 1.0;
    const auto k = static_cast<Eigen::Index>(g.vertex_count());
    unit.weights = Eigen::MatrixXd::Zero(k, k);
    for (const auto& [a, b] : g.edges) {
        unit.weights(a, b) = 1.0;
        unit.weights(b, a) = 1.0;
    }
    unit.degree = unit.weights.rowwise().sum();
    unit.laplacian = Eigen::MatrixXd(unit.degree.asDiagonal()) - unit.weights;

    auto emb = analyze_spectrum(unit, m_dims);
    auto entities = transpose_orientation(m);
    Eigen::MatrixXd reduced = embed(entities, emb.transform);
    double mean_var = 0.0, max_var = 0.0;
    for (Eigen::Index c = 0; c < reduced.cols(); ++c) {
        std::vector<double> coord(static_cast<std::size_t>(reduced.rows()));
        for (Eigen::Index r = 0; r < reduced.rows(); ++r)
            coord[static_cast<std::size_t>(r)] = reduced(r, c);
        const double var = population_variance(coord);
        mean_var += var;
        max_var = std::max(max_var, var);
    }
    mean_var /= static_cast<double>(reduced.cols());

    CHECK(grid.cells[0][0].mean_variance == doctest::Approx(mean_var).epsilon(1e-6));
    CHECK(grid.cells[0][0].max_variance == doctest::Approx(max_var).epsilon(1e-6));
}

TEST_CASE("outlier cells count whole points per coordinate") {
    auto m = oracles::random_real_matrix(12, 6, 1357);
    auto d = pairwise_sq_distances(m);
    std::vector<double> eps = {d.min_off_diagonal() + 0.01,
                               (d.min_off_diagonal() + d.max_off_diagonal()) / 2.0,
                               d.max_off_diagonal() + 1.0};
    auto grid = sweep_outliers(m, eps, {1.0, 4.0}, 1);
    const double n_entities = static_cast<double>(m.cols());
    for (const auto& row : grid.cells) {
        for (const auto& cell : row) {
            // m_dims = 1: the average over coordinates is a raw count.
            CHECK(cell.outlier_count == std::nearbyint(cell.outlier_count));
            CHECK(cell.outlier_count >= 0.0);
            CHECK(cell.outlier_count <= n_entities);
        }
    }
}

TEST_CASE("sweep cells are invariant under row and column permutations") {
    auto m = oracles::random_real_matrix(8, 7, 606060);
    auto d = pairwise_sq_distances(m);
    std::vector<double> eps = {(d.min_off_diagonal() + d.max_off_diagonal()) / 2.0,
                               d.max_off_diagonal() + 0.5};
    std::vector<double> ts = {2.0, 20.0};
    auto base = sweep_variance(m, eps, ts, 2);

    SUBCASE("permuting rows relabels graph vertices") {
        std::vector<int> perm = {4, 0, 6, 2, 7, 1, 5, 3};
        Eigen::MatrixXd pvals(8, 7);
        std::vector<std::string> plabels;
        for (int i = 0; i < 8; ++i) {
            pvals.row(i) = m.values.row(perm[static_cast<std::size_t>(i)]);
            plabels.push_back(m.row_labels[static_cast<std::size_t>(perm[i])]);
        }
        FeatureMatrix pm{plabels, m.col_labels, pvals, m.domain, m.orientation};
        auto permuted = sweep_variance(pm, eps, ts, 2);
        for (std::size_t e = 0; e < eps.size(); ++e) {
            for (std::size_t ti = 0; ti < ts.size(); ++ti) {
                CHECK(permuted.cells[e][ti].mean_variance ==
                      doctest::Approx(base.cells[e][ti].mean_variance).epsilon(1e-9));
                CHECK(permuted.cells[e][ti].max_variance ==
                      doctest::Approx(base.cells[e][ti].max_variance).epsilon(1e-9));
            }
        }
    }
    SUBCASE("permuting columns relabels entities") {
        std::vector<int> perm = {3, 6, 0, 5, 1, 4, 2};
        Eigen::MatrixXd pvals(8, 7);
        std::vector<std::string> plabels;
        for (int j = 0; j < 7; ++j) {
            pvals.col(j) = m.values.col(perm[static_cast<std::size_t>(j)]);
            plabels.push_back(m.col_labels[static_cast<std::size_t>(perm[j])]);
        }
        FeatureMatrix pm{m.row_labels, plabels, pvals, m.domain, m.orientation};
        auto permuted = sweep_variance(pm, eps, ts, 2);
        for (std::size_t e = 0; e < eps.size(); ++e) {
            for (std::size_t ti = 0; ti < ts.size(); ++ti) {
                CHECK(permuted.cells[e][ti].mean_variance ==
                      doctest::Approx(base.cells[e][ti].mean_variance).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("clustering variance curve hits known endpoints and values") {
    // Equilateral triangle plus one pendant point: at epsilon 2 the graph is
    // a triangle with a pendant, whose clustering variance is 27/144.
    auto m = oracles::matrix_from(
        {"a", "b", "c", "p"}, {"x", "y"},
        {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.866}, {-1.2, 0.0}}, ValueDomain::Continuous);
    auto d = pairwise_sq_distances(m);
    const double lo = d.min_off_diagonal();
    const double hi = d.max_off_diagonal();
    auto curve = clustering_variance_curve(m, {lo - 1.0, 2.0, hi + 1.0});
    REQUIRE(curve.size() == 3);
    CHECK(curve[0].first == lo - 1.0);
    CHECK(curve[0].second == 0.0);  // below every distance: edgeless
    CHECK(curve[1].second == doctest::Approx(0.1875).epsilon(1e-12));
    CHECK(curve[2].second == 0.0);  // complete graph: all coefficients 1

    for (const auto& [eps, var] : curve) CHECK(var >= 0.0);
}

TEST_CASE("clustered data yields an interior variance peak") {
    auto m = generate_synthetic(24, 40, 3, 0.08, 11);
    auto d = pairwise_sq_distances(m);
    const double lo = d.min_off_diagonal();
    const double hi = d.max_off_diagonal();
    std::vector<double> eps;
    for (int i = 0; i <= 30; ++i) eps.push_back(lo - 1.0 + (hi - lo + 2.0) * i / 30.0);
    auto curve = clustering_variance_curve(m, eps);
    CHECK(curve.front().second == 0.0);
    CHECK(curve.back().second == 0.0);
    double peak = 0.0;
    for (const auto& [e, v] : curve) peak = std::max(peak, v);
    CHECK(peak > 0.0);
}

TEST_CASE("peak cells scan row-major and keep the first tie") {
    SweepGrid grid;
    grid.epsilon_values = {1.0, 2.0};
    grid.t_values = {1.0, 2.0};
    grid.cells = {{SweepCell{0.5, 0.5, 3.0}, SweepCell{0.5, 0.5, 3.0}},
                  {SweepCell{0.5, 0.5, 3.0}, SweepCell{0.5, 0.5, 3.0}}};
    CHECK(grid.peak_variance_cell() == std::pair<int, int>{0, 0});
    CHECK(grid.peak_outlier_cell() == std::pair<int, int>{0, 0});

    grid.cells[1][0].mean_variance = 0.7;
    grid.cells[0][1].outlier_count = 9.0;
    CHECK(grid.peak_variance_cell() == std::pair<int, int>{1, 0});
    CHECK(grid.peak_outlier_cell() == std::pair<int, int>{0, 1});

    SweepGrid empty;
    CHECK(empty.peak_variance_cell() == std::pair<int, int>{-1, -1});
}

TEST_CASE("random binary matrices are deterministic and well formed") {
    auto a = random_binary_matrix(9, 12, 777);
    auto b = random_binary_matrix(9, 12, 777);
    auto c = random_binary_matrix(9, 12, 778);
    CHECK(oracles::same_values(a.values, b.values));
    CHECK_FALSE(oracles::same_values(a.values, c.values));
    CHECK(a.rows() == 9);
    CHECK(a.cols() == 12);
    CHECK(a.domain == ValueDomain::Binary);
    CHECK(a.row_labels[0] == "r0");
    CHECK(a.row_labels[8] == "r8");
    CHECK(a.col_labels[11] == "c11");
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            CHECK((a.values(i, j) == 0.0 || a.values(i, j) == 1.0));
        }
    }
    CHECK_NOTHROW(a.validate());
    CHECK_THROWS_AS(random_binary_matrix(0, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_binary_matrix(5, 0, 1), std::invalid_argument);
}

TEST_CASE("baseline rows depend only on their own size and the seed") {
    std::vector<double> eps;
    for (double e = 8.0; e <= 40.0; e += 2.0) eps.push_back(e);

    auto lone = random_baseline({25}, 60, eps, 42);
    auto pair = random_baseline({25, 40}, 60, eps, 42);
    REQUIRE(lone.size() == 1);
    REQUIRE(pair.size() == 2);
    CHECK(lone[0].n_vertices == 25);
    CHECK(pair[0].fit.amplitude == lone[0].fit.amplitude);
    CHECK(pair[0].fit.center == lone[0].fit.center);
    CHECK(pair[0].fit.width == lone[0].fit.width);
    CHECK(pair[0].fit.offset == lone[0].fit.offset);
    CHECK(pair[0].fit.residual_norm == lone[0].fit.residual_norm);

    auto rerun = random_baseline({25, 40}, 60, eps, 42);
    CHECK(rerun[1].fit.amplitude == pair[1].fit.amplitude);
    CHECK(rerun[1].fit.center == pair[1].fit.center);

    CHECK_THROWS_AS(random_baseline({}, 60, eps, 42), std::invalid_argument);
}

}  // TEST_SUITE
