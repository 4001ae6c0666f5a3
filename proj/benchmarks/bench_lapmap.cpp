#include "lapmap/distance.hpp"
#include "lapmap/gaussian_fit.hpp"
#include "lapmap/graph_metrics.hpp"
#include "lapmap/heat_kernel.hpp"
#include "lapmap/spectral.hpp"
#include "lapmap/sweep.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

lapmap::FeatureMatrix points(int n, int coords) {
    return lapmap::random_binary_matrix(n, coords, 12345);
}

// Epsilon near the median squared distance, so graphs are moderately dense.
double mid_epsilon(const lapmap::DistanceMatrix& d) {
    return 0.5 * (d.min_off_diagonal() + d.max_off_diagonal());
}

void BM_pairwise_distances(benchmark::State& state) {
    const auto m = points(static_cast<int>(state.range(0)), 260);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lapmap::pairwise_sq_distances(m));
    }
}
BENCHMARK(BM_pairwise_distances)->Arg(100)->Arg(260);

void BM_epsilon_graph(benchmark::State& state) {
    const auto m = points(static_cast<int>(state.range(0)), 260);
    const auto d = lapmap::pairwise_sq_distances(m);
    const double eps = mid_epsilon(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lapmap::epsilon_graph(d, eps));
    }
}
BENCHMARK(BM_epsilon_graph)->Arg(100)->Arg(260);

void BM_knn_graph(benchmark::State& state) {
    const auto m = points(static_cast<int>(state.range(0)), 260);
    const auto d = lapmap::pairwise_sq_distances(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lapmap::knn_graph(d, 5));
    }
}
BENCHMARK(BM_knn_graph)->Arg(100)->Arg(260);

void BM_eigensolve(benchmark::State& state) {
    const auto m = points(static_cast<int>(state.range(0)), 260);
    const auto d = lapmap::pairwise_sq_distances(m);
    const auto g = lapmap::epsilon_graph(d, mid_epsilon(d));
    const auto h = lapmap::heat_weights(g, d, 25.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lapmap::analyze_spectrum(h, 2));
    }
}
BENCHMARK(BM_eigensolve)->Arg(100)->Arg(260);

void BM_local_clustering(benchmark::State& state) {
    const auto m = points(static_cast<int>(state.range(0)), 260);
    const auto d = lapmap::pairwise_sq_distances(m);
    const auto g = lapmap::epsilon_graph(d, mid_epsilon(d));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lapmap::local_clustering_all(g));
    }
}
BENCHMARK(BM_local_clustering)->Arg(100)->Arg(260);

void BM_vertex_connectivity(benchmark::State& state) {
    const auto m = points(static_cast<int>(state.range(0)), 260);
    const auto d = lapmap::pairwise_sq_distances(m);
    const auto g = lapmap::epsilon_graph(d, mid_epsilon(d));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lapmap::vertex_connectivity(g));
    }
}
BENCHMARK(BM_vertex_connectivity)->Arg(60)->Arg(100);

void BM_gaussian_fit(benchmark::State& state) {
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i < 64; ++i) {
        const double xi = static_cast<double>(i);
        x.push_back(xi);
        y.push_back(2.0 * std::exp(-(xi - 30.0) * (xi - 30.0) / 64.0) + 0.25);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(lapmap::fit_gaussian(x, y));
    }
}
BENCHMARK(BM_gaussian_fit);

}  // namespace

BENCHMARK_MAIN();
