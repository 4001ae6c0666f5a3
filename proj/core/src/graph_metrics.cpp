#include "lapmap/graph_metrics.hpp"

#include "lapmap/errors.hpp"
#include "lapmap/stats.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

namespace lapmap {

namespace {

// Unit-capacity max-flow network used for local vertex connectivity.
struct FlowNetwork {
    std::vector<int> head;
    std::vector<int> capacity;
    std::vector<std::vector<int>> out_arcs;

    explicit FlowNetwork(int nodes) : out_arcs(static_cast<std::size_t>(nodes)) {}

    void add_arc(int from, int to, int cap) {
        out_arcs[static_cast<std::size_t>(from)].push_back(static_cast<int>(head.size()));
        head.push_back(to);
        capacity.push_back(cap);
        out_arcs[static_cast<std::size_t>(to)].push_back(static_cast<int>(head.size()));
        head.push_back(from);
        capacity.push_back(0);
    }

    // Edmonds-Karp, stopping once `limit` units are routed.
    int max_flow(int source, int sink, int limit) {
        int flow = 0;
        std::vector<int> parent_arc(out_arcs.size());
        while (flow < limit) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            parent_arc[static_cast<std::size_t>(source)] = -2;
            std::queue<int> queue;
            queue.push(source);
            while (!queue.empty() && parent_arc[static_cast<std::size_t>(sink)] == -1) {
                const int v = queue.front();
                queue.pop();
                for (int arc : out_arcs[static_cast<std::size_t>(v)]) {
                    const int u = head[static_cast<std::size_t>(arc)];
                    if (capacity[static_cast<std::size_t>(arc)] > 0 &&
                        parent_arc[static_cast<std::size_t>(u)] == -1) {
                        parent_arc[static_cast<std::size_t>(u)] = arc;
                        queue.push(u);
                    }
                }
            }
            if (parent_arc[static_cast<std::size_t>(sink)] == -1) break;

            int bottleneck = std::numeric_limits<int>::max();
            for (int v = sink; v != source;) {
                const int arc = parent_arc[static_cast<std::size_t>(v)];
                bottleneck = std::min(bottleneck, capacity[static_cast<std::size_t>(arc)]);
                v = head[static_cast<std::size_t>(arc ^ 1)];
            }
            for (int v = sink; v != source;) {
                const int arc = parent_arc[static_cast<std::size_t>(v)];
                capacity[static_cast<std::size_t>(arc)] -= bottleneck;
                capacity[static_cast<std::size_t>(arc ^ 1)] += bottleneck;
                v = head[static_cast<std::size_t>(arc ^ 1)];
            }
            flow += bottleneck;
        }
        return flow;
    }
};

// Maximum number of internally vertex-disjoint s-t paths (Menger), via the
// standard vertex-split construction: x_in = 2x, x_out = 2x+1.
int local_vertex_connectivity(const std::vector<std::vector<int>>& adj, int s, int t, int limit) {
    const int k = static_cast<int>(adj.size());
    const int inf = k + 1;
    FlowNetwork net(2 * k);
    for (int x = 0; x < k; ++x) {
        net.add_arc(2 * x, 2 * x + 1, (x == s || x == t) ? inf : 1);
    }
    for (int a = 0; a < k; ++a) {
        for (int b : adj[static_cast<std::size_t>(a)]) {
            net.add_arc(2 * a + 1, 2 * b, inf);
        }
    }
    return net.max_flow(2 * s + 1, 2 * t, limit);
}

bool is_connected(const std::vector<std::vector<int>>& adj) {
    const int k = static_cast<int>(adj.size());
    if (k == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                ++reached;
                queue.push(u);
            }
        }
    }
    return reached == k;
}

}  // namespace

int vertex_connectivity(const ProximityGraph& g) {
    const int k = g.vertex_count();
    if (k <= 1) return 0;

    const auto adj = g.adjacency();
    if (!is_connected(adj)) return 0;

    const auto deg = g.degrees();
    const bool complete =
        std::all_of(deg.begin(), deg.end(), [&](int d) { return d == k - 1; });
    if (complete) return k - 1;

    // kappa(G) = min over local connectivities of (pivot, non-neighbor)
    // pairs and of non-adjacent pairs inside the pivot's neighborhood; the
    // pivot is a minimum-degree vertex, so kappa <= deg(pivot) caps the
    // flow searches.
    const int pivot = static_cast<int>(
        std::min_element(deg.begin(), deg.end()) - deg.begin());
    int best = deg[static_cast<std::size_t>(pivot)];

    std::vector<bool> is_neighbor(static_cast<std::size_t>(k), false);
    for (int u : adj[static_cast<std::size_t>(pivot)]) is_neighbor[static_cast<std::size_t>(u)] = true;

    for (int t = 0; t < k && best > 0; ++t) {
        if (t == pivot || is_neighbor[static_cast<std::size_t>(t)]) continue;
        best = std::min(best, local_vertex_connectivity(adj, pivot, t, best));
    }
    const auto& neighborhood = adj[static_cast<std::size_t>(pivot)];
    for (std::size_t a = 0; a < neighborhood.size() && best > 0; ++a) {
        for (std::size_t b = a + 1; b < neighborhood.size() && best > 0; ++b) {
            const int u = neighborhood[a];
            const int w = neighborhood[b];
            if (!g.has_edge(u, w)) {
                best = std::min(best, local_vertex_connectivity(adj, u, w, best));
            }
        }
    }
    return best;
}

double local_clustering(const ProximityGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::out_of_range("vertex index out of range");
    }
    const auto adj = g.adjacency();
    const auto& neighbors = adj[static_cast<std::size_t>(v)];
    const std::size_t d = neighbors.size();
    if (d < 2) return 0.0;
    long among = 0;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            if (g.has_edge(neighbors[a], neighbors[b])) ++among;
        }
    }
    const long possible = static_cast<long>(d) * (static_cast<long>(d) - 1) / 2;
    return static_cast<double>(among) / static_cast<double>(possible);
}

std::vector<double> local_clustering_all(const ProximityGraph& g) {
    const int k = g.vertex_count();
    const auto adj = g.adjacency();
    const auto bits = g.adjacency_bits();
    std::vector<double> result(static_cast<std::size_t>(k), 0.0);
    for (int v = 0; v < k; ++v) {
        const auto& neighbors = adj[static_cast<std::size_t>(v)];
        const std::size_t d = neighbors.size();
        if (d < 2) continue;
        // Sum over neighbors u of |N(u) & N(v)| counts every edge among
        // neighbors twice.
        long ordered = 0;
        const auto& row_v = bits[static_cast<std::size_t>(v)];
        for (int u : neighbors) {
            const auto& row_u = bits[static_cast<std::size_t>(u)];
            for (std::size_t w = 0; w < row_v.size(); ++w) {
                ordered += std::popcount(row_u[w] & row_v[w]);
            }
        }
        const long among = ordered / 2;
        const long possible = static_cast<long>(d) * (static_cast<long>(d) - 1) / 2;
        result[static_cast<std::size_t>(v)] =
            static_cast<double>(among) / static_cast<double>(possible);
    }
    return result;
}

double average_clustering(const ProximityGraph& g) {
    if (g.vertex_count() == 0) {
        throw InputError("average clustering of an empty graph is undefined");
    }
    const auto coefficients = local_clustering_all(g);
    double sum = 0.0;
    for (double c : coefficients) sum += c;
    return sum / static_cast<double>(coefficients.size());
}

double clustering_variance(const ProximityGraph& g) {
    if (g.vertex_count() == 0) return 0.0;
    return population_variance(local_clustering_all(g));
}

long neighborhood_edge_count(const ProximityGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::out_of_range("vertex index out of range");
    }
    std::vector<bool> in_neighborhood(static_cast<std::size_t>(g.vertex_count()), false);
    for (const auto& [i, j] : g.edges) {
        if (i == v) in_neighborhood[static_cast<std::size_t>(j)] = true;
        if (j == v) in_neighborhood[static_cast<std::size_t>(i)] = true;
    }
    long count = 0;
    for (const auto& [i, j] : g.edges) {
        if (in_neighborhood[static_cast<std::size_t>(i)] ||
            in_neighborhood[static_cast<std::size_t>(j)]) {
            ++count;
        }
    }
    return count;
}

GraphSummary graph_summary(const ProximityGraph& g) {
    GraphSummary summary;
    const int k = g.vertex_count();
    summary.vertex_labels = g.vertex_labels;
    summary.degree_by_vertex = g.degrees();

    const auto partition = connected_components(g);
    summary.component_sizes = partition.sizes_desc();
    summary.betti_1 = static_cast<long>(g.edge_count()) - k +
                      static_cast<long>(partition.count());

    summary.local_clustering = local_clustering_all(g);
    summary.neighborhood_edge_counts.reserve(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
        summary.neighborhood_edge_counts.push_back(neighborhood_edge_count(g, v));
    }

    summary.vertex_connectivity = vertex_connectivity(g);
    if (k > 0) {
        summary.average_clustering = average_clustering(g);
        summary.clustering_variance = clustering_variance(g);
    }
    return summary;
}

}  // namespace lapmap
