#pragma once

#include "lapmap/components.hpp"
#include "lapmap/proximity_graph.hpp"

#include <string>
#include <vector>

namespace lapmap {

/// Aggregate statistics of one proximity graph.
struct GraphSummary {
    std::vector<int> component_sizes;            // sorted descending
    std::vector<std::string> vertex_labels;
    std::vector<int> degree_by_vertex;
    std::vector<double> local_clustering;        // C_i per vertex
    std::vector<long> neighborhood_edge_counts;  // edges meeting N(v), diagnostic
    int vertex_connectivity = 0;
    double average_clustering = 0.0;
    double clustering_variance = 0.0;
    long betti_1 = 0;                            // |E| - |V| + #components
};

/// Minimum number of vertices whose removal disconnects the graph or leaves
/// at most one vertex. 0 for disconnected graphs, k-1 for complete graphs.
int vertex_connectivity(const ProximityGraph& g);

/// Fraction of v's neighbor pairs that are themselves adjacent; 0 when
/// deg(v) < 2. Throws std::out_of_range for a bad vertex index.
double local_clustering(const ProximityGraph& g, int v);

std::vector<double> local_clustering_all(const ProximityGraph& g);

/// Arithmetic mean of the local clustering coefficients over all vertices.
/// Throws lapmap::InputError on an empty graph.
double average_clustering(const ProximityGraph& g);

/// Population variance of the local clustering coefficients; 0 for the
/// empty graph.
double clustering_variance(const ProximityGraph& g);

/// Number of edges with at least one endpoint in N(v). This is the literal
/// neighborhood-incidence count, reported alongside C_i for comparison; it
/// can exceed C(deg v, 2).
long neighborhood_edge_count(const ProximityGraph& g, int v);

GraphSummary graph_summary(const ProximityGraph& g);

}  // namespace lapmap
