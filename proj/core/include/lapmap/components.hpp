#pragma once

#include "lapmap/proximity_graph.hpp"

#include <vector>

namespace lapmap {

/// Partition of the vertex set into connected components. Each component is
/// sorted ascending; components are ordered by decreasing size, then by
/// smallest member.
struct ComponentPartition {
    std::vector<std::vector<int>> components;

    std::size_t count() const { return components.size(); }
    std::vector<int> sizes_desc() const;

    /// component_of[v] = index into `components` for vertex v.
    std::vector<int> membership(int vertex_count) const;
};

ComponentPartition connected_components(const ProximityGraph& g);

}  // namespace lapmap
