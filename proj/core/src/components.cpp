#include "lapmap/components.hpp"

#include <algorithm>
#include <queue>

namespace lapmap {

std::vector<int> ComponentPartition::sizes_desc() const {
    std::vector<int> sizes;
    sizes.reserve(components.size());
    for (const auto& c : components) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

std::vector<int> ComponentPartition::membership(int vertex_count) const {
    std::vector<int> member(static_cast<std::size_t>(vertex_count), -1);
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (int v : components[c]) member[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    return member;
}

ComponentPartition connected_components(const ProximityGraph& g) {
    const int k = g.vertex_count();
    const auto adj = g.adjacency();
    std::vector<bool> seen(static_cast<std::size_t>(k), false);

    ComponentPartition partition;
    for (int start = 0; start < k; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp;
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            comp.push_back(v);
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        partition.components.push_back(std::move(comp));
    }

    std::sort(partition.components.begin(), partition.components.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return partition;
}

}  // namespace lapmap
