#pragma once

#include "lapmap/heat_kernel.hpp"

#include <iosfwd>

namespace lapmap {

/// GraphML export. Vertices carry a "label" attribute; edges carry
/// "sq_dist" always and "weight" only when a weighted graph is given.
void write_graphml(std::ostream& out, const ProximityGraph& g, const DistanceMatrix& d,
                   const HeatWeightedGraph* weighted = nullptr);

/// DOT export with the same attribute scheme as write_graphml.
void write_dot(std::ostream& out, const ProximityGraph& g, const DistanceMatrix& d,
               const HeatWeightedGraph* weighted = nullptr);

}  // namespace lapmap
