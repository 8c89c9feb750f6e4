#pragma once

#include <vector>

#include "bst/metric.hpp"
#include "bst/tree.hpp"

namespace bst {

using Tour = std::vector<PointId>;  // cyclic: the last point returns to the first

struct TourSet {
  std::vector<Tour> tours;
  double bottleneck = 0.0;  // longest edge over all tours, closing edges included
};

/// Longest edge of a cyclic tour; 0 for tours of fewer than two points.
double tour_bottleneck(const Tour& tour, const MetricInstance& instance);

/// One Hamiltonian cycle in the cube of each tree. DegenerateTourError for trees with
/// fewer than three nodes.
TourSet lift_to_tours(const Forest& forest, const MetricInstance& instance);
TourSet lift_to_tours(const Tree& tree, const MetricInstance& instance);

}  // namespace bst
