#include "bst/tours.hpp"

#include <algorithm>
#include <string>

#include "bst/errors.hpp"

namespace bst {

double tour_bottleneck(const Tour& tour, const MetricInstance& instance) {
  if (tour.size() < 2) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    worst = std::max(worst, instance.distance(tour[i], tour[(i + 1) % tour.size()]));
  }
  return worst;
}

TourSet lift_to_tours(const Forest& forest, const MetricInstance& instance) {
  TourSet out;
  for (const Tree& tree : forest.trees()) {
    if (tree.size() < 3) {
      throw DegenerateTourError("tree with " + std::to_string(tree.size()) +
                                " nodes has no tour");
    }
    out.tours.push_back(cube_hamiltonian_cycle(tree));
    out.bottleneck = std::max(out.bottleneck, tour_bottleneck(out.tours.back(), instance));
  }
  return out;
}

TourSet lift_to_tours(const Tree& tree, const MetricInstance& instance) {
  return lift_to_tours(Forest({tree}), instance);
}

}  // namespace bst
