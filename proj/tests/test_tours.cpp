#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "bst/dbst.hpp"
#include "bst/errors.hpp"
#include "bst/generate.hpp"
#include "bst/oracle.hpp"
#include "bst/pbst.hpp"
#include "bst/tours.hpp"
#include "random_trees.hpp"

using namespace bst;

namespace {

int cyclic_gap(const Tour& tour, const Tree& tree) {
  const HopMetric hm(tree);
  int worst = 0;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    worst = std::max(worst, hm.hops(tour[i], tour[(i + 1) % tour.size()]));
  }
  return worst;
}

}  // namespace

TEST_CASE("three-node path lifts to a triangle") {
  const Tree path = testing::path_tree(3);
  const auto m = MetricInstance::euclidean({{0.0}, {1.0}, {2.0}});
  const TourSet t = lift_to_tours(path, m);
  REQUIRE(t.tours.size() == 1);
  CHECK(t.tours[0] == Tour{0, 2, 1});
  CHECK(cyclic_gap(t.tours[0], path) == 2);
  CHECK(t.bottleneck == 2.0);
}

TEST_CASE("small trees have no tour") {
  const auto m = MetricInstance::euclidean({{0.0}, {1.0}, {2.0}, {3.0}, {4.0}});
  CHECK_THROWS_AS(lift_to_tours(testing::path_tree(2), m), DegenerateTourError);
  CHECK_THROWS_AS(lift_to_tours(Forest({testing::path_tree(3), Tree({3, 4}, {{3, 4}})}), m),
                  DegenerateTourError);
}

TEST_CASE("tour bottleneck closes the cycle") {
  const auto m = MetricInstance::euclidean({{0.0}, {1.0}, {5.0}});
  CHECK(tour_bottleneck({0, 1, 2}, m) == 5.0);
  CHECK(tour_bottleneck({0}, m) == 0.0);
}

TEST_CASE("cyclic gaps on random forests") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    const int k = 2 + static_cast<int>(seed % 4);
    const int n = 3 + static_cast<int>(seed % 9);
    const auto m = euclidean_points(2, k * n, rng);
    const PbstResult r = solve_pbst(m, k);
    const TourSet t = lift_to_tours(r.forest, m);
    REQUIRE(t.tours.size() == r.forest.size());
    for (std::size_t i = 0; i < t.tours.size(); ++i) {
      Tour sorted = t.tours[i];
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == r.forest[i].nodes());
      CHECK(cyclic_gap(t.tours[i], r.forest[i]) <= 3);
    }
    CHECK(t.bottleneck <= 3 * r.bottleneck * (1 + 1e-12));
  }
}

TEST_CASE("lifted two-tree tours against the exact tour optimum") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Rng rng(seed);
    const int n = 3 + static_cast<int>(seed % 2);  // 6 or 8 points
    const auto m = seed % 2 ? euclidean_points(2, 2 * n, rng) : random_metric(2 * n, rng);
    const TuplePartition tuples(2, random_tuples(2 * n, 2, rng));
    const DbstResult r = solve_dbst(m, tuples);
    const TourSet lifted = lift_to_tours(r.forest, m);
    const TourSet best = exact_disjoint_tours(m, tuples);
    CHECK(lifted.bottleneck <= 12 * best.bottleneck + 1e-9);
    CHECK(exact_dbst(m, tuples).bottleneck <= best.bottleneck + 1e-12);
  }
}
