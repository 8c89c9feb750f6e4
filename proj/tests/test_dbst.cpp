#include <doctest.h>

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "bst/dbst.hpp"
#include "bst/errors.hpp"
#include "bst/generate.hpp"
#include "bst/oracle.hpp"
#include "random_trees.hpp"

using namespace bst;

namespace {

int bucket_diameter(const std::vector<PointId>& bucket, const HopMetric& hm) {
  int worst = 0;
  for (PointId a : bucket) {
    for (PointId b : bucket) worst = std::max(worst, hm.hops(a, b));
  }
  return worst;
}

void check_one_point_per_tuple(const Forest& forest, const TuplePartition& tuples) {
  REQUIRE(forest.size() == static_cast<std::size_t>(tuples.k()));
  for (const Tree& t : forest.trees()) {
    CHECK(t.size() == tuples.count());
    for (const auto& tuple : tuples.tuples()) {
      CHECK(std::count_if(tuple.begin(), tuple.end(), [&](PointId p) { return t.contains(p); }) == 1);
    }
  }
}

}  // namespace

TEST_CASE("bucketize a path of four") {
  const Tree path = testing::path_tree(4).rooted_at(0);
  const BucketPartition b = bucketize(path, 2);
  REQUIRE(b.buckets.size() == 2);
  std::vector<PointId> first = b.buckets[0];
  std::sort(first.begin(), first.end());
  CHECK(first == std::vector<PointId>{2, 3});
  std::vector<PointId> second = b.buckets[1];
  std::sort(second.begin(), second.end());
  CHECK(second == std::vector<PointId>{0, 1});
  CHECK(b.parent_bucket.back() == -1);
}

TEST_CASE("bucketize divisibility") {
  CHECK_THROWS_AS(bucketize(testing::path_tree(5), 2), PartitionError);
}

TEST_CASE("pairs are siblings or parent and child") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    testing::Rng rng(seed);
    const Tree t = testing::random_tree(2 * (1 + static_cast<int>(seed % 30)), rng);
    const BucketPartition b = bucketize(t, 2);
    const HopMetric hm(t);
    for (const auto& bucket : b.buckets) CHECK(bucket_diameter(bucket, hm) <= 2);
  }
}

TEST_CASE("bucket structure on random trees") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    testing::Rng rng(seed);
    const int k = 2 + static_cast<int>(seed % 5);
    const int n = 1 + static_cast<int>(seed % 40);
    const Tree t = testing::random_tree(k * n, rng);
    const BucketPartition b = bucketize(t, k);
    const HopMetric hm(t);
    std::set<PointId> seen;
    for (const auto& bucket : b.buckets) {
      CHECK(bucket.size() == static_cast<std::size_t>(k));
      CHECK(bucket_diameter(bucket, hm) <= 2 * k - 2);
      seen.insert(bucket.begin(), bucket.end());
    }
    CHECK(seen.size() == t.size());
    // Parent links lead to the last bucket without cycles.
    const int count = static_cast<int>(b.buckets.size());
    for (int j = 0; j < count; ++j) {
      int at = j;
      int steps = 0;
      while (b.parent_bucket[at] >= 0 && steps <= count) {
        CHECK(b.parent_bucket[at] > at);
        at = b.parent_bucket[at];
        ++steps;
      }
      CHECK(at == count - 1);
    }
  }
}

TEST_CASE("spider buckets reach diameter 2k-2") {
  for (int k : {2, 3, 4, 5}) {
    const Tree spider = spider_tree(k);
    const BucketPartition b = bucketize(spider, k);  // hung from the centre
    const HopMetric hm(spider);
    int worst = 0;
    for (const auto& bucket : b.buckets) worst = std::max(worst, bucket_diameter(bucket, hm));
    CHECK(worst == 2 * k - 2);
  }
}

TEST_CASE("line of four with crossing tuples") {
  const auto line = MetricInstance::euclidean({{0.0}, {1.0}, {2.0}, {3.0}});
  const TuplePartition tuples(2, {{0, 3}, {1, 2}});
  const DbstResult r = solve_dbst(line, tuples);
  check_one_point_per_tuple(r.forest, tuples);
  const double optimum = exact_dbst(line, tuples).bottleneck;
  CHECK(optimum == 1.0);
  CHECK(r.mst_bottleneck == 1.0);
  CHECK(r.bottleneck <= 4.0 * optimum);
}

TEST_CASE("shortcut returns the two sides of the longest edge") {
  // Two far clusters {0,1} and {2,3}; each tuple has one point on each side.
  const auto m = MetricInstance::euclidean({{0.0}, {1.0}, {10.0}, {11.0}});
  const TuplePartition tuples(2, {{0, 2}, {1, 3}});
  const DbstResult r = solve_dbst(m, tuples);
  CHECK(r.shortcut);
  CHECK(r.bottleneck == 1.0);
  CHECK(r.bottleneck == exact_dbst(m, tuples).bottleneck);
}

TEST_CASE("realised edges stay within 3k-2 hops of the MST") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Rng rng(seed);
    const int k = 2 + static_cast<int>(seed % 4);
    const int n = 1 + static_cast<int>(seed % 12);
    const auto m = seed % 2 ? euclidean_points(2, k * n, rng) : random_metric(k * n, rng);
    const TuplePartition tuples(k, random_tuples(k * n, k, rng));
    const DbstResult r = solve_dbst(m, tuples);
    check_one_point_per_tuple(r.forest, tuples);
    if (r.shortcut) continue;
    for (const Tree& t : r.forest.trees()) {
      CHECK(testing::max_edge_hops(t, r.mst) <= 3 * k - 2);
    }
    CHECK(r.bottleneck <= (3 * k - 2) * r.mst_bottleneck * (1 + 1e-12));
  }
}

TEST_CASE("ratio against the exact optimum") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    const int k = 2 + static_cast<int>(seed % 2);
    const int n = 1 + static_cast<int>(seed % (k == 2 ? 5 : 4));
    const auto m = seed % 3 ? euclidean_points(2, k * n, rng) : random_metric(k * n, rng);
    const TuplePartition tuples(k, random_tuples(k * n, k, rng));
    const DbstResult r = solve_dbst(m, tuples);
    const double optimum = exact_dbst(m, tuples).bottleneck;
    CHECK(r.bottleneck <= (3 * k - 2) * optimum + 1e-9);
    CHECK(r.bottleneck >= optimum - 1e-12);
    if (k == 2 && !r.shortcut) CHECK(r.mst_bottleneck <= optimum + 1e-12);
    if (r.shortcut) CHECK(r.bottleneck == doctest::Approx(optimum));
  }
}

TEST_CASE("dbst size mismatch") {
  const auto m = MetricInstance::euclidean({{0.0}, {1.0}, {2.0}});
  CHECK_THROWS_AS(solve_dbst(m, TuplePartition(2, {{0, 1}})), PartitionError);
}

TEST_CASE("for k = 3 the MST bottleneck is not a lower bound") {
  const auto m = MetricInstance::euclidean({{0.0}, {0.1}, {0.2}, {0.3}, {100.0}, {100.1}});
  const TuplePartition tuples(3, {{0, 1, 4}, {2, 3, 5}});
  const DbstResult r = solve_dbst(m, tuples);
  const double optimum = exact_dbst(m, tuples).bottleneck;
  CHECK(optimum == doctest::Approx(0.2));
  CHECK(r.mst_bottleneck > optimum);
  CHECK(r.bottleneck <= 7 * r.mst_bottleneck);
  for (const Tree& t : r.forest.trees()) CHECK(testing::max_edge_hops(t, r.mst) <= 7);
}
