#include <doctest.h>

#include "bst/errors.hpp"
#include "bst/generate.hpp"
#include "bst/metric.hpp"

using namespace bst;

TEST_CASE("euclidean distance on a line") {
  const auto m = MetricInstance::euclidean({{0.0}, {3.0}});
  CHECK(m.distance(0, 1) == 3.0);
  CHECK(m.distance(1, 0) == 3.0);
  CHECK(m.distance(1, 1) == 0.0);
  CHECK(m.is_euclidean());
}

TEST_CASE("matrix distance reads the entry") {
  const auto m = MetricInstance::from_matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(m.distance(0, 2) == 2.0);
  CHECK_FALSE(m.is_euclidean());
  CHECK(validate_metric(m).ok());
}

TEST_CASE("out of range ids") {
  const auto m = MetricInstance::euclidean({{0.0}, {1.0}});
  CHECK_THROWS_AS(m.distance(0, 2), IdentifierError);
  CHECK_THROWS_AS(m.distance(-1, 0), IdentifierError);
}

TEST_CASE("triangle violation is reported with its triple") {
  const DistanceMatrix bad{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}};
  const MetricReport r = validate_metric(bad);
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.u == 0 && v.v == 1 && v.w == 2) {
      found = true;
      CHECK(v.direct == 5.0);
      CHECK(v.detour == 2.0);
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(MetricInstance::from_matrix(bad), MetricError);
  CHECK_NOTHROW(MetricInstance::from_matrix(bad, MetricInstance::Check::skip));
}

TEST_CASE("asymmetric, negative and non-zero diagonal matrices") {
  CHECK_FALSE(validate_metric(DistanceMatrix{{0, 1}, {2, 0}}).symmetric);
  CHECK_FALSE(validate_metric(DistanceMatrix{{0, -1}, {-1, 0}}).non_negative);
  CHECK_FALSE(validate_metric(DistanceMatrix{{1, 1}, {1, 0}}).zero_diagonal);
  CHECK_THROWS_AS(MetricInstance::from_matrix({{0, 1}, {1}}), DomainError);
  CHECK_THROWS_AS(MetricInstance::from_matrix({}), DomainError);
}

TEST_CASE("euclidean shape errors") {
  CHECK_THROWS_AS(MetricInstance::euclidean({}), DomainError);
  CHECK_THROWS_AS(MetricInstance::euclidean({{0.0}, {1.0, 2.0}}), DomainError);
}

TEST_CASE("coincident points are allowed") {
  const auto m = MetricInstance::euclidean({{1.0, 1.0}, {1.0, 1.0}, {2.0, 1.0}});
  CHECK(m.distance(0, 1) == 0.0);
  CHECK(validate_metric(m).ok());
}

TEST_CASE("random instances satisfy the axioms") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const auto e = euclidean_points(3, 12, rng);
    const auto r = random_metric(12, rng);
    for (const auto* m : {&e, &r}) {
      for (PointId u = 0; u < 12; ++u) {
        for (PointId v = 0; v < 12; ++v) {
          CHECK(m->distance(u, v) == m->distance(v, u));
          CHECK(m->distance(u, v) >= 0.0);
          for (PointId w = 0; w < 12; ++w) {
            CHECK(m->distance(u, w) <= m->distance(u, v) + m->distance(v, w) + 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("restriction keeps distances") {
  Rng rng(7);
  const auto m = random_metric(6, rng);
  const std::vector<PointId> subset{4, 1, 5};
  const auto sub = m.restricted(subset);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(sub.distance(i, j) == m.distance(subset[i], subset[j]));
  }
}

TEST_CASE("tuple partitions") {
  CHECK_NOTHROW(TuplePartition(2, {{0, 3}, {1, 2}}));
  CHECK_THROWS_AS(TuplePartition(2, {{0, 1}, {1, 2}}), PartitionError);
  CHECK_THROWS_AS(TuplePartition(2, {{0, 1, 2}, {3}}), PartitionError);
  CHECK_THROWS_AS(TuplePartition(2, {{0, 1}, {2, 4}}), PartitionError);
  CHECK_THROWS_AS(TuplePartition(1, {{0}}), PartitionError);
  const TuplePartition t(3, {{0, 1, 2}, {3, 4, 5}});
  CHECK(t.count() == 2);
  CHECK(t.point_count() == 6);
}

TEST_CASE("cluster partitions") {
  const ClusterPartition c(2, {{0}, {2, 1}, {3}});
  CHECK(c.point_count() == 4);
  CHECK(c.cluster_of() == std::vector<int>{0, 1, 1, 2});
  CHECK_THROWS_AS(ClusterPartition(2, {{0, 1, 2}}), PartitionError);
  CHECK_THROWS_AS(ClusterPartition(2, {{0}, {}}), PartitionError);
  CHECK_THROWS_AS(ClusterPartition(2, {{0}, {2}}), PartitionError);
}
