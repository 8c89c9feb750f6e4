#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "bst/errors.hpp"
#include "bst/gbst.hpp"
#include "bst/generate.hpp"
#include "bst/oracle.hpp"
#include "random_trees.hpp"

using namespace bst;

namespace {

// Random pairing of 0..n-1 with some singletons.
ClusterPartition pairing(int n, testing::Rng& rng) {
  return ClusterPartition(2, random_clusters(n, 0.3, rng));
}

void check_one_per_cluster(const std::vector<PointId>& chosen, const ClusterPartition& clusters) {
  for (const auto& c : clusters.clusters()) {
    CHECK(std::count_if(c.begin(), c.end(), [&](PointId p) {
            return std::binary_search(chosen.begin(), chosen.end(), p);
          }) == 1);
  }
}

}  // namespace

TEST_CASE("t1 stops at the first qualifying component") {
  const auto m = MetricInstance::euclidean({{0.0}, {1.0}, {5.0}});
  const ClusterPartition c(2, {{0}, {1, 2}});
  const Tree t1 = build_t1(m, c);
  CHECK(t1.nodes() == std::vector<PointId>{0, 1});
  CHECK(bottleneck(t1, m) == 1.0);
}

TEST_CASE("singleton clusters reduce to the spanning tree") {
  Rng rng(4);
  const auto m = euclidean_points(2, 9, rng);
  std::vector<std::vector<PointId>> singles;
  for (PointId p = 0; p < 9; ++p) singles.push_back({p});
  const ClusterPartition c(2, singles);
  const Tree t1 = build_t1(m, c);
  CHECK(t1.size() == 9);
  const double mst = bottleneck(minimum_spanning_tree(m), m);
  CHECK(bottleneck(t1, m) == mst);
  const GbstResult r = solve_2gbst(m, c);
  CHECK(r.bottleneck == mst);
  CHECK(r.bottleneck == exact_gbst(m, c).bottleneck);
  for (PointId p = 0; p < 9; ++p) CHECK(r.selection.status_of(p) == NodeStatus::selected);
  CHECK(r.tree.edges().size() == 8);
}

TEST_CASE("one cluster") {
  const auto m = MetricInstance::euclidean({{0.0}, {2.0}});
  const GbstResult r = solve_2gbst(m, ClusterPartition(2, {{0, 1}}));
  CHECK(r.tree.size() == 1);
  CHECK(r.bottleneck == 0.0);
}

TEST_CASE("short path with one pair") {
  // a - b1 - b2 with clusters {a}, {b1, b2}, hung from a.
  const Tree t1 = testing::path_tree(3).rooted_at(0);
  const ClusterPartition c(2, {{0}, {1, 2}});
  const NodeSelection s = select_nodes(t1, c);
  CHECK(s.status_of(0) == NodeStatus::selected);
  CHECK((s.status_of(1) == NodeStatus::selected) != (s.status_of(2) == NodeStatus::selected));
  const Tree t2 = build_t2(t1, s);
  CHECK(t2.size() == 2);
}

TEST_CASE("eight point line fixture") {
  const ProblemInput in = fixture_gbst_path8();
  const ClusterPartition c(2, *in.clusters);
  CHECK(exact_gbst(in.instance, c).bottleneck == 3.0);
  CHECK(testing::brute_gbst(in.instance, *in.clusters) == 3.0);
  const GbstResult r = solve_2gbst(in.instance, c);
  CHECK(r.t1.size() == 8);
  CHECK(r.t1_bottleneck == 1.0);
  CHECK(r.bottleneck == 3.0);
  CHECK(testing::max_edge_hops(r.tree, r.t1) == 3);
}

TEST_CASE("selection and t2 on random trees") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    testing::Rng rng(seed);
    const int n = seed % 50 == 0 ? 3000 : 1 + static_cast<int>(seed % 40);
    const Tree t1 = testing::random_tree(n, rng);
    const ClusterPartition c = pairing(n, rng);
    const NodeSelection s = select_nodes(t1, c);
    for (PointId p : t1.nodes()) CHECK(s.status_of(p) != NodeStatus::open);
    const auto chosen = s.selected();
    check_one_per_cluster(chosen, c);
    const Tree t2 = build_t2(t1, s);
    CHECK(t2.nodes() == chosen);
    if (n <= 40) {
      CHECK(testing::max_edge_hops(t2, t1) <= 3);
    } else {
      const HopMetric hm(t1);
      for (const Edge& e : t2.edges()) CHECK(hm.hops(e.u, e.v) <= 3);
    }
  }
}

TEST_CASE("every selected node already selected keeps t1") {
  const Tree t1 = testing::path_tree(5).rooted_at(0);
  const ClusterPartition c(2, {{0}, {1}, {2}, {3}, {4}});
  const Tree t2 = build_t2(t1, select_nodes(t1, c));
  CHECK(testing::max_edge_hops(t2, t1) == 1);
}

TEST_CASE("ratio against the exact optimum") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Rng rng(seed);
    const int n = 2 + static_cast<int>(seed % 11);
    const auto m = seed % 2 ? euclidean_points(2, n, rng) : random_metric(n, rng);
    const ClusterPartition c(2, random_clusters(n, 0.25, rng));
    const GbstResult r = solve_2gbst(m, c);
    const double optimum = exact_gbst(m, c).bottleneck;
    CHECK(r.t1_bottleneck <= optimum + 1e-12);
    CHECK(r.bottleneck <= 3 * r.t1_bottleneck * (1 + 1e-12));
    CHECK(r.bottleneck <= 3 * optimum + 1e-9);
    check_one_per_cluster(r.tree.nodes(), c);
  }
}

TEST_CASE("gbst precondition errors") {
  const Tree t1 = testing::path_tree(3);
  CHECK_THROWS_AS(select_nodes(t1, ClusterPartition(2, {{0}, {1}, {2}, {3}})), InfeasibleError);
  CHECK_THROWS_AS(select_nodes(t1, ClusterPartition(3, {{0, 1, 2}})), PartitionError);
}
