#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bst/io.hpp"
#include "bst/metric.hpp"
#include "bst/tree.hpp"

namespace bst {

using Rng = std::mt19937_64;

/// Uniform points in the unit cube [0,1)^dim.
MetricInstance euclidean_points(int dim, int points, Rng& rng);

/// Integer edge weights drawn from 1..100 on the complete graph, closed under
/// shortest paths so the triangle inequality holds exactly.
MetricInstance random_metric(int points, Rng& rng);

/// A uniformly shuffled grouping of 0..points-1 into tuples of k.
std::vector<std::vector<PointId>> random_tuples(int points, int k, Rng& rng);

/// Clusters of one or two points: each cluster is a singleton with probability
/// `singleton_rate`, otherwise a pair (a lone final point is a singleton).
std::vector<std::vector<PointId>> random_clusters(int points, double singleton_rate, Rng& rng);

/// Centre 0 joined to leaves 1..leaves.
Tree star_tree(int leaves);

/// k^2 nodes: centre 0 and k+1 legs, each a path of k-1 nodes with contiguous ids.
Tree spider_tree(int k);

/// Star path metric: leaves at 1 from the centre and 2 from each other.
ProblemInput fixture_star(int leaves);

/// The spider's own hop metric.
ProblemInput fixture_spider(int k);

/// Eight unit-spaced points on a line with five clusters whose best selection has
/// bottleneck 3. Throws InvariantViolation if the layout ever stops having that optimum.
ProblemInput fixture_gbst_path8();

enum class PartitionKind { none, tuples, clusters };

struct GenerateOptions {
  std::string kind;  // euclidean, random-metric, fixture-gbst-path8, fixture-star, fixture-spider
  int dim = 2;
  int points = 8;
  int k = 2;       // tuple size; the spider's k
  int leaves = 3;  // fixture-star
  PartitionKind partition = PartitionKind::none;
  double singleton_rate = 0.25;
  std::uint64_t seed = 1;
};

/// DomainError for an unknown kind or invalid parameters. Random kinds draw the
/// instance and then the partition from one generator seeded with `seed`; fixtures
/// carry their own partitions and ignore the seed.
ProblemInput generate(const GenerateOptions& options);

std::vector<std::string> generator_kinds();

}  // namespace bst
