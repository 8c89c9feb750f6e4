#pragma once

#include <cstdint>
#include <span>

#include "bst/metric.hpp"
#include "bst/tours.hpp"
#include "bst/tree.hpp"

namespace bst {

// Enumeration caps. Exceeding one raises OracleSizeError; nothing is truncated.
inline constexpr int kDbstOracleMaxK = 3;
inline constexpr std::size_t kDbstOracleMaxTuples = 6;
inline constexpr std::size_t kGbstOracleMaxClusters = 12;
inline constexpr std::uint64_t kPbstExhaustiveCap = 1'000'000;
inline constexpr std::uint64_t kPbstPrunedCap = 100'000'000;
inline constexpr std::size_t kTourOracleMaxPoints = 9;

struct ForestOptimum {
  Forest forest;
  double bottleneck = 0.0;
};

struct TreeOptimum {
  Tree tree;
  double bottleneck = 0.0;
};

struct TourOptimum {
  Tour tour;
  double bottleneck = 0.0;
};

/// Bottleneck of a minimum spanning tree on `subset` (0 for fewer than two points).
double group_bottleneck(const MetricInstance& instance, std::span<const PointId> subset);

/// Optimal k-DBST by trying every assignment of tuple members to the k trees, with the
/// first tuple's assignment fixed. Requires k <= 3 and at most 6 tuples.
ForestOptimum exact_dbst(const MetricInstance& instance, const TuplePartition& tuples);

/// Optimal GBST by trying every choice of one point per cluster (at most 12 clusters).
TreeOptimum exact_gbst(const MetricInstance& instance, const ClusterPartition& clusters);

enum class Search {
  exhaustive,  // every unordered partition; at most 1e6 of them
  pruned,      // branch and bound on completed groups; at most 1e8 partitions
};

/// Number of unordered partitions of `points` into k groups of points/k.
std::uint64_t balanced_partition_count(std::size_t points, int k);

/// Optimal k-PBST over all unordered partitions into k groups of equal size.
ForestOptimum exact_pbst(const MetricInstance& instance, int k, Search search = Search::exhaustive);

/// Minimum bottleneck Hamiltonian cycle on `subset` (at most 9 points). The lowest id
/// is fixed first and each cycle is tried in one direction only. A single point gives
/// the tour [p] and a pair gives [a, b], both with the obvious bottleneck.
TourOptimum exact_bottleneck_tour(const MetricInstance& instance, std::span<const PointId> subset);

/// k disjoint tours, each holding one member of every tuple, minimising the longest tour
/// edge. Same caps as exact_dbst.
TourSet exact_disjoint_tours(const MetricInstance& instance, const TuplePartition& tuples);

}  // namespace bst
