#pragma once

#include <span>
#include <vector>

#include "bst/metric.hpp"
#include "bst/tree.hpp"

// Slow reference computations that share no code with the library's algorithms.
namespace bst::testing {

/// hops[i][j] between tree.nodes()[i] and tree.nodes()[j], by BFS from every node.
std::vector<std::vector<int>> all_pair_hops(const Tree& tree);

/// Largest hop distance in `source` spanned by any edge of `tree`.
int max_edge_hops(const Tree& tree, const Tree& source);

/// Minimum possible bottleneck of a spanning tree on `subset`: the largest minimax
/// path distance over all pairs (Floyd-Warshall in the (max, min) semiring).
double minimax_bottleneck(const MetricInstance& instance, std::span<const PointId> subset);

/// Minimum bottleneck over every spanning tree of all points, by trying every
/// (n-1)-edge subset of the complete graph. Small n only.
double enumerated_spanning_bottleneck(const MetricInstance& instance);

/// Every assignment of each tuple's members to the k groups, nothing fixed.
double brute_dbst(const MetricInstance& instance, const std::vector<std::vector<PointId>>& tuples);

/// Every labelling of the points with k group labels that gives each group
/// size/k points.
double brute_pbst(const MetricInstance& instance, int k);

/// Every choice of one point per cluster.
double brute_gbst(const MetricInstance& instance,
                  const std::vector<std::vector<PointId>>& clusters);

/// Every ordering of the subset as a cycle, nothing fixed.
double brute_tour(const MetricInstance& instance, std::vector<PointId> subset);

/// Longest edge of `tree` under `instance`, scanning the edge list.
double edge_max(const Tree& tree, const MetricInstance& instance);

}  // namespace bst::testing
