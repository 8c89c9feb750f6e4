#pragma once

#include <vector>

#include "bst/metric.hpp"
#include "bst/tree.hpp"

namespace bst {

struct TwoWaySplit {
  Tree red;   // contains the root, which is also red's root
  Tree blue;  // rooted at the root's only child
};

/// Splits a tree into a red tree of `red_size` nodes and a blue tree holding the rest,
/// every edge of both spanning at most two hops of `tree`. The tree is hung from its
/// root when that is a leaf, else from its lowest-id leaf; nodes on even depths start
/// red and odd depths blue, each joined to its grandparent. The oversized colour then
/// gives up its deepest (lowest-id on ties) nodes, which join the other colour through
/// whichever of parent and grandparent has that colour.
/// DomainError unless 1 <= red_size <= |tree| - 1.
TwoWaySplit partition_two(const Tree& tree, int red_size);

/// Three trees of |tree|/3 nodes each, all edges at most two hops of `tree`.
/// PartitionError when 3 does not divide the node count.
Forest partition_three(const Tree& tree);

/// k >= 4 consecutive pieces of a Hamiltonian path in the cube of `tree`; each piece
/// is a path whose edges span at most three hops. A tree that is itself a path is
/// walked end to end instead.
Forest partition_many(const Tree& tree, int k);

/// k trees of |tree|/k nodes: partition_two for k = 2, partition_three for k = 3 and
/// partition_many for k >= 4. Hop bound 2 for k <= 3 and 3 otherwise.
Forest balanced_partition(const Tree& tree, int k);

struct PbstResult {
  Forest forest;
  double bottleneck = 0.0;
  double mst_bottleneck = 0.0;
  /// Number of times the longest edge split a (sub)tree into multiples of n.
  int recursive_splits = 0;
};

/// alpha-approximate k-partitioned bottleneck spanning trees (alpha = 2 for k <= 3,
/// 3 for k >= 4). Throws PartitionError unless k divides the point count and
/// UnsupportedCaseError when n = size/k < 3 (a bottleneck matching problem).
PbstResult solve_pbst(const MetricInstance& instance, int k);

}  // namespace bst
