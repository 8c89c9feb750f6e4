#pragma once

#include <optional>
#include <vector>

#include "bst/labeling.hpp"
#include "bst/metric.hpp"
#include "bst/tree.hpp"

namespace bst {

/// Size-k groups of tree nodes in extraction order. Bucket j was cut from the
/// subtree of representative[j]; parent_bucket[j] is the bucket holding that
/// representative (or its parent, when the representative itself went into j), and
/// -1 for the final bucket.
struct BucketPartition {
  int k = 0;
  std::vector<std::vector<PointId>> buckets;
  std::vector<PointId> representative;
  std::vector<int> parent_bucket;
};

/// Repeatedly picks the node v minimising N(v) among those with N(v) >= k (lowest id
/// on ties) and moves k leaves of its subtree, deepest first then lowest id, into a
/// new bucket. Unrooted trees are hung from their lowest-id leaf. Nodes in one bucket
/// are at most 2k-2 hops apart. Throws PartitionError when k does not divide the node
/// count.
BucketPartition bucketize(const Tree& tree, int k);

struct DisjointForest {
  Forest forest;  // tree c holds the points labelled c+1
  BucketPartition buckets;
  Labeling labeling;
};

/// Buckets `spanning`, labels its nodes against (tuples, buckets) and links the
/// label-c point of every bucket to the label-c point of its parent bucket. Every
/// realised edge spans at most 3k-2 hops of `spanning`. The tree's nodes must be the
/// tuples' points.
DisjointForest disjoint_trees_from_tree(const Tree& spanning, const TuplePartition& tuples);

struct DbstResult {
  Forest forest;
  double bottleneck = 0.0;
  double mst_bottleneck = 0.0;
  /// k = 2 only: the longest MST edge already separated every tuple and the two
  /// sides were returned as they are.
  bool shortcut = false;
  Tree mst;
  std::optional<BucketPartition> buckets;
  std::optional<Labeling> labeling;
};

/// (3k-2)-approximate k disjoint bottleneck spanning trees, one point of every tuple
/// in each tree. Throws PartitionError when the instance does not have k*n points.
DbstResult solve_dbst(const MetricInstance& instance, const TuplePartition& tuples);

}  // namespace bst
