#pragma once

#include <optional>
#include <vector>

#include "bst/metric.hpp"
#include "bst/tree.hpp"

namespace bst {

enum class NodeStatus { open, selected, burned };

/// Outcome of the representative-selection walk over T1. Vectors are aligned with
/// `nodes` (the T1 node ids, ascending).
struct NodeSelection {
  PointId root = 0;  // the walk hung T1 from this node
  std::vector<PointId> nodes;
  std::vector<NodeStatus> status;
  /// Nodes in the order they were visited; pre-selected singletons come first.
  std::vector<PointId> visit_order;
  /// For a burned node: the node the walk selected immediately after burning it,
  /// when the walk continued at its parent or at one of its children.
  std::vector<std::optional<PointId>> selected_after_burn;

  NodeStatus status_of(PointId p) const;
  std::vector<PointId> selected() const;
};

/// Adds edges in (length, u, v) order until one component touches every cluster and
/// returns that component's spanning forest edges. lambda(T1) <= optimum.
Tree build_t1(const MetricInstance& instance, const ClusterPartition& clusters);

/// Lowest-id node whose cluster has no other node in `t1`, else the lowest-id node.
PointId selection_root(const Tree& t1, const ClusterPartition& clusters);

/// Selects exactly one node of every cluster restricted to `t1`. Clusters with one
/// node in t1 are selected up front; then, starting from the root when it is still
/// open, the walk selects a node, burns its twin, and continues at the twin's parent
/// if open, else at the twin's lowest open child, else at the lowest open node.
/// `t1` without a root is hung from selection_root. Throws InfeasibleError for a
/// cluster with no node in t1 and PartitionError for clusters larger than two.
NodeSelection select_nodes(const Tree& t1, const ClusterPartition& clusters);

/// Joins every selected non-root node to a selected node nearer the root at most three
/// hops away in t1 (parent, grandparent, great-grandparent, or the child of the
/// grandparent selected right after the grandparent was burned), with t1 hung from
/// selection.root, which must be selected (PreconditionError).
Tree build_t2(const Tree& t1, const NodeSelection& selection);

struct GbstResult {
  Tree tree;
  double bottleneck = 0.0;
  Tree t1;
  double t1_bottleneck = 0.0;
  NodeSelection selection;
};

/// 3-approximate generalized bottleneck spanning tree for clusters of size <= 2.
GbstResult solve_2gbst(const MetricInstance& instance, const ClusterPartition& clusters);

}  // namespace bst
