#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bst/metric.hpp"

namespace bst {

struct Edge {
  PointId u;
  PointId v;

  /// The same edge with u < v.
  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A combinatorial tree over point ids. Construction validates that the edges form
/// a spanning tree of the node set. Node ids are kept sorted ascending.
class Tree {
 public:
  /// Single-node tree.
  explicit Tree(PointId node);

  /// Throws DomainError when the edges do not form a tree over `nodes`, or when the
  /// root is not one of the nodes.
  Tree(std::vector<PointId> nodes, std::vector<Edge> edges,
       std::optional<PointId> root = std::nullopt);

  const std::vector<PointId>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<PointId> root() const noexcept { return root_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  bool contains(PointId p) const;
  /// Position of `p` in nodes(); throws IdentifierError when absent.
  int index_of(PointId p) const;

  Tree rooted_at(PointId root) const;

  /// Neighbours of every node as positions into nodes(), each list ascending.
  std::vector<std::vector<int>> adjacency() const;

 private:
  std::vector<PointId> nodes_;
  std::vector<Edge> edges_;
  std::optional<PointId> root_;
};

/// Node-disjoint trees.
class Forest {
 public:
  Forest() = default;
  /// Throws PartitionError when two trees share a node.
  explicit Forest(std::vector<Tree> trees);

  const std::vector<Tree>& trees() const noexcept { return trees_; }
  std::size_t size() const noexcept { return trees_.size(); }
  const Tree& operator[](std::size_t i) const { return trees_[i]; }

 private:
  std::vector<Tree> trees_;
};

/// Parent/child/depth/subtree-size view of a tree hung from a root. All accessors
/// work on positions into tree.nodes(); children are listed in ascending id order.
class RootedTree {
 public:
  RootedTree(const Tree& tree, PointId root);
  /// Uses tree.root(), or the lowest-id leaf when the tree is unrooted.
  explicit RootedTree(const Tree& tree);

  std::size_t size() const noexcept { return ids_.size(); }
  int root() const noexcept { return root_; }
  PointId id(int i) const { return ids_[i]; }
  int index_of(PointId p) const;

  int parent(int i) const { return parent_[i]; }  // -1 at the root
  std::span<const int> children(int i) const {
    return {child_list_.data() + child_begin_[i],
            static_cast<std::size_t>(child_begin_[i + 1] - child_begin_[i])};
  }
  int depth(int i) const { return depth_[i]; }
  /// N(v): nodes in the subtree hung from i, i included.
  int subtree_size(int i) const { return subtree_size_[i]; }
  /// Root first; every parent precedes its children.
  const std::vector<int>& preorder() const noexcept { return preorder_; }

 private:
  std::vector<PointId> ids_;
  int root_ = 0;
  std::vector<int> parent_;
  std::vector<int> child_begin_;
  std::vector<int> child_list_;
  std::vector<int> depth_;
  std::vector<int> subtree_size_;
  std::vector<int> preorder_;
};

/// Constant-time-ish hop distance queries (binary-lifting LCA) for repeated use.
class HopMetric {
 public:
  explicit HopMetric(const Tree& tree);
  int hops(PointId u, PointId v) const;

 private:
  RootedTree rooted_;
  std::vector<std::vector<int>> up_;
};

/// Lowest-id node of degree <= 1.
PointId lowest_leaf(const Tree& tree);

/// Kruskal over the complete graph on `subset`, edges ordered by (length, u, v).
/// The result is weight-optimal and bottleneck-optimal; edges are normalized and
/// listed lexicographically. Throws DomainError for an empty subset.
Tree minimum_spanning_tree(const MetricInstance& instance, std::span<const PointId> subset);
Tree minimum_spanning_tree(const MetricInstance& instance);

struct WeightedEdge {
  Edge edge;
  double length;
};

/// The first edge (in edges() order) of maximum length. DomainError on an edgeless tree.
WeightedEdge longest_edge(const Tree& tree, const MetricInstance& instance);

/// lambda(T); zero for a single node.
double bottleneck(const Tree& tree, const MetricInstance& instance);
double bottleneck(const Forest& forest, const MetricInstance& instance);

/// Number of edges on the tree path from u to v.
int hop_distance(const Tree& tree, PointId u, PointId v);

/// The two components left after deleting `cut`, the first containing cut.u. Edge
/// order is preserved from the source tree.
std::pair<Tree, Tree> split_at_edge(const Tree& tree, Edge cut);

/// Tree induced on `nodes`, which must be connected in `tree`.
Tree induced_subtree(const Tree& tree, std::span<const PointId> nodes);

/// Ordering of all nodes from u to v with consecutive nodes at most three hops apart.
/// (u, v) must be an edge, otherwise PreconditionError.
std::vector<PointId> cube_hamiltonian_path(const Tree& tree, PointId u, PointId v);

/// Cyclic ordering of all nodes, cyclic gaps at most three hops, built from the
/// lowest edge. Requires at least three nodes (DomainError).
std::vector<PointId> cube_hamiltonian_cycle(const Tree& tree);

/// The hop metric of a tree as an explicit instance over ids 0..size-1; the tree's
/// nodes must be exactly 0..size-1.
MetricInstance hop_metric_instance(const Tree& tree);

}  // namespace bst
