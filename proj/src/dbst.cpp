#include "bst/dbst.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "bst/errors.hpp"

namespace bst {

namespace {

// Remaining nodes of the subtree of x, ordered deepest first, then by id.
std::vector<int> gather_remaining(const RootedTree& rt, int x, const std::vector<char>& removed) {
  std::vector<int> pool;
  std::vector<int> stack{x};
  while (!stack.empty()) {
    const int y = stack.back();
    stack.pop_back();
    pool.push_back(y);
    for (int c : rt.children(y)) {
      if (!removed[c]) stack.push_back(c);
    }
  }
  std::sort(pool.begin(), pool.end(), [&](int a, int b) {
    return std::make_tuple(-rt.depth(a), a) < std::make_tuple(-rt.depth(b), b);
  });
  return pool;
}

}  // namespace

BucketPartition bucketize(const Tree& tree, int k) {
  if (k < 1) throw PartitionError("bucket size must be positive");
  if (tree.size() % static_cast<std::size_t>(k) != 0) {
    throw PartitionError(std::to_string(tree.size()) + " nodes cannot fill buckets of " +
                         std::to_string(k));
  }
  const RootedTree rt(tree);
  const int n = static_cast<int>(rt.size());

  // Candidates are nodes with N(v) >= k all of whose children have N < k. They are
  // never nested, so N of a candidate changes only while it is being emptied, and the
  // global minimum of N over {N >= k} is always the minimum over candidates.
  std::vector<char> removed(n, 0);
  std::vector<int> heavy_children(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int c : rt.children(i)) {
      if (rt.subtree_size(c) >= k) ++heavy_children[i];
    }
  }
  std::vector<std::vector<int>> pool(n);
  std::vector<std::size_t> pool_front(n, 0);
  using Entry = std::pair<int, int>;  // (N, node); node order is id order
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> candidates;
  for (int i = 0; i < n; ++i) {
    if (heavy_children[i] == 0 && rt.subtree_size(i) >= k) {
      pool[i] = gather_remaining(rt, i, removed);
      candidates.emplace(static_cast<int>(pool[i].size()), i);
    }
  }

  BucketPartition result;
  result.k = k;
  std::vector<int> bucket_of(n, -1);
  std::vector<int> rep_index;
  while (!candidates.empty()) {
    const int v = candidates.top().second;
    candidates.pop();
    const int bucket = static_cast<int>(result.buckets.size());
    std::vector<PointId> members;
    for (int taken = 0; taken < k; ++taken) {
      const int leaf = pool[v][pool_front[v]++];
      removed[leaf] = 1;
      bucket_of[leaf] = bucket;
      members.push_back(rt.id(leaf));
    }
    result.buckets.push_back(std::move(members));
    rep_index.push_back(v);

    const int remaining = static_cast<int>(pool[v].size() - pool_front[v]);
    if (remaining >= k) {
      candidates.emplace(remaining, v);
      continue;
    }
    pool[v].clear();
    // v turned light; its ancestors may now qualify.
    for (int x = rt.parent(v); x >= 0; x = rt.parent(x)) {
      if (--heavy_children[x] > 0) break;
      std::vector<int> gathered = gather_remaining(rt, x, removed);
      if (static_cast<int>(gathered.size()) >= k) {
        candidates.emplace(static_cast<int>(gathered.size()), x);
        pool[x] = std::move(gathered);
        break;
      }
    }
  }
  if (std::find(removed.begin(), removed.end(), 0) != removed.end()) {
    throw InvariantViolation("bucketization left nodes unassigned");
  }

  const std::size_t count = result.buckets.size();
  result.representative.resize(count);
  result.parent_bucket.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    const int v = rep_index[j];
    result.representative[j] = rt.id(v);
    if (bucket_of[v] != static_cast<int>(j)) {
      result.parent_bucket[j] = bucket_of[v];
    } else {
      result.parent_bucket[j] = rt.parent(v) >= 0 ? bucket_of[rt.parent(v)] : -1;
    }
  }
  return result;
}

DisjointForest disjoint_trees_from_tree(const Tree& spanning, const TuplePartition& tuples) {
  const int k = tuples.k();
  if (spanning.size() != tuples.point_count() || spanning.nodes().front() != 0 ||
      spanning.nodes().back() != static_cast<PointId>(tuples.point_count()) - 1) {
    throw PartitionError("tree nodes are not the tuples' points");
  }
  BucketPartition buckets = bucketize(spanning, k);
  Labeling labeling = konig_labeling(tuples.tuples(), buckets.buckets, k);

  const std::size_t count = buckets.buckets.size();
  // point_with[j][c]: the point of bucket j carrying label c+1.
  std::vector<std::vector<PointId>> point_with(count, std::vector<PointId>(k, -1));
  for (std::size_t j = 0; j < count; ++j) {
    for (PointId p : buckets.buckets[j]) point_with[j][labeling.label(p) - 1] = p;
  }

  std::vector<Tree> trees;
  trees.reserve(k);
  const std::size_t last = count - 1;
  for (int c = 0; c < k; ++c) {
    std::vector<PointId> nodes;
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < count; ++j) {
      nodes.push_back(point_with[j][c]);
      if (buckets.parent_bucket[j] >= 0) {
        edges.push_back({point_with[j][c], point_with[buckets.parent_bucket[j]][c]});
      }
    }
    trees.emplace_back(std::move(nodes), std::move(edges), point_with[last][c]);
  }
  return {Forest(std::move(trees)), std::move(buckets), std::move(labeling)};
}

DbstResult solve_dbst(const MetricInstance& instance, const TuplePartition& tuples) {
  if (instance.size() != tuples.point_count()) {
    throw PartitionError("instance has " + std::to_string(instance.size()) + " points but " +
                         std::to_string(tuples.count()) + " tuples of " +
                         std::to_string(tuples.k()) + " need " +
                         std::to_string(tuples.point_count()));
  }
  Tree mst = minimum_spanning_tree(instance);
  const double mst_bottleneck = bottleneck(mst, instance);

  if (tuples.k() == 2 && !mst.edges().empty()) {
    const WeightedEdge cut = longest_edge(mst, instance);
    auto [first, second] = split_at_edge(mst, cut.edge);
    const bool separates_all = std::all_of(
        tuples.tuples().begin(), tuples.tuples().end(),
        [&](const std::vector<PointId>& t) { return first.contains(t[0]) != first.contains(t[1]); });
    if (separates_all) {
      Forest forest({std::move(first), std::move(second)});
      const double achieved = bottleneck(forest, instance);
      return {std::move(forest), achieved, mst_bottleneck, true, std::move(mst), std::nullopt,
              std::nullopt};
    }
  }

  const Tree rooted = mst.rooted_at(lowest_leaf(mst));
  DisjointForest core = disjoint_trees_from_tree(rooted, tuples);
  const double achieved = bottleneck(core.forest, instance);
  return {std::move(core.forest), achieved,           mst_bottleneck,
          false,                  std::move(mst),     std::move(core.buckets),
          std::move(core.labeling)};
}

}  // namespace bst
