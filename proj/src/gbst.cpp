#include "bst/gbst.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "bst/errors.hpp"

namespace bst {

namespace {

void require_pairs(const ClusterPartition& clusters) {
  for (const auto& c : clusters.clusters()) {
    if (c.size() > 2) throw PartitionError("2-GBST needs clusters of size at most two");
  }
}

// Union-find that tracks how many distinct clusters each component touches.
class CoverageSets {
 public:
  CoverageSets(std::size_t n, std::vector<int> twin)
      : parent_(n), members_(n), covered_(n, 1), twin_(std::move(twin)) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (std::size_t i = 0; i < n; ++i) members_[i] = {static_cast<int>(i)};
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the merged root, or -1 when a and b were already joined.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (members_[a].size() < members_[b].size()) std::swap(a, b);
    int shared = 0;
    for (int p : members_[b]) {
      if (twin_[p] >= 0 && find(twin_[p]) == a) ++shared;
    }
    covered_[a] += covered_[b] - shared;
    members_[a].insert(members_[a].end(), members_[b].begin(), members_[b].end());
    members_[b].clear();
    parent_[b] = a;
    return a;
  }

  int covered(int root) const { return covered_[root]; }
  const std::vector<int>& members(int root) const { return members_[root]; }

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> members_;
  std::vector<int> covered_;
  std::vector<int> twin_;
};

}  // namespace

NodeStatus NodeSelection::status_of(PointId p) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
  if (it == nodes.end() || *it != p) {
    throw IdentifierError("node " + std::to_string(p) + " is not in T1");
  }
  return status[it - nodes.begin()];
}

std::vector<PointId> NodeSelection::selected() const {
  std::vector<PointId> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (status[i] == NodeStatus::selected) out.push_back(nodes[i]);
  }
  return out;
}

Tree build_t1(const MetricInstance& instance, const ClusterPartition& clusters) {
  require_pairs(clusters);
  const std::size_t n = instance.size();
  if (clusters.point_count() != n) {
    throw PartitionError("clusters cover " + std::to_string(clusters.point_count()) +
                         " points, instance has " + std::to_string(n));
  }
  const int m = static_cast<int>(clusters.count());
  if (m == 1) return Tree(PointId{0});

  std::vector<int> twin(n, -1);
  for (const auto& c : clusters.clusters()) {
    if (c.size() == 2) {
      twin[c[0]] = c[1];
      twin[c[1]] = c[0];
    }
  }

  struct Candidate {
    double length;
    PointId u, v;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      candidates.push_back({instance.distance(static_cast<PointId>(u), static_cast<PointId>(v)),
                            static_cast<PointId>(u), static_cast<PointId>(v)});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.length, a.u, a.v) < std::tie(b.length, b.u, b.v);
  });

  CoverageSets sets(n, std::move(twin));
  std::vector<Edge> forest_edges;
  for (const Candidate& c : candidates) {
    const int root = sets.unite(c.u, c.v);
    if (root < 0) continue;
    forest_edges.push_back({c.u, c.v});
    if (sets.covered(root) == m) {
      std::vector<PointId> nodes(sets.members(root).begin(), sets.members(root).end());
      std::vector<Edge> edges;
      for (const Edge& e : forest_edges) {
        if (sets.find(e.u) == root) edges.push_back(e);
      }
      std::sort(edges.begin(), edges.end());
      return Tree(std::move(nodes), std::move(edges));
    }
  }
  throw InvariantViolation("no component covers every cluster");
}

PointId selection_root(const Tree& t1, const ClusterPartition& clusters) {
  const std::vector<int> owner = clusters.cluster_of();
  for (PointId p : t1.nodes()) {
    if (p < 0 || static_cast<std::size_t>(p) >= owner.size()) {
      throw PartitionError("T1 node " + std::to_string(p) + " belongs to no cluster");
    }
    const auto& c = clusters.clusters()[owner[p]];
    const auto in_tree = std::count_if(c.begin(), c.end(), [&](PointId q) { return t1.contains(q); });
    if (in_tree == 1) return p;
  }
  return t1.nodes().front();
}

NodeSelection select_nodes(const Tree& t1, const ClusterPartition& clusters) {
  require_pairs(clusters);
  const RootedTree rt(t1, t1.root() ? *t1.root() : selection_root(t1, clusters));
  const int n = static_cast<int>(rt.size());

  std::vector<int> twin(n, -1);
  std::vector<char> alone(n, 0);
  for (const auto& c : clusters.clusters()) {
    std::vector<int> inside;
    for (PointId p : c) {
      if (t1.contains(p)) inside.push_back(t1.index_of(p));
    }
    if (inside.empty()) {
      throw InfeasibleError("cluster containing point " + std::to_string(c.front()) +
                            " has no node in T1");
    }
    if (inside.size() == 1) {
      alone[inside[0]] = 1;
    } else {
      twin[inside[0]] = inside[1];
      twin[inside[1]] = inside[0];
    }
  }
  // A node of T1 outside every cluster would be left open.
  for (int i = 0; i < n; ++i) {
    if (!alone[i] && twin[i] < 0) {
      throw PartitionError("T1 node " + std::to_string(rt.id(i)) + " belongs to no cluster");
    }
  }

  NodeSelection sel;
  sel.root = rt.id(rt.root());
  sel.nodes = t1.nodes();
  sel.status.assign(n, NodeStatus::open);
  sel.selected_after_burn.assign(n, std::nullopt);
  for (int i = 0; i < n; ++i) {
    if (alone[i]) {
      sel.status[i] = NodeStatus::selected;
      sel.visit_order.push_back(rt.id(i));
    }
  }

  auto is_open = [&](int i) { return sel.status[i] == NodeStatus::open; };
  int scan = 0;  // every node below `scan` has been visited
  int next = is_open(rt.root()) ? rt.root() : -1;
  while (true) {
    if (next < 0) {
      while (scan < n && !is_open(scan)) ++scan;
      if (scan == n) break;
      next = scan;
    }
    const int chosen = next;
    const int burned = twin[chosen];
    sel.status[chosen] = NodeStatus::selected;
    sel.status[burned] = NodeStatus::burned;
    sel.visit_order.push_back(rt.id(chosen));
    sel.visit_order.push_back(rt.id(burned));

    next = -1;
    const int up = rt.parent(burned);
    if (up >= 0 && is_open(up)) {
      next = up;
    } else {
      for (int c : rt.children(burned)) {
        if (is_open(c)) {
          next = c;
          break;
        }
      }
    }
    if (next >= 0) sel.selected_after_burn[burned] = rt.id(next);
  }
  return sel;
}

Tree build_t2(const Tree& t1, const NodeSelection& selection) {
  if (selection.nodes != t1.nodes()) throw PreconditionError("selection was made on another tree");
  const RootedTree rt(t1, selection.root);
  auto selected = [&](int i) { return selection.status[i] == NodeStatus::selected; };
  if (!selected(rt.root())) throw PreconditionError("the root of T1 is not selected");

  std::vector<PointId> nodes;
  std::vector<Edge> edges;
  for (int a = 0; a < static_cast<int>(rt.size()); ++a) {
    if (!selected(a)) continue;
    nodes.push_back(rt.id(a));
    if (a == rt.root()) continue;
    int b = -1;
    const int a1 = rt.parent(a);
    if (selected(a1)) {
      b = a1;
    } else {
      const int a2 = rt.parent(a1);
      if (a2 >= 0 && selected(a2)) {
        b = a2;
      } else if (a2 >= 0) {
        const int a3 = rt.parent(a2);
        if (a3 >= 0 && selected(a3)) {
          b = a3;
        } else if (const auto after = selection.selected_after_burn[a2]) {
          const int c = rt.index_of(*after);
          if (rt.parent(c) == a2 && selected(c)) b = c;
        }
      }
    }
    if (b < 0) {
      throw InvariantViolation("no selected node within three hops above " +
                               std::to_string(rt.id(a)));
    }
    edges.push_back({rt.id(a), rt.id(b)});
  }
  return Tree(std::move(nodes), std::move(edges), rt.id(rt.root()));
}

GbstResult solve_2gbst(const MetricInstance& instance, const ClusterPartition& clusters) {
  Tree t1 = build_t1(instance, clusters);
  t1 = t1.rooted_at(selection_root(t1, clusters));
  NodeSelection selection = select_nodes(t1, clusters);
  Tree t2 = build_t2(t1, selection);
  const double achieved = bottleneck(t2, instance);
  const double t1_bottleneck = bottleneck(t1, instance);
  return {std::move(t2), achieved, std::move(t1), t1_bottleneck, std::move(selection)};
}

}  // namespace bst
