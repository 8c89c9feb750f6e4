#include "bst/tree.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "bst/errors.hpp"

namespace bst {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

int position_in(const std::vector<PointId>& sorted, PointId p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
  if (it == sorted.end() || *it != p) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

Tree::Tree(PointId node) : nodes_{node} {}

Tree::Tree(std::vector<PointId> nodes, std::vector<Edge> edges, std::optional<PointId> root)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), root_(root) {
  if (nodes_.empty()) throw DomainError("tree has no nodes");
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw DomainError("tree lists a node twice");
  }
  if (edges_.size() + 1 != nodes_.size()) {
    throw DomainError("tree with " + std::to_string(nodes_.size()) + " nodes has " +
                      std::to_string(edges_.size()) + " edges");
  }
  DisjointSets sets(nodes_.size());
  for (const Edge& e : edges_) {
    const int a = position_in(nodes_, e.u);
    const int b = position_in(nodes_, e.v);
    if (a < 0 || b < 0) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") leaves the node set");
    }
    if (!sets.unite(a, b)) throw DomainError("edges contain a cycle");
  }
  if (root_ && position_in(nodes_, *root_) < 0) throw DomainError("root is not a tree node");
}

bool Tree::contains(PointId p) const { return position_in(nodes_, p) >= 0; }

int Tree::index_of(PointId p) const {
  const int i = position_in(nodes_, p);
  if (i < 0) throw IdentifierError("node " + std::to_string(p) + " is not in the tree");
  return i;
}

Tree Tree::rooted_at(PointId root) const {
  Tree copy = *this;
  index_of(root);
  copy.root_ = root;
  return copy;
}

std::vector<std::vector<int>> Tree::adjacency() const {
  std::vector<std::vector<int>> adj(nodes_.size());
  for (const Edge& e : edges_) {
    const int a = position_in(nodes_, e.u);
    const int b = position_in(nodes_, e.v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::vector<PointId> all;
  for (const Tree& t : trees_) all.insert(all.end(), t.nodes().begin(), t.nodes().end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw PartitionError("forest trees share a node");
  }
}

RootedTree::RootedTree(const Tree& tree) : RootedTree(tree, tree.root().value_or(lowest_leaf(tree))) {}

RootedTree::RootedTree(const Tree& tree, PointId root) : ids_(tree.nodes()) {
  root_ = tree.index_of(root);
  const std::size_t n = ids_.size();
  const auto adj = tree.adjacency();
  parent_.assign(n, -1);
  depth_.assign(n, 0);
  subtree_size_.assign(n, 1);
  child_begin_.assign(n + 1, 0);
  preorder_.reserve(n);

  // Iterative DFS so that deep trees do not exhaust the stack.
  std::vector<int> stack{root_};
  std::vector<char> seen(n, 0);
  seen[root_] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    preorder_.push_back(x);
    for (auto it = adj[x].rbegin(); it != adj[x].rend(); ++it) {
      if (seen[*it]) continue;
      seen[*it] = 1;
      parent_[*it] = x;
      depth_[*it] = depth_[x] + 1;
      stack.push_back(*it);
    }
  }
  child_list_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c : adj[i]) {
      if (c != parent_[i]) child_list_.push_back(c);
    }
    child_begin_[i + 1] = static_cast<int>(child_list_.size());
  }
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    if (parent_[*it] >= 0) subtree_size_[parent_[*it]] += subtree_size_[*it];
  }
}

int RootedTree::index_of(PointId p) const {
  const int i = position_in(ids_, p);
  if (i < 0) throw IdentifierError("node " + std::to_string(p) + " is not in the tree");
  return i;
}

HopMetric::HopMetric(const Tree& tree) : rooted_(tree, tree.nodes().front()) {
  const std::size_t n = rooted_.size();
  const int levels = std::max(1, static_cast<int>(std::bit_width(n)));
  up_.assign(levels, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const int p = rooted_.parent(static_cast<int>(i));
    up_[0][i] = p < 0 ? static_cast<int>(i) : p;
  }
  for (int j = 1; j < levels; ++j) {
    for (std::size_t i = 0; i < n; ++i) up_[j][i] = up_[j - 1][up_[j - 1][i]];
  }
}

int HopMetric::hops(PointId u, PointId v) const {
  int a = rooted_.index_of(u);
  int b = rooted_.index_of(v);
  const int da = rooted_.depth(a);
  const int db = rooted_.depth(b);
  if (da < db) std::swap(a, b);
  int diff = std::abs(da - db);
  for (int j = 0; diff > 0; ++j, diff >>= 1) {
    if (diff & 1) a = up_[j][a];
  }
  if (a != b) {
    for (int j = static_cast<int>(up_.size()) - 1; j >= 0; --j) {
      if (up_[j][a] != up_[j][b]) {
        a = up_[j][a];
        b = up_[j][b];
      }
    }
    a = up_[0][a];
  }
  return da + db - 2 * rooted_.depth(a);
}

PointId lowest_leaf(const Tree& tree) {
  std::vector<int> degree(tree.size(), 0);
  for (const Edge& e : tree.edges()) {
    ++degree[tree.index_of(e.u)];
    ++degree[tree.index_of(e.v)];
  }
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (degree[i] <= 1) return tree.nodes()[i];
  }
  throw InvariantViolation("tree without a leaf");
}

Tree minimum_spanning_tree(const MetricInstance& instance, std::span<const PointId> subset) {
  if (subset.empty()) throw DomainError("minimum spanning tree of an empty subset");
  std::vector<PointId> nodes(subset.begin(), subset.end());
  for (PointId p : nodes) check_point(instance, p);
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw DomainError("subset lists a point twice");
  }
  const std::size_t n = nodes.size();

  struct Candidate {
    double length;
    int a, b;  // positions into nodes, a < b
  };
  std::vector<Candidate> candidates;
  candidates.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      candidates.push_back({instance.distance(nodes[a], nodes[b]), static_cast<int>(a),
                            static_cast<int>(b)});
    }
  }
  // Positions are ordered like ids, so (length, a, b) is the (length, u, v) order.
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.length, x.a, x.b) < std::tie(y.length, y.a, y.b);
  });

  DisjointSets sets(n);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (const Candidate& c : candidates) {
    if (sets.unite(c.a, c.b)) {
      edges.push_back({nodes[c.a], nodes[c.b]});
      if (edges.size() + 1 == n) break;
    }
  }
  std::sort(edges.begin(), edges.end());
  return Tree(std::move(nodes), std::move(edges));
}

Tree minimum_spanning_tree(const MetricInstance& instance) {
  std::vector<PointId> all(instance.size());
  std::iota(all.begin(), all.end(), 0);
  return minimum_spanning_tree(instance, all);
}

WeightedEdge longest_edge(const Tree& tree, const MetricInstance& instance) {
  if (tree.edges().empty()) throw DomainError("longest edge of a single-node tree");
  WeightedEdge best{tree.edges().front(), instance.distance(tree.edges().front().u,
                                                            tree.edges().front().v)};
  for (const Edge& e : tree.edges()) {
    const double d = instance.distance(e.u, e.v);
    if (d > best.length) best = {e, d};
  }
  return best;
}

double bottleneck(const Tree& tree, const MetricInstance& instance) {
  double worst = 0.0;
  for (const Edge& e : tree.edges()) worst = std::max(worst, instance.distance(e.u, e.v));
  return worst;
}

double bottleneck(const Forest& forest, const MetricInstance& instance) {
  double worst = 0.0;
  for (const Tree& t : forest.trees()) worst = std::max(worst, bottleneck(t, instance));
  return worst;
}

int hop_distance(const Tree& tree, PointId u, PointId v) {
  const int from = tree.index_of(u);
  const int to = tree.index_of(v);
  if (from == to) return 0;
  const auto adj = tree.adjacency();
  std::vector<int> dist(tree.size(), -1);
  std::queue<int> queue;
  dist[from] = 0;
  queue.push(from);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int y : adj[x]) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == to) return dist[y];
      queue.push(y);
    }
  }
  throw InvariantViolation("tree is disconnected");
}

std::pair<Tree, Tree> split_at_edge(const Tree& tree, Edge cut) {
  const Edge key = cut.normalized();
  auto is_cut = [&](const Edge& e) { return e.normalized() == key; };
  if (std::none_of(tree.edges().begin(), tree.edges().end(), is_cut)) {
    throw PreconditionError("(" + std::to_string(cut.u) + "," + std::to_string(cut.v) +
                            ") is not a tree edge");
  }
  const auto adj = tree.adjacency();
  const int a = tree.index_of(cut.u);
  const int b = tree.index_of(cut.v);
  std::vector<char> side(tree.size(), 0);
  std::vector<int> stack{a};
  side[a] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (side[y] || (x == a && y == b)) continue;
      side[y] = 1;
      stack.push_back(y);
    }
  }
  std::vector<PointId> first_nodes, second_nodes;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    (side[i] ? first_nodes : second_nodes).push_back(tree.nodes()[i]);
  }
  std::vector<Edge> first_edges, second_edges;
  for (const Edge& e : tree.edges()) {
    if (is_cut(e)) continue;
    (side[tree.index_of(e.u)] ? first_edges : second_edges).push_back(e);
  }
  return {Tree(std::move(first_nodes), std::move(first_edges)),
          Tree(std::move(second_nodes), std::move(second_edges))};
}

Tree induced_subtree(const Tree& tree, std::span<const PointId> nodes) {
  std::vector<char> keep(tree.size(), 0);
  for (PointId p : nodes) keep[tree.index_of(p)] = 1;
  std::vector<Edge> edges;
  for (const Edge& e : tree.edges()) {
    if (keep[tree.index_of(e.u)] && keep[tree.index_of(e.v)]) edges.push_back(e);
  }
  return Tree(std::vector<PointId>(nodes.begin(), nodes.end()), std::move(edges));
}

std::vector<PointId> cube_hamiltonian_path(const Tree& tree, PointId u, PointId v) {
  const RootedTree rooted(tree, u);
  const int start = rooted.root();
  const int end = rooted.index_of(v);
  if (rooted.parent(end) != start) {
    throw PreconditionError("(" + std::to_string(u) + "," + std::to_string(v) +
                            ") is not a tree edge");
  }

  // Two interleaved traversals of the tree hung from u:
  //   down(x) = x, then up(c) for the children c of x in descending order;
  //   up(x)   = down(c) for the children c of x in ascending order, then x.
  // down(x) ends at x or a child of x and up(x) starts at x or a child of x, so
  // consecutive outputs are at most three hops apart. The top level is down(u)
  // with v moved to the end so that the ordering finishes at v.
  enum class Mode { down, up };
  struct Frame {
    int node;
    Mode mode;
    std::size_t next;
  };

  std::vector<int> top_order;
  const auto top_children = rooted.children(start);
  for (auto it = top_children.rbegin(); it != top_children.rend(); ++it) {
    if (*it != end) top_order.push_back(*it);
  }
  top_order.push_back(end);

  std::vector<PointId> order;
  order.reserve(tree.size());
  order.push_back(u);
  std::vector<Frame> stack;
  std::size_t top_next = 0;
  while (true) {
    if (stack.empty()) {
      if (top_next == top_order.size()) break;
      stack.push_back({top_order[top_next++], Mode::up, 0});
      continue;
    }
    Frame& f = stack.back();
    const auto kids = rooted.children(f.node);
    if (f.next == kids.size()) {
      if (f.mode == Mode::up) order.push_back(rooted.id(f.node));
      stack.pop_back();
      continue;
    }
    if (f.mode == Mode::down) {
      const int c = kids[kids.size() - 1 - f.next++];
      stack.push_back({c, Mode::up, 0});
    } else {
      const int c = kids[f.next++];
      order.push_back(rooted.id(c));
      stack.push_back({c, Mode::down, 0});
    }
  }
  return order;
}

std::vector<PointId> cube_hamiltonian_cycle(const Tree& tree) {
  if (tree.size() < 3) throw DomainError("a tour needs at least three nodes");
  const Edge first = std::min_element(tree.edges().begin(), tree.edges().end(),
                                      [](const Edge& a, const Edge& b) {
                                        return a.normalized() < b.normalized();
                                      })
                         ->normalized();
  return cube_hamiltonian_path(tree, first.u, first.v);
}

MetricInstance hop_metric_instance(const Tree& tree) {
  const std::size_t n = tree.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (tree.nodes()[i] != static_cast<PointId>(i)) {
      throw DomainError("hop metric needs the nodes to be exactly 0..n-1");
    }
  }
  const auto adj = tree.adjacency();
  DistanceMatrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<int> queue;
    dist[s] = 0;
    queue.push(static_cast<int>(s));
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      d[s][x] = dist[x];
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push(y);
        }
      }
    }
  }
  return MetricInstance::from_matrix(std::move(d), MetricInstance::Check::skip);
}

}  // namespace bst
