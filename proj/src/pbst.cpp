#include "bst/pbst.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "bst/errors.hpp"

namespace bst {

namespace {

enum class Colour : char { red, blue };

std::vector<PointId> subtree_ids(const RootedTree& rt, int x) {
  std::vector<PointId> out;
  std::vector<int> stack{x};
  while (!stack.empty()) {
    const int y = stack.back();
    stack.pop_back();
    out.push_back(rt.id(y));
    for (int c : rt.children(y)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool holds(const std::vector<PointId>& sorted, PointId p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

std::vector<PointId> merged(std::vector<PointId> a, const std::vector<PointId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<PointId> without(const std::vector<PointId>& all, const std::vector<PointId>& drop) {
  std::vector<PointId> out;
  std::set_difference(all.begin(), all.end(), drop.begin(), drop.end(), std::back_inserter(out));
  return out;
}

// Edges of `tree` with both endpoints in `inside` and not both in `excluded`.
std::vector<Edge> edges_within(const Tree& tree, const std::vector<PointId>& inside,
                               const std::vector<PointId>& excluded = {}) {
  std::vector<Edge> out;
  for (const Edge& e : tree.edges()) {
    if (holds(inside, e.u) && holds(inside, e.v) &&
        !(holds(excluded, e.u) && holds(excluded, e.v))) {
      out.push_back(e);
    }
  }
  return out;
}

void append(std::vector<Edge>& to, const std::vector<Edge>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// Links consecutive roots; all of them are siblings in the source tree.
void chain(std::vector<Edge>& edges, const std::vector<PointId>& roots) {
  for (std::size_t i = 1; i < roots.size(); ++i) edges.push_back({roots[i - 1], roots[i]});
}

Tree subtree_tree(const Tree& tree, const RootedTree& rt, int x) {
  const auto nodes = subtree_ids(rt, x);
  return Tree(nodes, edges_within(tree, nodes), rt.id(x));
}

// U^x_c: the subtree of child c together with x, hung from x.
Tree child_with_parent(const Tree& tree, const RootedTree& rt, int x, int c) {
  auto nodes = subtree_ids(rt, c);
  nodes = merged(std::move(nodes), {rt.id(x)});
  return Tree(nodes, edges_within(tree, nodes), rt.id(x));
}

struct Carve {
  Tree piece;                      // exactly `size` nodes
  Tree rest;                       // everything else; still contains x
  Tree kept;                       // the part of U^x_j that stayed with x (rooted at x)
  std::vector<int> later_children; // children of x after u_j, untouched
};

// Takes the subtrees U_1..U_{j-1} of x's children (`first` leading, then ascending
// ids) plus a piece of U_j so that exactly `size` nodes are cut off. The piece of U_j
// and the part kept with x come from partition_two on U^x_j; the piece's roots are
// siblings and are chained.
Carve carve_children(const Tree& tree, const RootedTree& rt, int x, int size, int first) {
  std::vector<int> kids;
  if (first >= 0) kids.push_back(first);
  for (int c : rt.children(x)) {
    if (c != first) kids.push_back(c);
  }
  int before = 0;
  std::size_t j = 0;
  while (before + rt.subtree_size(kids[j]) < size) before += rt.subtree_size(kids[j++]);
  const int uj = kids[j];
  const int piece_from_uj = size - before;

  const Tree with_parent = child_with_parent(tree, rt, x, uj);
  const TwoWaySplit split = partition_two(with_parent, rt.subtree_size(uj) + 1 - piece_from_uj);

  std::vector<PointId> whole_children;
  std::vector<PointId> roots;
  for (std::size_t i = 0; i < j; ++i) {
    whole_children = merged(std::move(whole_children), subtree_ids(rt, kids[i]));
    roots.push_back(rt.id(kids[i]));
  }
  roots.push_back(rt.id(uj));

  std::vector<Edge> piece_edges = edges_within(tree, whole_children);
  append(piece_edges, split.blue.edges());
  chain(piece_edges, roots);
  const auto piece_nodes = merged(whole_children, split.blue.nodes());

  const auto rest_nodes = without(tree.nodes(), piece_nodes);
  std::vector<Edge> rest_edges = edges_within(tree, rest_nodes, with_parent.nodes());
  append(rest_edges, split.red.edges());

  return {Tree(piece_nodes, std::move(piece_edges)),
          Tree(rest_nodes, std::move(rest_edges), tree.root()), split.red,
          std::vector<int>(kids.begin() + static_cast<std::ptrdiff_t>(j) + 1, kids.end())};
}

// Splits `tree` into the subtree of x and the remainder.
std::pair<Tree, Tree> cut_subtree(const Tree& tree, const RootedTree& rt, int x) {
  Tree below = subtree_tree(tree, rt, x);
  const auto rest_nodes = without(tree.nodes(), below.nodes());
  Tree rest(rest_nodes, edges_within(tree, rest_nodes));
  return {std::move(below), std::move(rest)};
}

int min_subtree_at_least(const RootedTree& rt, int size) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(rt.size()); ++i) {
    const int s = rt.subtree_size(i);
    if (s >= size && (best < 0 || s < rt.subtree_size(best))) best = i;
  }
  return best;
}

PointId leaf_root(const Tree& tree) {
  if (const auto r = tree.root()) {
    const auto adj = tree.adjacency();
    if (adj[tree.index_of(*r)].size() <= 1) return *r;
  }
  return lowest_leaf(tree);
}

bool is_path(const Tree& tree) {
  const auto adj = tree.adjacency();
  return std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() <= 2; });
}

}  // namespace

TwoWaySplit partition_two(const Tree& tree, int red_size) {
  const int total = static_cast<int>(tree.size());
  if (red_size < 1 || red_size > total - 1) {
    throw DomainError("red tree size " + std::to_string(red_size) + " outside 1.." +
                      std::to_string(total - 1));
  }
  const RootedTree rt(tree, leaf_root(tree));
  std::vector<Colour> colour(total);
  int reds = 0;
  for (int i = 0; i < total; ++i) {
    colour[i] = rt.depth(i) % 2 == 0 ? Colour::red : Colour::blue;
    if (colour[i] == Colour::red) ++reds;
  }

  // The surplus colour sheds its deepest nodes; those are always leaves of its tree.
  const Colour surplus = reds > red_size ? Colour::red : Colour::blue;
  int excess = reds > red_size ? reds - red_size : red_size - reds;
  std::vector<int> order;
  for (int i = 0; i < total; ++i) {
    if (colour[i] == surplus) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_tuple(-rt.depth(a), a) < std::make_tuple(-rt.depth(b), b);
  });
  const Colour other = surplus == Colour::red ? Colour::blue : Colour::red;
  for (int i = 0; excess > 0; ++i, --excess) colour[order[i]] = other;

  // Surplus colour keeps its grandparent edges; the other colour links to the nearer of
  // parent and grandparent sharing its colour.
  std::vector<PointId> nodes[2];
  std::vector<Edge> edges[2];
  const int blue_root = rt.children(rt.root()).front();
  for (int i = 0; i < total; ++i) {
    const int side = colour[i] == Colour::red ? 0 : 1;
    nodes[side].push_back(rt.id(i));
    if (i == rt.root() || i == blue_root) continue;
    const int p = rt.parent(i);
    const int g = rt.parent(p);
    int link = g;
    if (colour[i] != surplus && colour[p] == colour[i]) link = p;
    if (link < 0 || colour[link] != colour[i]) {
      throw InvariantViolation("no same-coloured parent or grandparent for " +
                               std::to_string(rt.id(i)));
    }
    edges[side].push_back({rt.id(i), rt.id(link)});
  }
  return {Tree(std::move(nodes[0]), std::move(edges[0]), rt.id(rt.root())),
          Tree(std::move(nodes[1]), std::move(edges[1]), rt.id(blue_root))};
}

Forest partition_three(const Tree& input) {
  if (input.size() % 3 != 0) {
    throw PartitionError(std::to_string(input.size()) + " nodes cannot form three equal trees");
  }
  const int n = static_cast<int>(input.size() / 3);
  const Tree tree = input.rooted_at(leaf_root(input));
  const RootedTree rt(tree);
  const int v = min_subtree_at_least(rt, n);
  const PointId v_id = rt.id(v);

  if (rt.subtree_size(v) == n) {
    auto [r, rest] = cut_subtree(tree, rt, v);
    TwoWaySplit gb = partition_two(rest, n);
    return Forest({std::move(r), std::move(gb.red), std::move(gb.blue)});
  }

  // R: children subtrees of v plus a piece of U_j; T''_j stays attached at v.
  Carve first = carve_children(tree, rt, v, n, -1);
  const Tree& remaining = first.rest;
  const RootedTree rt2(remaining);
  const int v2 = rt2.index_of(v_id);
  const int nv = rt2.subtree_size(v2);

  if (nv == n) {
    auto [g, b] = cut_subtree(remaining, rt2, v2);
    return Forest({std::move(first.piece), std::move(g), std::move(b)});
  }

  if (nv < n) {
    int toward = v2;
    int w = rt2.parent(v2);
    while (rt2.subtree_size(w) < n) {
      toward = w;
      w = rt2.parent(w);
    }
    if (rt2.subtree_size(w) == n) {
      auto [g, b] = cut_subtree(remaining, rt2, w);
      return Forest({std::move(first.piece), std::move(g), std::move(b)});
    }
    Carve second = carve_children(remaining, rt2, w, n, toward);
    return Forest({std::move(first.piece), std::move(second.piece), std::move(second.rest)});
  }

  // N(v) > n: G is T''_j, the next children subtrees of v and a piece T'_l of U^v_l
  // that shares v with T''_j; B takes T''_l, the remaining children and v's ancestors.
  const Tree& kept = first.kept;
  const auto& later = first.later_children;
  int g_size = static_cast<int>(kept.size());
  std::size_t l = 0;
  while (g_size + rt.subtree_size(later[l]) < n) g_size += rt.subtree_size(later[l++]);
  const int ul = later[l];
  const int share = n - g_size + 1;  // nodes of U^v_l given to G, v included

  const Tree with_parent = child_with_parent(tree, rt, v, ul);
  std::vector<PointId> g_nodes = kept.nodes();
  std::vector<Edge> g_edges = kept.edges();
  for (std::size_t i = 0; i < l; ++i) {
    const auto sub = subtree_ids(rt, later[i]);
    g_nodes = merged(std::move(g_nodes), sub);
    append(g_edges, edges_within(tree, sub));
    g_edges.push_back({rt.id(later[i]), v_id});
  }

  std::vector<PointId> b_roots;
  std::vector<Edge> b_extra;
  if (share == static_cast<int>(with_parent.size())) {
    g_nodes = merged(std::move(g_nodes), with_parent.nodes());
    append(g_edges, with_parent.edges());
  } else {
    const TwoWaySplit split = partition_two(with_parent, share);
    g_nodes = merged(std::move(g_nodes), split.red.nodes());
    append(g_edges, split.red.edges());
    b_roots.push_back(rt.id(ul));
    append(b_extra, split.blue.edges());
  }
  for (std::size_t i = l + 1; i < later.size(); ++i) b_roots.push_back(rt.id(later[i]));

  const auto b_nodes = without(remaining.nodes(), g_nodes);
  const auto ul_nodes = subtree_ids(rt, ul);
  std::vector<Edge> b_edges = edges_within(remaining, b_nodes, ul_nodes);
  append(b_edges, b_extra);
  chain(b_edges, b_roots);
  if (!b_roots.empty()) b_edges.push_back({b_roots.back(), rt.id(rt.parent(v))});

  return Forest({std::move(first.piece), Tree(std::move(g_nodes), std::move(g_edges)),
                 Tree(b_nodes, std::move(b_edges))});
}

Forest partition_many(const Tree& tree, int k) {
  if (k < 1) throw DomainError("need at least one piece");
  if (tree.size() % static_cast<std::size_t>(k) != 0) {
    throw PartitionError(std::to_string(tree.size()) + " nodes cannot form " + std::to_string(k) +
                         " equal trees");
  }
  std::vector<PointId> order;
  if (tree.size() == 1) {
    order = tree.nodes();
  } else if (is_path(tree)) {
    const auto adj = tree.adjacency();
    int previous = -1;
    int at = tree.index_of(lowest_leaf(tree));
    while (at >= 0) {
      order.push_back(tree.nodes()[at]);
      int next = -1;
      for (int y : adj[at]) {
        if (y != previous) next = y;
      }
      previous = at;
      at = next;
    }
  } else {
    const Edge first = std::min_element(tree.edges().begin(), tree.edges().end(),
                                        [](const Edge& a, const Edge& b) {
                                          return a.normalized() < b.normalized();
                                        })
                           ->normalized();
    order = cube_hamiltonian_path(tree, first.u, first.v);
  }

  const std::size_t n = tree.size() / static_cast<std::size_t>(k);
  std::vector<Tree> pieces;
  for (std::size_t start = 0; start < order.size(); start += n) {
    std::vector<PointId> nodes(order.begin() + static_cast<std::ptrdiff_t>(start),
                               order.begin() + static_cast<std::ptrdiff_t>(start + n));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < nodes.size(); ++i) edges.push_back({nodes[i - 1], nodes[i]});
    pieces.emplace_back(std::move(nodes), std::move(edges), order[start]);
  }
  return Forest(std::move(pieces));
}

Forest balanced_partition(const Tree& tree, int k) {
  if (k < 2) throw DomainError("balanced partition needs k >= 2");
  if (tree.size() % static_cast<std::size_t>(k) != 0) {
    throw PartitionError(std::to_string(tree.size()) + " nodes cannot form " + std::to_string(k) +
                         " equal trees");
  }
  if (k == 2) {
    TwoWaySplit split = partition_two(tree, static_cast<int>(tree.size() / 2));
    return Forest({std::move(split.red), std::move(split.blue)});
  }
  if (k == 3) return partition_three(tree);
  return partition_many(tree, k);
}

namespace {

void split_recursively(const Tree& tree, int count, std::size_t n, const MetricInstance& instance,
                       std::vector<Tree>& out, int& splits) {
  if (count == 1) {
    out.push_back(tree);
    return;
  }
  const WeightedEdge cut = longest_edge(tree, instance);
  auto [first, second] = split_at_edge(tree, cut.edge);
  if (first.size() % n == 0 && second.size() % n == 0) {
    ++splits;
    const int first_count = static_cast<int>(first.size() / n);
    split_recursively(first, first_count, n, instance, out, splits);
    split_recursively(second, count - first_count, n, instance, out, splits);
    return;
  }
  // Every feasible solution crosses this cut, so lambda(tree) is a lower bound.
  Forest parts = balanced_partition(tree, count);
  out.insert(out.end(), parts.trees().begin(), parts.trees().end());
}

}  // namespace

PbstResult solve_pbst(const MetricInstance& instance, int k) {
  if (k < 1 || instance.size() % static_cast<std::size_t>(k) != 0) {
    throw PartitionError(std::to_string(instance.size()) + " points cannot form " +
                         std::to_string(k) + " equal trees");
  }
  const std::size_t n = instance.size() / static_cast<std::size_t>(k);
  if (n < 3) {
    throw UnsupportedCaseError("trees of " + std::to_string(n) +
                               " points make this a bottleneck matching problem; use a "
                               "matching solver");
  }
  const Tree mst = minimum_spanning_tree(instance);
  std::vector<Tree> trees;
  int splits = 0;
  split_recursively(mst, k, n, instance, trees, splits);
  Forest forest(std::move(trees));
  const double achieved = bottleneck(forest, instance);
  return {std::move(forest), achieved, bottleneck(mst, instance), splits};
}

}  // namespace bst
