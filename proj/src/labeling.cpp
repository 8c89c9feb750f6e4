#include "bst/labeling.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "bst/errors.hpp"

namespace bst {

namespace {

constexpr int kUnmatched = -1;
constexpr int kInfinity = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(int right_count, const std::vector<std::vector<int>>& adjacency)
      : adj_(adjacency),
        match_left_(adjacency.size(), kUnmatched),
        match_right_(right_count, kUnmatched),
        layer_(adjacency.size(), kInfinity) {}

  std::vector<int> run() {
    while (layer_free_vertices()) {
      for (std::size_t l = 0; l < adj_.size(); ++l) {
        if (match_left_[l] == kUnmatched) augment(static_cast<int>(l));
      }
    }
    return match_left_;
  }

 private:
  bool layer_free_vertices() {
    std::queue<int> queue;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (match_left_[l] == kUnmatched) {
        layer_[l] = 0;
        queue.push(static_cast<int>(l));
      } else {
        layer_[l] = kInfinity;
      }
    }
    bool reachable_free_right = false;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop();
      for (int r : adj_[l]) {
        const int next = match_right_[r];
        if (next == kUnmatched) {
          reachable_free_right = true;
        } else if (layer_[next] == kInfinity) {
          layer_[next] = layer_[l] + 1;
          queue.push(next);
        }
      }
    }
    return reachable_free_right;
  }

  // Iterative layered DFS; each left vertex explores its edges at most once per phase.
  bool augment(int start) {
    struct Frame {
      int left;
      std::size_t next;
    };
    std::vector<Frame> path{{start, 0}};
    while (!path.empty()) {
      Frame& f = path.back();
      if (f.next == adj_[f.left].size()) {
        layer_[f.left] = kInfinity;
        path.pop_back();
        continue;
      }
      const int r = adj_[f.left][f.next++];
      const int next = match_right_[r];
      if (next == kUnmatched) {
        // Flip the alternating path.
        int right = r;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
          const int previous = match_left_[it->left];
          match_left_[it->left] = right;
          match_right_[right] = it->left;
          right = previous;
        }
        return true;
      }
      if (layer_[next] == layer_[f.left] + 1) path.push_back({next, 0});
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> layer_;
};

// Elements of the common universe with the A-group and B-group holding each.
struct DoublePartition {
  std::vector<PointId> elements;  // ascending
  std::vector<int> a_group;
  std::vector<int> b_group;
  std::size_t group_count = 0;
  std::size_t group_size = 0;
};

std::vector<int> owners(const Groups& groups, const std::vector<PointId>& elements,
                        const char* side) {
  std::vector<int> owner(elements.size(), -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (PointId p : groups[g]) {
      auto it = std::lower_bound(elements.begin(), elements.end(), p);
      if (it == elements.end() || *it != p) {
        throw PartitionError(std::string(side) + " partition has element " + std::to_string(p) +
                             " outside the other partition's universe");
      }
      int& slot = owner[it - elements.begin()];
      if (slot >= 0) {
        throw PartitionError(std::string(side) + " partition lists element " +
                             std::to_string(p) + " twice");
      }
      slot = static_cast<int>(g);
    }
  }
  return owner;
}

DoublePartition double_partition(const Groups& a_groups, const Groups& b_groups) {
  if (a_groups.empty()) throw PartitionError("no groups");
  if (a_groups.size() != b_groups.size()) {
    throw PartitionError("the two partitions have different group counts");
  }
  const std::size_t k = a_groups.front().size();
  if (k == 0) throw PartitionError("empty group");
  for (const auto* groups : {&a_groups, &b_groups}) {
    for (const auto& g : *groups) {
      if (g.size() != k) throw PartitionError("groups differ in size");
    }
  }
  DoublePartition dp;
  dp.group_count = a_groups.size();
  dp.group_size = k;
  for (const auto& g : a_groups) dp.elements.insert(dp.elements.end(), g.begin(), g.end());
  std::sort(dp.elements.begin(), dp.elements.end());
  if (std::adjacent_find(dp.elements.begin(), dp.elements.end()) != dp.elements.end()) {
    throw PartitionError("A partition lists an element twice");
  }
  dp.a_group = owners(a_groups, dp.elements, "A");
  dp.b_group = owners(b_groups, dp.elements, "B");
  return dp;
}

// One round: a system of representatives over the elements still `alive`.
RepresentativeSystem extract_system(const DoublePartition& dp, const std::vector<char>& alive) {
  const int n = static_cast<int>(dp.group_count);
  std::vector<std::vector<int>> adjacency(n);
  for (std::size_t e = 0; e < dp.elements.size(); ++e) {
    if (alive[e]) adjacency[dp.a_group[e]].push_back(dp.b_group[e]);
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  const std::vector<int> match = maximum_bipartite_matching(n, adjacency);
  if (std::find(match.begin(), match.end(), kUnmatched) != match.end()) {
    throw InvariantViolation("intersection graph of a double partition has no perfect matching");
  }
  RepresentativeSystem system{std::vector<PointId>(n, -1), match};
  for (std::size_t e = 0; e < dp.elements.size(); ++e) {
    const int a = dp.a_group[e];
    if (alive[e] && system.representative[a] < 0 && match[a] == dp.b_group[e]) {
      system.representative[a] = dp.elements[e];
    }
  }
  return system;
}

}  // namespace

std::vector<int> maximum_bipartite_matching(int right_count,
                                            const std::vector<std::vector<int>>& adjacency) {
  return HopcroftKarp(right_count, adjacency).run();
}

RepresentativeSystem representatives(const Groups& a_groups, const Groups& b_groups) {
  const DoublePartition dp = double_partition(a_groups, b_groups);
  return extract_system(dp, std::vector<char>(dp.elements.size(), 1));
}

Labeling konig_labeling(const Groups& a_groups, const Groups& b_groups, int k) {
  const DoublePartition dp = double_partition(a_groups, b_groups);
  if (k < 1 || dp.group_size != static_cast<std::size_t>(k)) {
    throw PartitionError("groups have size " + std::to_string(dp.group_size) + ", expected " +
                         std::to_string(k));
  }
  Labeling labeling{k, std::vector<int>(static_cast<std::size_t>(dp.elements.back()) + 1, 0)};
  std::vector<char> alive(dp.elements.size(), 1);
  auto position = [&](PointId p) {
    return std::lower_bound(dp.elements.begin(), dp.elements.end(), p) - dp.elements.begin();
  };

  for (int round = 1; round < k; ++round) {
    const RepresentativeSystem system = extract_system(dp, alive);
    std::vector<char> b_hit(dp.group_count, 0);
    for (std::size_t i = 0; i < dp.group_count; ++i) {
      const PointId r = system.representative[i];
      const auto e = position(r);
      if (b_hit[dp.b_group[e]]) throw InvariantViolation("two representatives share a B group");
      b_hit[dp.b_group[e]] = 1;
      labeling.labels[r] = round;
      alive[e] = 0;
    }
  }
  for (std::size_t e = 0; e < dp.elements.size(); ++e) {
    if (alive[e]) labeling.labels[dp.elements[e]] = k;
  }
  return labeling;
}

std::string labeling_defect(const Labeling& labeling, const Groups& a_groups,
                            const Groups& b_groups) {
  for (const auto* groups : {&a_groups, &b_groups}) {
    const char* side = groups == &a_groups ? "A" : "B";
    for (std::size_t g = 0; g < groups->size(); ++g) {
      const auto& group = (*groups)[g];
      if (group.size() != static_cast<std::size_t>(labeling.k)) {
        return std::string(side) + std::to_string(g) + " has " + std::to_string(group.size()) +
               " elements for " + std::to_string(labeling.k) + " labels";
      }
      std::vector<char> used(labeling.k + 1, 0);
      for (PointId p : group) {
        const int l = labeling.label(p);
        if (l < 1 || l > labeling.k || used[l]) {
          return std::string(side) + std::to_string(g) + " repeats or misses a label at element " +
                 std::to_string(p);
        }
        used[l] = 1;
      }
    }
  }
  return {};
}

}  // namespace bst
