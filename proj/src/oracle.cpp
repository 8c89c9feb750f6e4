#include "bst/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "bst/errors.hpp"

namespace bst {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void check_dbst_size(const TuplePartition& tuples, const char* what) {
  if (tuples.k() > kDbstOracleMaxK || tuples.count() > kDbstOracleMaxTuples) {
    throw OracleSizeError(std::string(what) + ": k=" + std::to_string(tuples.k()) + ", " +
                          std::to_string(tuples.count()) + " tuples exceeds k<=3, 6 tuples");
  }
}

void check_instance_covers(const MetricInstance& instance, std::size_t points) {
  if (instance.size() != points) {
    throw PartitionError("partition covers " + std::to_string(points) + " points, instance has " +
                         std::to_string(instance.size()));
  }
}

// Calls visit(groups) once per assignment of tuple members to groups, the first tuple
// fixed to the identity. groups[g] lists the member sent to group g by each tuple.
template <typename Visit>
void for_each_assignment(const TuplePartition& tuples, Visit&& visit) {
  const int k = tuples.k();
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t count = tuples.count();
  std::vector<std::size_t> digit(count, 0);
  std::vector<std::vector<PointId>> groups(k, std::vector<PointId>(count));
  while (true) {
    for (std::size_t t = 0; t < count; ++t) {
      for (int g = 0; g < k; ++g) groups[g][t] = tuples.tuples()[t][perms[digit[t]][g]];
    }
    visit(groups);
    std::size_t t = count;
    while (t > 1) {
      --t;
      if (++digit[t] < perms.size()) break;
      digit[t] = 0;
      if (t == 1) return;
    }
    if (count <= 1) return;
  }
}

Forest spanning_forest(const MetricInstance& instance,
                       const std::vector<std::vector<PointId>>& groups) {
  std::vector<Tree> trees;
  for (const auto& g : groups) trees.push_back(minimum_spanning_tree(instance, g));
  return Forest(std::move(trees));
}

}  // namespace

double group_bottleneck(const MetricInstance& instance, std::span<const PointId> subset) {
  const std::size_t n = subset.size();
  if (n < 2) return 0.0;
  std::vector<double> reach(n, kInfinity);
  std::vector<char> in(n, 0);
  reach[0] = 0.0;
  double worst = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in[i] && (best == n || reach[i] < reach[best])) best = i;
    }
    in[best] = 1;
    worst = std::max(worst, reach[best]);
    for (std::size_t i = 0; i < n; ++i) {
      if (!in[i]) reach[i] = std::min(reach[i], instance.distance(subset[best], subset[i]));
    }
  }
  return worst;
}

ForestOptimum exact_dbst(const MetricInstance& instance, const TuplePartition& tuples) {
  check_dbst_size(tuples, "exact_dbst");
  check_instance_covers(instance, tuples.point_count());
  double best = kInfinity;
  std::vector<std::vector<PointId>> winner;
  for_each_assignment(tuples, [&](const std::vector<std::vector<PointId>>& groups) {
    double worst = 0.0;
    for (const auto& g : groups) {
      worst = std::max(worst, group_bottleneck(instance, g));
      if (worst >= best) return;
    }
    best = worst;
    winner = groups;
  });
  return {spanning_forest(instance, winner), best};
}

TreeOptimum exact_gbst(const MetricInstance& instance, const ClusterPartition& clusters) {
  if (clusters.count() > kGbstOracleMaxClusters) {
    throw OracleSizeError("exact_gbst: " + std::to_string(clusters.count()) +
                          " clusters exceeds 12");
  }
  check_instance_covers(instance, clusters.point_count());
  const auto& cs = clusters.clusters();
  std::vector<std::size_t> digit(cs.size(), 0);
  std::vector<PointId> chosen(cs.size());
  double best = kInfinity;
  std::vector<PointId> winner;
  while (true) {
    for (std::size_t i = 0; i < cs.size(); ++i) chosen[i] = cs[i][digit[i]];
    const double b = group_bottleneck(instance, chosen);
    if (b < best) {
      best = b;
      winner = chosen;
    }
    std::size_t i = 0;
    for (; i < cs.size(); ++i) {
      if (++digit[i] < cs[i].size()) break;
      digit[i] = 0;
    }
    if (i == cs.size()) break;
  }
  return {minimum_spanning_tree(instance, winner), best};
}

std::uint64_t balanced_partition_count(std::size_t points, int k) {
  if (k < 1 || points % static_cast<std::size_t>(k) != 0) {
    throw PartitionError(std::to_string(points) + " points cannot form " + std::to_string(k) +
                         " equal groups");
  }
  const std::size_t n = points / static_cast<std::size_t>(k);
  constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int g = 0; g < k; ++g) {
    // The lowest remaining point anchors group g; choose its n-1 companions.
    const std::size_t pool = points - static_cast<std::size_t>(g) * n - 1;
    std::uint64_t c = 1;
    for (std::size_t i = 1; i < n; ++i) {
      c = c * (pool - n + 1 + i) / i;  // exact: c is C(pool-n+1+i, i) after each step
      if (c > kPbstPrunedCap) return kSaturated;
    }
    if (total > kSaturated / c) return kSaturated;
    total *= c;
  }
  return total;
}

namespace {

struct PbstSearch {
  const MetricInstance& instance;
  std::size_t n;
  bool prune;
  std::vector<char> used;
  std::vector<std::vector<PointId>> groups;
  std::vector<PointId> current;
  double best = kInfinity;
  std::vector<std::vector<PointId>> winner;

  void next_group(double worst) {
    const auto anchor = std::find(used.begin(), used.end(), 0);
    if (anchor == used.end()) {
      if (worst < best) {
        best = worst;
        winner = groups;
      }
      return;
    }
    const auto a = static_cast<PointId>(anchor - used.begin());
    used[a] = 1;
    current.assign(1, a);
    extend(a + 1, worst);
    used[a] = 0;
  }

  void extend(PointId from, double worst) {
    if (current.size() == n) {
      const double w = std::max(worst, group_bottleneck(instance, current));
      if (prune && w >= best) return;
      groups.push_back(current);
      const auto saved = current;
      next_group(w);
      current = saved;
      groups.pop_back();
      return;
    }
    const auto total = static_cast<PointId>(used.size());
    for (PointId p = from; p < total; ++p) {
      if (used[p]) continue;
      used[p] = 1;
      current.push_back(p);
      extend(p + 1, worst);
      current.pop_back();
      used[p] = 0;
    }
  }
};

}  // namespace

ForestOptimum exact_pbst(const MetricInstance& instance, int k, Search search) {
  const std::uint64_t count = balanced_partition_count(instance.size(), k);
  const std::uint64_t cap = search == Search::exhaustive ? kPbstExhaustiveCap : kPbstPrunedCap;
  if (count > cap) {
    throw OracleSizeError("exact_pbst: " + std::to_string(instance.size()) + " points into " +
                          std::to_string(k) + " groups exceeds " + std::to_string(cap) +
                          " partitions");
  }
  PbstSearch s{instance, instance.size() / static_cast<std::size_t>(k),
               search == Search::pruned, std::vector<char>(instance.size(), 0), {}, {}, kInfinity,
               {}};
  s.next_group(0.0);
  return {spanning_forest(instance, s.winner), s.best};
}

TourOptimum exact_bottleneck_tour(const MetricInstance& instance, std::span<const PointId> subset) {
  if (subset.size() > kTourOracleMaxPoints) {
    throw OracleSizeError("exact_bottleneck_tour: " + std::to_string(subset.size()) +
                          " points exceeds 9");
  }
  if (subset.empty()) throw DomainError("tour over no points");
  for (PointId p : subset) check_point(instance, p);
  Tour order(subset.begin(), subset.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
    throw DomainError("tour subset repeats a point");
  }
  if (order.size() <= 3) return {order, tour_bottleneck(order, instance)};

  double best = kInfinity;
  Tour winner;
  do {
    if (order[1] > order.back()) continue;  // the reverse cycle is tried instead
    const double b = tour_bottleneck(order, instance);
    if (b < best) {
      best = b;
      winner = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return {winner, best};
}

TourSet exact_disjoint_tours(const MetricInstance& instance, const TuplePartition& tuples) {
  check_dbst_size(tuples, "exact_disjoint_tours");
  check_instance_covers(instance, tuples.point_count());
  TourSet best{{}, kInfinity};
  for_each_assignment(tuples, [&](const std::vector<std::vector<PointId>>& groups) {
    TourSet candidate;
    for (const auto& g : groups) {
      TourOptimum t = exact_bottleneck_tour(instance, g);
      candidate.bottleneck = std::max(candidate.bottleneck, t.bottleneck);
      if (candidate.bottleneck >= best.bottleneck) return;
      candidate.tours.push_back(std::move(t.tour));
    }
    best = std::move(candidate);
  });
  return best;
}

}  // namespace bst
