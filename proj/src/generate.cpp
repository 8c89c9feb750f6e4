#include "bst/generate.hpp"

#include <algorithm>
#include <numeric>

#include "bst/errors.hpp"
#include "bst/oracle.hpp"

namespace bst {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

std::vector<PointId> shuffled_ids(int points, Rng& rng) {
  std::vector<PointId> ids(points);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  return ids;
}

}  // namespace

MetricInstance euclidean_points(int dim, int points, Rng& rng) {
  require(dim >= 1, "dimension must be positive");
  require(points >= 1, "need at least one point");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Coordinates coords(points, std::vector<double>(dim));
  for (auto& c : coords) {
    for (double& x : c) x = unit(rng);
  }
  return MetricInstance::euclidean(std::move(coords));
}

MetricInstance random_metric(int points, Rng& rng) {
  require(points >= 1, "need at least one point");
  std::uniform_int_distribution<int> weight(1, 100);
  DistanceMatrix d(points, std::vector<double>(points, 0.0));
  for (int u = 0; u < points; ++u) {
    for (int v = u + 1; v < points; ++v) d[u][v] = d[v][u] = weight(rng);
  }
  for (int w = 0; w < points; ++w) {
    for (int u = 0; u < points; ++u) {
      for (int v = 0; v < points; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    }
  }
  return MetricInstance::from_matrix(std::move(d));
}

std::vector<std::vector<PointId>> random_tuples(int points, int k, Rng& rng) {
  require(k >= 1 && points % k == 0, std::to_string(points) + " points do not split into tuples of " +
                                         std::to_string(k));
  const auto ids = shuffled_ids(points, rng);
  std::vector<std::vector<PointId>> tuples;
  for (int i = 0; i < points; i += k) tuples.emplace_back(ids.begin() + i, ids.begin() + i + k);
  return tuples;
}

std::vector<std::vector<PointId>> random_clusters(int points, double singleton_rate, Rng& rng) {
  require(points >= 1, "need at least one point");
  require(singleton_rate >= 0.0 && singleton_rate <= 1.0, "singleton rate outside [0,1]");
  const auto ids = shuffled_ids(points, rng);
  std::bernoulli_distribution single(singleton_rate);
  std::vector<std::vector<PointId>> clusters;
  for (std::size_t i = 0; i < ids.size();) {
    if (i + 1 == ids.size() || single(rng)) {
      clusters.push_back({ids[i]});
      i += 1;
    } else {
      clusters.push_back({ids[i], ids[i + 1]});
      i += 2;
    }
  }
  return clusters;
}

Tree star_tree(int leaves) {
  require(leaves >= 1, "a star needs a leaf");
  std::vector<PointId> nodes(leaves + 1);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::vector<Edge> edges;
  for (PointId leaf = 1; leaf <= leaves; ++leaf) edges.push_back({0, leaf});
  return Tree(std::move(nodes), std::move(edges), 0);
}

Tree spider_tree(int k) {
  require(k >= 2, "a spider needs k >= 2");
  std::vector<PointId> nodes(k * k);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::vector<Edge> edges;
  for (int leg = 0; leg <= k; ++leg) {
    const PointId first = 1 + leg * (k - 1);
    edges.push_back({0, first});
    for (PointId p = first + 1; p < first + k - 1; ++p) edges.push_back({p - 1, p});
  }
  return Tree(std::move(nodes), std::move(edges), 0);
}

ProblemInput fixture_star(int leaves) {
  return {hop_metric_instance(star_tree(leaves)), std::nullopt, std::nullopt, std::nullopt};
}

ProblemInput fixture_spider(int k) {
  return {hop_metric_instance(spider_tree(k)), std::nullopt, std::nullopt, k};
}

ProblemInput fixture_gbst_path8() {
  // Line positions 0..7 carry clusters a b c b d c d e.
  Coordinates line;
  for (int i = 0; i < 8; ++i) line.push_back({static_cast<double>(i)});
  std::vector<std::vector<PointId>> clusters{{0}, {1, 3}, {2, 5}, {4, 6}, {7}};
  ProblemInput in{MetricInstance::euclidean(std::move(line)), std::nullopt, clusters, std::nullopt};
  const double optimum = exact_gbst(in.instance, ClusterPartition(2, clusters)).bottleneck;
  if (optimum != 3.0) {
    throw InvariantViolation("path fixture optimum is " + std::to_string(optimum) + ", not 3");
  }
  return in;
}

std::vector<std::string> generator_kinds() {
  return {"euclidean", "random-metric", "fixture-gbst-path8", "fixture-star", "fixture-spider"};
}

ProblemInput generate(const GenerateOptions& o) {
  if (o.kind == "fixture-gbst-path8") return fixture_gbst_path8();
  if (o.kind == "fixture-star") return fixture_star(o.leaves);
  if (o.kind == "fixture-spider") return fixture_spider(o.k);

  Rng rng(o.seed);
  ProblemInput in{o.kind == "euclidean"       ? euclidean_points(o.dim, o.points, rng)
                  : o.kind == "random-metric" ? random_metric(o.points, rng)
                                              : throw DomainError("unknown generator " + o.kind),
                  std::nullopt, std::nullopt, std::nullopt};
  switch (o.partition) {
    case PartitionKind::none:
      break;
    case PartitionKind::tuples:
      in.tuples = random_tuples(o.points, o.k, rng);
      in.k = o.k;
      break;
    case PartitionKind::clusters:
      in.clusters = random_clusters(o.points, o.singleton_rate, rng);
      break;
  }
  return in;
}

}  // namespace bst
