#include "bst/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "bst/errors.hpp"

namespace bst {

namespace {

// Relative slack for triangle checks on matrices written with rounded decimals.
constexpr double kTriangleSlack = 1e-12;

void check_disjoint_cover(const std::vector<std::vector<PointId>>& groups, std::size_t universe,
                          const char* what) {
  std::vector<char> seen(universe, 0);
  std::size_t total = 0;
  for (const auto& g : groups) {
    for (PointId p : g) {
      if (p < 0 || static_cast<std::size_t>(p) >= universe) {
        throw PartitionError(std::string(what) + ": point " + std::to_string(p) +
                             " outside 0.." + std::to_string(universe) + "-1");
      }
      if (seen[p]) {
        throw PartitionError(std::string(what) + ": point " + std::to_string(p) +
                             " appears twice");
      }
      seen[p] = 1;
      ++total;
    }
  }
  if (total != universe) {
    throw PartitionError(std::string(what) + ": groups do not cover every point");
  }
}

}  // namespace

MetricInstance MetricInstance::euclidean(Coordinates coordinates) {
  if (coordinates.empty()) throw DomainError("instance has no points");
  const std::size_t dim = coordinates.front().size();
  for (const auto& c : coordinates) {
    if (c.size() != dim) throw DomainError("coordinate sequences differ in dimension");
    for (double x : c) {
      if (!std::isfinite(x)) throw DomainError("non-finite coordinate");
    }
  }
  return MetricInstance(Kind::euclidean, std::move(coordinates));
}

MetricInstance MetricInstance::from_matrix(DistanceMatrix matrix, Check check) {
  if (matrix.empty()) throw DomainError("instance has no points");
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw DomainError("distance matrix is not square");
    for (double x : row) {
      if (!std::isfinite(x)) throw DomainError("non-finite distance");
    }
  }
  if (check == Check::eager) {
    MetricReport report = validate_metric(matrix);
    if (!report.ok()) throw MetricError("distance matrix is not a metric: " + report.summary());
  }
  return MetricInstance(Kind::matrix, std::move(matrix));
}

void check_point(const MetricInstance& instance, PointId p) {
  if (p < 0 || static_cast<std::size_t>(p) >= instance.size()) {
    throw IdentifierError("point id " + std::to_string(p) + " out of range [0," +
                          std::to_string(instance.size()) + ")");
  }
}

double MetricInstance::distance(PointId u, PointId v) const {
  check_point(*this, u);
  check_point(*this, v);
  return unchecked_distance(u, v);
}

double MetricInstance::unchecked_distance(PointId u, PointId v) const {
  if (kind_ == Kind::matrix) return data_[u][v];
  if (u == v) return 0.0;
  const auto& c = data_;
  double sum = 0.0;
  for (std::size_t i = 0; i < c[u].size(); ++i) {
    const double d = c[u][i] - c[v][i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

DistanceMatrix MetricInstance::distance_matrix() const {
  if (const auto* m = matrix()) return *m;
  DistanceMatrix d(size_, std::vector<double>(size_, 0.0));
  for (std::size_t u = 0; u < size_; ++u) {
    for (std::size_t v = u + 1; v < size_; ++v) {
      d[u][v] = d[v][u] = unchecked_distance(static_cast<PointId>(u), static_cast<PointId>(v));
    }
  }
  return d;
}

MetricInstance MetricInstance::restricted(std::span<const PointId> subset) const {
  for (PointId p : subset) check_point(*this, p);
  if (const auto* c = coordinates()) {
    Coordinates sub;
    sub.reserve(subset.size());
    for (PointId p : subset) sub.push_back((*c)[p]);
    return euclidean(std::move(sub));
  }
  const auto& m = *matrix();
  DistanceMatrix sub(subset.size(), std::vector<double>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) sub[i][j] = m[subset[i]][subset[j]];
  }
  return from_matrix(std::move(sub), Check::skip);
}

std::string MetricReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  const char* sep = "";
  if (!zero_diagonal) out << std::exchange(sep, "; ") << "non-zero diagonal";
  if (!symmetric) out << std::exchange(sep, "; ") << "asymmetric";
  if (!non_negative) out << std::exchange(sep, "; ") << "negative distance";
  if (!violations.empty()) {
    const auto& v = violations.front();
    out << sep << violations.size() << " triangle violation(s), first (" << v.u << "," << v.v
        << "," << v.w << "): " << v.direct << " > " << v.detour;
  }
  return out.str();
}

MetricReport validate_metric(const DistanceMatrix& m) {
  MetricReport report;
  const std::size_t n = m.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (m[u][u] != 0.0) report.zero_diagonal = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (m[u][v] < 0.0) report.non_negative = false;
      if (m[u][v] != m[v][u]) report.symmetric = false;
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const double detour = m[u][v] + m[v][w];
        if (m[u][w] > detour + kTriangleSlack * std::max(1.0, detour)) {
          report.violations.push_back({static_cast<PointId>(u), static_cast<PointId>(v),
                                       static_cast<PointId>(w), m[u][w], detour});
        }
      }
    }
  }
  return report;
}

MetricReport validate_metric(const MetricInstance& instance) {
  if (instance.is_euclidean()) return {};
  return validate_metric(*instance.matrix());
}

TuplePartition::TuplePartition(int k, std::vector<std::vector<PointId>> tuples)
    : k_(k), tuples_(std::move(tuples)) {
  if (k_ < 2) throw PartitionError("tuple size k must be at least 2");
  if (tuples_.empty()) throw PartitionError("no tuples");
  for (const auto& t : tuples_) {
    if (t.size() != static_cast<std::size_t>(k_)) {
      throw PartitionError("tuple of size " + std::to_string(t.size()) + ", expected " +
                           std::to_string(k_));
    }
  }
  check_disjoint_cover(tuples_, point_count(), "tuples");
}

ClusterPartition::ClusterPartition(int k, std::vector<std::vector<PointId>> clusters)
    : k_(k), clusters_(std::move(clusters)) {
  if (k_ < 1) throw PartitionError("cluster size bound must be positive");
  if (clusters_.empty()) throw PartitionError("no clusters");
  for (const auto& c : clusters_) {
    if (c.empty() || c.size() > static_cast<std::size_t>(k_)) {
      throw PartitionError("cluster of size " + std::to_string(c.size()) + " outside 1.." +
                           std::to_string(k_));
    }
    point_count_ += c.size();
  }
  check_disjoint_cover(clusters_, point_count_, "clusters");
}

std::vector<int> ClusterPartition::cluster_of() const {
  std::vector<int> owner(point_count_, -1);
  for (std::size_t i = 0; i < clusters_.size(); ++i) {
    for (PointId p : clusters_[i]) owner[p] = static_cast<int>(i);
  }
  return owner;
}

}  // namespace bst
