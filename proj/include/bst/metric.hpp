#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bst {

/// Points are identified by their index into the instance.
using PointId = std::int32_t;

using Coordinates = std::vector<std::vector<double>>;
using DistanceMatrix = std::vector<std::vector<double>>;

/// A finite metric space: either points in R^d with the Euclidean norm, or an
/// explicit symmetric distance matrix. Immutable after construction.
class MetricInstance {
 public:
  enum class Check { eager, skip };

  /// Throws DomainError when empty or when dimensions differ.
  static MetricInstance euclidean(Coordinates coordinates);

  /// With Check::eager (the default) the matrix must pass validate_metric,
  /// otherwise MetricError is thrown. Shape errors always throw DomainError.
  static MetricInstance from_matrix(DistanceMatrix matrix, Check check = Check::eager);

  std::size_t size() const noexcept { return size_; }
  bool is_euclidean() const noexcept { return kind_ == Kind::euclidean; }

  /// Throws IdentifierError for ids outside [0, size()).
  double distance(PointId u, PointId v) const;

  const Coordinates* coordinates() const noexcept { return is_euclidean() ? &data_ : nullptr; }
  const DistanceMatrix* matrix() const noexcept { return is_euclidean() ? nullptr : &data_; }

  /// The n x n matrix of all pairwise distances (computed for Euclidean instances).
  DistanceMatrix distance_matrix() const;

  /// Restriction to `subset`; point i of the result is subset[i] of this instance.
  MetricInstance restricted(std::span<const PointId> subset) const;

 private:
  enum class Kind { euclidean, matrix };

  MetricInstance(Kind kind, std::vector<std::vector<double>> data)
      : kind_(kind), size_(data.size()), data_(std::move(data)) {}

  double unchecked_distance(PointId u, PointId v) const;

  Kind kind_;
  std::size_t size_ = 0;
  std::vector<std::vector<double>> data_;  // coordinates or the distance matrix
};

struct TriangleViolation {
  PointId u, v, w;  // d(u,w) > d(u,v) + d(v,w)
  double direct;
  double detour;
};

struct MetricReport {
  bool zero_diagonal = true;
  bool symmetric = true;
  bool non_negative = true;
  std::vector<TriangleViolation> violations;

  bool ok() const { return zero_diagonal && symmetric && non_negative && violations.empty(); }
  std::string summary() const;
};

/// Checks every triple of an explicit matrix; Euclidean instances always pass.
MetricReport validate_metric(const MetricInstance& instance);
MetricReport validate_metric(const DistanceMatrix& matrix);

void check_point(const MetricInstance& instance, PointId p);

/// Exactly-k groups covering 0..kn-1 (the k-DBST input).
class TuplePartition {
 public:
  /// Throws PartitionError unless the groups are disjoint, all of size k and cover
  /// 0..k*n-1.
  TuplePartition(int k, std::vector<std::vector<PointId>> tuples);

  int k() const noexcept { return k_; }
  std::size_t count() const noexcept { return tuples_.size(); }
  const std::vector<std::vector<PointId>>& tuples() const noexcept { return tuples_; }
  std::size_t point_count() const noexcept { return tuples_.size() * static_cast<std::size_t>(k_); }

 private:
  int k_;
  std::vector<std::vector<PointId>> tuples_;
};

/// Groups of size 1..k covering 0..n-1 (the k-GBST input).
class ClusterPartition {
 public:
  ClusterPartition(int k, std::vector<std::vector<PointId>> clusters);

  int k() const noexcept { return k_; }
  std::size_t count() const noexcept { return clusters_.size(); }
  const std::vector<std::vector<PointId>>& clusters() const noexcept { return clusters_; }
  std::size_t point_count() const noexcept { return point_count_; }

  /// Index of the cluster holding each point, indexed by point id.
  std::vector<int> cluster_of() const;

 private:
  int k_;
  std::vector<std::vector<PointId>> clusters_;
  std::size_t point_count_ = 0;
};

}  // namespace bst
