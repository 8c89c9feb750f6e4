#pragma once

#include <stdexcept>
#include <string>

namespace bst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or node identifier is out of range or not part of the structure.
class IdentifierError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation (empty subset, bad size, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a structure that violates its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Tuples, clusters or buckets do not form a valid partition.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// An explicit distance matrix is not a metric.
class MetricError : public Error {
 public:
  using Error::Error;
};

/// Some cluster has no node in the tree it must be selected from.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Input shape the algorithms deliberately do not handle (e.g. k-PBST with n < 3).
class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

/// An exact solver was asked for an instance above its enumeration cap.
class OracleSizeError : public Error {
 public:
  using Error::Error;
};

/// A tree too small to carry a genuine tour.
class DegenerateTourError : public Error {
 public:
  using Error::Error;
};

/// A file parsed but does not have the expected shape.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An internal guarantee of an algorithm did not hold. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bst
