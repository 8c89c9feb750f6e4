#pragma once

#include <string>
#include <vector>

#include "bst/metric.hpp"

namespace bst {

using Groups = std::vector<std::vector<PointId>>;

/// Maximum matching in a bipartite graph (Hopcroft-Karp). `adjacency[l]` lists the
/// right vertices adjacent to left vertex l. Returns, for every left vertex, its
/// matched right vertex or -1.
std::vector<int> maximum_bipartite_matching(int right_count,
                                            const std::vector<std::vector<int>>& adjacency);

/// A complete system of representatives for two partitions A and B of the same
/// set into n groups of k: representative[i] lies in A[i] and in B[permutation[i]].
/// Group indices are 0-based.
struct RepresentativeSystem {
  std::vector<PointId> representative;
  std::vector<int> permutation;
};

/// Matches A-groups to B-groups through their intersections and takes the lowest
/// id of each matched intersection. Throws PartitionError unless A and B are two
/// partitions of one universe into equally many groups of one common size.
RepresentativeSystem representatives(const Groups& a_groups, const Groups& b_groups);

/// Labels 1..k per point id; 0 marks ids outside the labelled universe.
struct Labeling {
  int k = 0;
  std::vector<int> labels;

  int label(PointId p) const {
    return p >= 0 && static_cast<std::size_t>(p) < labels.size() ? labels[p] : 0;
  }
};

/// Labels every element with one of k labels so that every group of A and every
/// group of B carries each label exactly once: k-1 rounds of representatives, the
/// round-r system getting label r, and the last remaining element of each group
/// label k.
Labeling konig_labeling(const Groups& a_groups, const Groups& b_groups, int k);

/// Empty when `labeling` gives every group of A and of B all k labels; otherwise a
/// description of the first offending group.
std::string labeling_defect(const Labeling& labeling, const Groups& a_groups,
                            const Groups& b_groups);

}  // namespace bst
