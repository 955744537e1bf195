#pragma once

#include <span>
#include <vector>

#include "sslab/graph.hpp"

namespace sslab {

/// Assignment of vertices 0..n-1 to classes 0..r-1. Classes may be empty.
class PartitionVec {
public:
  PartitionVec() = default;
  /// Throws argument_error unless every entry lies in [0, r).
  PartitionVec(int r, std::vector<int> assignment);
  /// Throws argument_error unless the sets are disjoint and cover 0..n-1.
  static PartitionVec from_sets(int n, std::span<const VertexSet> classes);

  int classes() const { return r_; }
  int order() const { return static_cast<int>(assignment_.size()); }
  int class_of(int v) const { return assignment_[v]; }
  const std::vector<int>& assignment() const { return assignment_; }
  VertexSet members(int i) const { return sets_[i]; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  std::vector<int> sizes() const;
  /// max |n_i - n_j| over classes.
  int balance_gap() const;

  /// Same partition with classes renumbered by least member (empty classes last).
  PartitionVec normalized() const;

  friend bool operator==(const PartitionVec&, const PartitionVec&) = default;

private:
  int r_ = 0;
  std::vector<int> assignment_;
  std::vector<VertexSet> sets_;
};

/// Internal edges per class and present cross edges per unordered class pair.
struct EdgeCounts {
  int r = 0;
  std::vector<long> internal;
  /// Row-major over pairs i < j: (0,1),(0,2),...,(1,2),...
  std::vector<long> cross;

  long cross_at(int i, int j) const;
  long internal_total() const;
  long cross_total() const;
};

std::size_t pair_index(int r, int i, int j);

/// Tallies e(V_i) and e(V_i, V_j). Throws argument_error if parts does not cover g.
EdgeCounts edge_counts(const Graph& g, const PartitionVec& parts);

}  // namespace sslab
