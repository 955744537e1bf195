#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sslab/graph.hpp"
#include "sslab/partition.hpp"

namespace sslab {

inline constexpr int regular_pair_capacity = 14;
inline constexpr int regular_partition_search_limit = 10;

/// d(U, W) = e(U, W) / (|U| |W|) for disjoint nonempty u, w.
double density(const Graph& g, VertexSet u, VertexSet w);

/// Smallest qualifying subset size ceil(eps |U|), at least 1.
int qualifying_size(double eps, int size);

struct PairRegularity {
  bool regular = true;
  double pair_density = 0;
  double worst_deviation = 0;
  VertexSet worst_a;
  VertexSet worst_b;
};

/// Scans every A ⊆ U, B ⊆ W with |A| >= ceil(eps |U|), |B| >= ceil(eps |W|);
/// the pair is eps-regular iff no deviation |d(A,B) - d(U,W)| exceeds eps.
PairRegularity is_regular_pair(const Graph& g, VertexSet u, VertexSet w, double eps);

/// Sum of |V_i||V_j| over irregular pairs i < j, divided by n². Classes that
/// are empty are skipped.
double partition_irregularity(const Graph& g, const PartitionVec& parts, double eps);

struct PremiseRow {
  int fu = 0;
  int fv = 0;  // F-edge, or fu == fv for a class-size row
  std::string premise;
  bool pass = false;
  double value = 0;
  double threshold = 0;
};

struct CountingPremiseReport {
  std::vector<PremiseRow> rows;
  bool premises_hold = false;
  bool embedding_found = false;
  std::vector<int> embedding;  // F-vertex -> g-vertex when found
};

/// Checks pair regularity, the density threshold (Δ(F)+1) eps^{1/Δ(F)} on every
/// F-edge's class pair and |X_i| >= |V(F)| / eps, then searches for an
/// injective class-respecting copy of F. Throws lab_error if all premises hold
/// and no copy exists.
CountingPremiseReport counting_premise(const Graph& g, const std::vector<VertexSet>& classes, double eps,
                                       const Graph& f);

struct RegularPartitionSearch {
  int partitions_tried = 0;
  std::optional<PartitionVec> found;  // first eps-regular partition with exactly k classes
};

/// Diagnostic only: tries every partition of a graph on at most 10 vertices
/// into exactly k nonempty classes, in restricted-growth order.
RegularPartitionSearch find_regular_partition(const Graph& g, int k, double eps);

/// Class file: one line per class, space-separated vertex indices. Blank lines
/// and lines starting with '#' are skipped.
std::vector<VertexSet> read_class_file(std::istream& in);

}  // namespace sslab
