#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sslab/enumerate.hpp"
#include "sslab/graph.hpp"
#include "sslab/partition.hpp"

namespace sslab {

inline constexpr int partition_exhaustive_limit = 14;
inline constexpr int partition_capacity = 20;

struct PartitionSearch {
  PartitionVec partition;  // normalized
  long internal = 0;       // sum of e(V_i)
  /// No second partition (up to relabeling classes) reaches the same minimum.
  bool unique = false;
};

/// Minimizes sum_i e(V_i) over partitions into exactly min(r, n) nonempty
/// classes (a max-r-cut). Classes are generated as restricted-growth strings,
/// so relabelings are never revisited; partial sums plus the cheapest class for
/// each remaining vertex bound the search.
PartitionSearch min_internal_partition(const Graph& g, int r);

/// Counts partitions into min(r, n) nonempty classes with every e(V_i) <= c0,
/// stopping at `limit`.
int count_low_internal_partitions(const Graph& g, int r, long c0, int limit = 2);

struct Check {
  std::string name;
  bool pass = false;
  double lhs = 0;
  double rhs = 0;
};

struct StabilityChain {
  double q = 0;
  bool balanced = false;        // balance_gap <= 1
  double c3_fit = 0;            // n (1 - min x) with max x = 1
  bool edges_equal_ex = false;  // e(g) = ex(n, F)
  bool member_of_ex = false;    // g in Ex(n, F)
};

struct StructureReport {
  PartitionVec partition;
  EdgeCounts counts;
  std::vector<long> cross_missing;  // per class pair, row-major i < j
  long e_in = 0;
  long e_out = 0;
  int balance_gap = 0;
  std::vector<VertexSet> a_sets;
  std::vector<VertexSet> b_sets;
  int max_out_degree = 0;
  double perron_min = 0;
  std::optional<long> c0;
  std::vector<Check> checks;
  std::optional<StabilityChain> stability;
};

/// G_in/G_out split of g along p: G_in keeps the edges inside classes, G_out
/// holds the missing cross pairs. With c0 given, evaluates the structural
/// inequalities against it.
StructureReport decompose(const Graph& g, const PartitionVec& p, std::optional<long> c0 = {});

struct PartiteSubgraph {
  Graph h0;
  long t = 0;  // t_p(n) - e(g)
  bool bound_ok = false;
};

/// h0 keeps the cross edges of an optimal p-partition of a K_{p+1}-free g.
PartiteSubgraph partite_subgraph(const Graph& g, int p);

/// |V_1 ∩ ... ∩ V_p| >= sum |V_i| - (p-1) |V_1 ∪ ... ∪ V_p|.
bool intersection_bound_check(const std::vector<VertexSet>& sets);

/// Structure of a spectral extremal graph: optimal chi(F)-1 partition,
/// balance, Perron minimum and membership in Ex(n, F).
StructureReport stability_chain(const Graph& g, const Graph& f, const ExtremalRecord& rec,
                                std::optional<long> c0 = {});

}  // namespace sslab
