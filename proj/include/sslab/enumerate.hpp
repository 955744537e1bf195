#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sslab/graph.hpp"

namespace sslab {

inline constexpr int enumeration_default_order = 10;
inline constexpr int enumeration_capacity = 12;

struct EnumerationOptions {
  /// Node expansions allowed before budget_exhausted is thrown.
  std::size_t budget = std::numeric_limits<std::size_t>::max();
  /// Worker threads sharing the augmentation subtrees; 1 runs inline.
  unsigned workers = 1;
  /// Orders above this need an explicit raise (hard cap enumeration_capacity).
  int max_order = enumeration_default_order;
};

using GraphVisitor = std::function<void(const Graph&)>;

/// Visits one canonical representative of every isomorphism class of F-free
/// graphs on n vertices. Vertices are added one at a time; a child survives
/// only if the new vertex lies in the orbit its canonical labeling designates
/// (a max-degree vertex of highest canonical position). Since F-freeness passes
/// to induced subgraphs, a child containing F is dropped with its whole subtree.
///
/// With several workers the visitor is serialized but called in no fixed order.
/// Returns the number of graphs visited.
std::size_t enumerate_ffree(int n, const Graph& f, const EnumerationOptions& opts, const GraphVisitor& visit);

/// All classes, sorted by graph6 of the canonical form.
std::vector<Graph> collect_ffree(int n, const Graph& f, const EnumerationOptions& opts = {});

struct GraphEntry {
  std::string graph6;  // canonical
  long edges = 0;
  double q = 0;
};

struct ExtremalRecord {
  int n = 0;
  std::string f_label;
  std::string f_graph6;  // canonical
  std::optional<int> f_chromatic;  // absent when F is beyond the colouring capacity
  std::size_t classes = 0;          // F-free classes on n vertices

  long ex = 0;  // -1 when no F-free graph exists
  std::vector<GraphEntry> ex_graphs;
  double ex_ssp = 0;
  std::vector<GraphEntry> ex_ssp_graphs;
  /// Within ssp_near_tie of ex_ssp but outside ssp_tie.
  std::vector<GraphEntry> near_ties;
  /// ex - t_r(n) with r = chi(F) - 1; absent when r < 1 or chi(F) is unknown.
  std::optional<long> c0_term;

  /// Proxy for the high-minimum-degree class: F-free graphs with
  /// min degree > (pi - eps) n, where pi = 1 - 1/r.
  double min_degree_eps = 0.1;
  std::size_t min_degree_count = 0;
  std::optional<double> min_degree_q;
};

inline constexpr double ssp_tie = 1e-9;
inline constexpr double ssp_near_tie = 1e-6;

struct RecordOptions {
  EnumerationOptions enumeration;
  double eps = 0.1;
  double tol = 1e-10;
};

/// Exact ex, Ex, ex_ssp and Ex_ssp for (n, F) from one pass over the F-free
/// stream. Listed graphs are re-checked for F-freeness.
ExtremalRecord extremal_record(int n, const Graph& f, const std::string& label, const RecordOptions& opts = {});

/// Turan density 1 - 1/r for r = chi(F) - 1 (0 when r < 1).
double turan_density(int chromatic);

}  // namespace sslab
