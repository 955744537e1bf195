#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sslab/graph.hpp"

namespace sslab {

/// Injective vertex map V(F) -> V(G) carrying every edge of F to an edge of G.
struct EmbeddingWitness {
  std::vector<int> map;  // map[f_vertex] = g_vertex
};

/// Backtracking search for (not necessarily induced) copies of a fixed F.
///
/// F-vertices are placed greedily: next is the vertex with the most already
/// placed neighbours, ties broken by larger degree. Candidates are filtered by
/// degree and by intersecting the images' neighbourhoods.
class SubgraphMatcher {
public:
  explicit SubgraphMatcher(Graph f);

  const Graph& pattern() const { return f_; }

  std::optional<EmbeddingWitness> find(const Graph& g) const;
  /// Only maps F-vertex u into domains[u].
  std::optional<EmbeddingWitness> find(const Graph& g, std::span<const VertexSet> domains) const;
  /// Whether some copy of F in g uses vertex v. `starts` limits which F-vertices
  /// are tried as the preimage of v (e.g. one per Aut(F) orbit); empty means all.
  bool exists_through(const Graph& g, int v, std::span<const int> starts = {}) const;

private:
  std::vector<int> order_from(int first) const;
  bool search(const Graph& g, const std::vector<int>& order, std::size_t depth, std::vector<int>& map,
              Bits used, std::span<const VertexSet> domains) const;

  Graph f_;
  std::vector<int> order_;
  std::vector<std::vector<int>> order_by_start_;
};

std::optional<EmbeddingWitness> contains(const Graph& g, const Graph& f);
bool is_free(const Graph& g, const Graph& f);
bool verify_witness(const Graph& g, const Graph& f, const EmbeddingWitness& w);

/// F-saturated: F-free and every added non-edge creates a copy of F.
/// Throws precondition_error when g already contains F.
bool is_saturated(const Graph& g, const Graph& f);

inline constexpr int chromatic_capacity = 16;

/// Exact chromatic number (n <= 16, else capacity_error).
int chromatic_number(const Graph& g);
/// Some edge deletion lowers the chromatic number.
bool is_color_critical(const Graph& g);
/// Whether g admits a proper colouring with k colours.
bool is_colorable(const Graph& g, int k);

}  // namespace sslab
