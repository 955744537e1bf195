#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sslab {

inline constexpr int max_vertices = 64;

using Bits = std::uint64_t;

constexpr Bits bit(int v) { return Bits{1} << v; }
constexpr Bits low_bits(int n) { return n >= 64 ? ~Bits{0} : (bit(n) - 1); }

/// Calls fn(v) for every set bit v of mask, in increasing order.
template <typename Fn>
constexpr void for_each_bit(Bits mask, Fn&& fn) {
  while (mask) {
    const int v = std::countr_zero(mask);
    mask &= mask - 1;
    fn(v);
  }
}

/// A set of vertices in 0..63, stored as one machine word.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits members) : bits_(members) {}
  VertexSet(std::initializer_list<int> members);
  static VertexSet from(std::span<const int> members);
  static constexpr VertexSet range(int first, int last) {
    return VertexSet(low_bits(last) & ~low_bits(first));
  }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  std::vector<int> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
  Bits bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Undirected simple graph on at most 64 vertices. Row v holds N(v) as a bitset.
///
/// A Graph is a value: every operation that changes edges returns a new graph.
class Graph {
public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);
  /// Builds from adjacency rows; rows must be symmetric, loop-free and within 0..n-1.
  static Graph from_rows(int n, std::span<const Bits> rows);

  int order() const { return n_; }
  Bits row(int v) const { return adj_[v]; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet vertices() const { return VertexSet(low_bits(n_)); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int degree_in(int v, VertexSet s) const { return std::popcount(adj_[v] & s.bits()); }
  int max_degree() const;
  int min_degree() const;
  long edge_count() const;
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  /// e(S): edges with both ends in s.
  long edges_within(VertexSet s) const;
  /// e(S,T) for disjoint s, t.
  long edges_between(VertexSet s, VertexSet t) const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Relabels so that vertex v becomes perm[v].
  Graph permuted(std::span<const int> perm) const;

  bool is_connected() const;
  /// Connected components, each as a vertex set, ordered by least member.
  std::vector<VertexSet> components() const;

  friend bool operator==(const Graph& a, const Graph& b);

private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<Bits, max_vertices> adj_{};
};

/// Disjoint union with g2 relabeled to n1..n1+n2-1.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// g1 ∨ g2: disjoint union plus every edge between the two vertex blocks.
Graph join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
/// G[s], relabeled to 0..|s|-1 in increasing vertex order.
Graph induced(const Graph& g, VertexSet s);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Number of edges of T_r(n).
long turan_edge_count(int n, int r);
long binomial2(long n);

std::string to_string(const Graph& g);

}  // namespace sslab
