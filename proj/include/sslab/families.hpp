#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sslab/graph.hpp"

namespace sslab {

// Labeling convention: partite sets are consecutive label blocks, largest
// first; cliques embedded in a Turán side occupy the lowest labels of part 1.

/// Part sizes of T_r(n), largest first.
std::vector<int> turan_sizes(int r, int n);
/// T_r(n). Throws argument_error unless 1 <= r <= n.
Graph turan(int r, int n);
Graph complete_multipartite(std::span<const int> sizes);
/// F_{k,t}: k copies of K_t sharing vertex 0.
Graph fan(int k, int t);
/// B_k = K_2 ∨ K̄_k, spine on vertices 0 and 1.
Graph book(int k);
/// C_{2k+1}.
Graph odd_cycle(int k);
/// K_a ∨ K̄_{n-a}, clique on 0..a-1.
Graph complete_split(int a, int n);

/// The graph embedded in one side of T_2(n) for G²_{n,k} (k even): 2k-1
/// vertices with k² - 3k/2 edges and maximum degree k-1. A circulant on
/// distances 1..(k-2)/2 plus the matching i ~ i+k-1 for i < k-1; vertex 2k-2
/// is the one with degree k-2.
std::vector<Edge> g2_embedded_edges(int k);
/// G¹_{n,k} (k odd, n >= 4k-1): T_2(n) with two disjoint K_k in the larger side.
Graph fan_extremal_odd(int n, int k);
/// G²_{n,k} (k even, n >= 4k-3): T_2(n) with g2_embedded_edges(k) in the larger side.
Graph fan_extremal_even(int n, int k);
/// G¹ for odd k, G² for even k.
Graph fan_extremal(int n, int k);

/// G(n, p) with edges drawn from a seeded 64-bit Mersenne twister.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Named family with its parameters, parsed from "kind:a,b,...".
///
/// Kinds: turan:r,n  multipartite:n1,n2,...  fan:k,t  kfan:k (F_k = fan k,3)
/// book:k  odd-cycle:k (C_{2k+1})  cycle:m  clique:m (alias turan-clique:m)
/// split:a,n  g1:n,k  g2:n,k  fan-extremal:n,k  empty:n  path:m
struct FamilySpec {
  std::string kind;
  std::vector<int> params;

  Graph resolve() const;
  std::string to_string() const;
};

FamilySpec parse_family(std::string_view text);

}  // namespace sslab
