#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sslab {

/// Outcome of one sweep of instances against an identity or inequality.
///
/// `worst` is the smallest slack for inequalities (positive means it held)
/// and the largest error for identities.
struct SuiteResult {
  std::string name;
  std::string anchor;
  std::string metric;
  std::size_t instances = 0;
  std::size_t violations = 0;
  double worst = 0;
  std::vector<std::string> failures;  // first few failing instances, graph6 where one exists
  double seconds = 0;

  bool passed() const { return violations == 0 && instances > 0; }
};

/// |q(T_r(n)) - closed form| over 2 <= r <= r_max, r <= n <= n_max.
SuiteResult turan_closed_form_suite(int r_max = 6, int n_max = 40, double tol = 1e-8);
/// |q(K_{s,n-s}) - n| over 1 <= s < n <= n_max.
SuiteResult bipartite_suite(int n_max = 40, double tol = 1e-8);
/// Dense solver against the quotient radius on every composition, r <= r_max.
SuiteResult quotient_agreement_suite(int n_max = 24, int r_max = 5, double tol = 1e-8);
/// Moving a vertex from a part of size n_i to one of size n_j <= n_i - 2 raises q.
SuiteResult balancing_step_suite(const std::vector<int>& rs = {3, 4}, int n_max = 24);
/// q(T_r(n)) - q(K) > 2(r-2)/(r² n) whenever some part sizes differ by 2 or more.
SuiteResult balancing_gap_suite(const std::vector<int>& rs = {3, 4}, int n_max = 24);
/// q(G1 ∨ G2) < q(K̄_a ∨ G2) + 4 c1 (1-α) n / (α n - 2 c1)².
SuiteResult join_bound_suite(int instances = 500, std::uint64_t seed = 20240601, int n_max = 24);
/// e(H0) >= e(G) - t on every K_{p+1}-free graph up to n_max vertices.
SuiteResult partite_subgraph_suite(int p, int n_max);

SuiteResult adjacency_symmetry_suite(int instances = 2000, std::uint64_t seed = 7);
SuiteResult graph6_roundtrip_suite(int instances = 10000, std::uint64_t seed = 11);
/// q(g + uv) >= q(g) - 1e-10 on every graph up to n_max vertices, a few sampled non-edges each.
SuiteResult edge_monotonicity_suite(int n_max = 8, int samples = 3, std::uint64_t seed = 13);
/// Matrix and edge-sum forms of x^T Q x agree to 1e-12 (relative).
SuiteResult rayleigh_identity_suite(int instances = 2000, std::uint64_t seed = 17);
/// Set-intersection lower bound on random triples over 12 points.
SuiteResult intersection_bound_suite(int instances = 10000, std::uint64_t seed = 19);

}  // namespace sslab
