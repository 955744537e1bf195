#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sslab/graph.hpp"
#include "sslab/jacobi.hpp"

namespace sslab {

template <typename Scalar = double>
Matrix<Scalar> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for_each_bit(g.row(u), [&](int v) { a(u, v) = Scalar(1); });
  return a;
}

/// Q(G) = D(G) + A(G).
template <typename Scalar = double>
Matrix<Scalar> signless_laplacian(const Graph& g) {
  Matrix<Scalar> q = adjacency_matrix<Scalar>(g);
  for (int v = 0; v < g.order(); ++v) q(v, v) = Scalar(g.degree(v));
  return q;
}

enum class PerronNorm {
  max_one,  // max_i x_i = 1
  unit,     // ||x||_2 = 1
};

struct SpectralOptions {
  double tol = 1e-10;
  int max_refinements = 50;
  PerronNorm norm = PerronNorm::max_one;
};

struct SpectralResult {
  double radius = 0;
  Eigen::VectorXd perron;  // nonnegative, normalized per `norm`
  double residual = 0;     // ||M x - radius x||_inf for the returned x
  int iterations = 0;      // Jacobi sweeps + refinement steps, summed over components
  PerronNorm norm = PerronNorm::max_one;
};

/// Largest eigenvalue of Q(G) with its Perron vector. For disconnected graphs
/// the radius is the maximum over components and the vector is the maximizing
/// component's vector, zero elsewhere. Throws numeric_error when the residual
/// stays above opts.tol.
SpectralResult q_radius(const Graph& g, const SpectralOptions& opts = {});
SpectralResult q_radius(const Graph& g, double tol);

/// Same as q_radius for A(G).
SpectralResult a_radius(const Graph& g, const SpectralOptions& opts = {});
SpectralResult a_radius(const Graph& g, double tol);

/// x^T Q x / x^T x evaluated through the matrix and through sum_{ij in E}(x_i + x_j)^2.
/// The two routes must agree to 1e-12 (relative); a disagreement throws numeric_error.
template <typename Derived>
typename Derived::Scalar rayleigh_q(const Graph& g, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  if (x.size() != g.order()) throw argument_error("rayleigh_q: vector length differs from order");
  const Scalar norm2 = x.squaredNorm();
  if (norm2 == Scalar(0)) throw argument_error("rayleigh_q: zero vector");
  const Scalar by_matrix = x.dot(signless_laplacian<Scalar>(g) * x);
  Scalar by_edges = 0;
  for (auto [u, v] : g.edges()) {
    const Scalar s = x(u) + x(v);
    by_edges += s * s;
  }
  const Scalar scale = by_matrix > Scalar(1) ? by_matrix : Scalar(1);
  if (abs(by_matrix - by_edges) > Scalar(1e-12) * scale)
    throw numeric_error("rayleigh_q: matrix and edge-sum forms disagree",
                        static_cast<double>(abs(by_matrix - by_edges)));
  return by_edges / norm2;
}

/// Quotient matrix of Q(K_{n_1..n_r}) for the partition into partite sets:
/// diagonal n - n_i, off-diagonal (i, j) = n_j.
struct QuotientMatrix {
  Eigen::MatrixXd matrix;
  std::vector<int> sizes;

  /// Spectral radius, computed on the similar symmetric matrix D^{1/2} M D^{-1/2}.
  double radius() const;
  /// Positive eigenvector of `matrix` for radius(), max component 1.
  Eigen::VectorXd perron() const;
};

QuotientMatrix quotient_multipartite(std::span<const int> sizes);

/// x_i / x_j = (q - n + 2 n_j) / (q - n + 2 n_i) for the Perron vector of
/// K_{n_1..n_r} (i, j are 0-based class indices).
double eigencomponent_ratio(std::span<const int> sizes, int i, int j, double q);

/// Closed form q(T_r(n)) with n = kr + t, 0 <= t < r:
/// ((3r-4)k + 3t - 2 + sqrt(r^2 k^2 + (2(t+2)r - 8t)k + (t-2)^2)) / 2.
double turan_q_closed_form(int n, int r);

/// q(K_a ∨ K̄_{n-a}) as the larger root of the quotient [[n+a-2, n-a], [a, a]].
double complete_split_q(int a, int n);

/// True when a and b are within `rel` relative difference.
bool spectral_tie(double a, double b, double rel = 1e-9);

}  // namespace sslab
