#include "sslab/spectral.hpp"

#include <cmath>
#include <numeric>

#include "sslab/errors.hpp"

namespace sslab {

namespace {

enum class Kind { signless, adjacency };

struct ComponentEigen {
  double radius = 0;
  Eigen::VectorXd vec;  // nonnegative, max component 1
  double residual = 0;
  int iterations = 0;
};

double residual_of(const Eigen::MatrixXd& m, const Eigen::VectorXd& x, double lambda) {
  return (m * x - lambda * x).lpNorm<Eigen::Infinity>();
}

/// Largest eigenpair of a nonnegative irreducible block.
ComponentEigen top_eigenpair(const Eigen::MatrixXd& m, double tol, int max_refinements) {
  ComponentEigen out;
  const Eigen::Index k = m.rows();
  if (k == 1) {
    out.radius = m(0, 0);
    out.vec = Eigen::VectorXd::Ones(1);
    return out;
  }
  auto eig = jacobi_eigen(m, 1e-14, 200);
  out.iterations = eig.sweeps;
  double lambda = eig.values(k - 1);
  Eigen::VectorXd x = eig.vectors.col(k - 1).cwiseAbs();
  x /= x.maxCoeff();
  double res = residual_of(m, x, lambda);

  // Inverse iteration with a shift just above the Jacobi estimate sharpens
  // the Perron vector when rounding left the residual above tolerance.
  double best = res;
  Eigen::VectorXd best_x = x;
  double best_lambda = lambda;
  for (int step = 0; step < max_refinements && best > tol; ++step) {
    const double shift = lambda + 1e-9 * std::max(1.0, std::abs(lambda));
    Eigen::MatrixXd shifted = m - shift * Eigen::MatrixXd::Identity(k, k);
    Eigen::VectorXd y = shifted.partialPivLu().solve(x);
    if (!y.allFinite() || y.norm() == 0) break;
    y = y.cwiseAbs();
    y /= y.maxCoeff();
    x = y;
    lambda = x.dot(m * x) / x.squaredNorm();
    res = residual_of(m, x, lambda);
    ++out.iterations;
    if (res < best) {
      best = res;
      best_x = x;
      best_lambda = lambda;
    }
  }
  out.radius = best_lambda;
  out.vec = best_x;
  out.residual = best;
  return out;
}

SpectralResult radius_of(const Graph& g, const SpectralOptions& opts, Kind kind) {
  if (g.order() < 1) throw argument_error("spectral radius of the null graph");
  if (!(opts.tol > 0)) throw argument_error("spectral tolerance must be positive");
  const int n = g.order();
  const Eigen::MatrixXd full = kind == Kind::signless ? signless_laplacian(g) : adjacency_matrix(g);

  SpectralResult out;
  out.norm = opts.norm;
  bool have = false;
  VertexSet best_comp;
  Eigen::VectorXd best_vec;
  for (VertexSet comp : g.components()) {
    const auto members = comp.members();
    const auto k = static_cast<Eigen::Index>(members.size());
    Eigen::MatrixXd block(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) block(i, j) = full(members[i], members[j]);
    ComponentEigen ce = top_eigenpair(block, opts.tol, opts.max_refinements);
    out.iterations += ce.iterations;
    if (!have || ce.radius > out.radius) {
      have = true;
      out.radius = ce.radius;
      best_comp = comp;
      best_vec = ce.vec;
    }
  }

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  const auto members = best_comp.members();
  for (std::size_t i = 0; i < members.size(); ++i) x(members[i]) = best_vec(static_cast<Eigen::Index>(i));
  if (opts.norm == PerronNorm::unit) x.normalize();
  out.perron = x;
  out.residual = residual_of(full, x, out.radius);
  if (out.residual > opts.tol)
    throw numeric_error("spectral radius did not reach tolerance", out.residual);
  return out;
}

}  // namespace

SpectralResult q_radius(const Graph& g, const SpectralOptions& opts) { return radius_of(g, opts, Kind::signless); }

SpectralResult q_radius(const Graph& g, double tol) {
  SpectralOptions opts;
  opts.tol = tol;
  return q_radius(g, opts);
}

SpectralResult a_radius(const Graph& g, const SpectralOptions& opts) { return radius_of(g, opts, Kind::adjacency); }

SpectralResult a_radius(const Graph& g, double tol) {
  SpectralOptions opts;
  opts.tol = tol;
  return a_radius(g, opts);
}

QuotientMatrix quotient_multipartite(std::span<const int> sizes) {
  const auto r = static_cast<Eigen::Index>(sizes.size());
  if (r < 2) throw argument_error("quotient_multipartite needs at least two parts");
  for (int s : sizes)
    if (s < 1) throw argument_error("quotient_multipartite needs positive part sizes");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  QuotientMatrix out;
  out.sizes.assign(sizes.begin(), sizes.end());
  out.matrix.resize(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) out.matrix(i, j) = i == j ? n - sizes[i] : sizes[j];
  return out;
}

namespace {

Eigen::MatrixXd symmetrized(const QuotientMatrix& qm) {
  const Eigen::Index r = qm.matrix.rows();
  Eigen::MatrixXd s(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      s(i, j) = i == j ? qm.matrix(i, i) : std::sqrt(double(qm.sizes[i]) * qm.sizes[j]);
  return s;
}

}  // namespace

double QuotientMatrix::radius() const {
  const auto eig = jacobi_eigen(symmetrized(*this), 1e-15, 200);
  return eig.values(eig.values.size() - 1);
}

Eigen::VectorXd QuotientMatrix::perron() const {
  const auto eig = jacobi_eigen(symmetrized(*this), 1e-15, 200);
  // M = D^{-1/2} S D^{1/2}, so an eigenvector of M is D^{-1/2} times one of S.
  Eigen::VectorXd z = eig.vectors.col(eig.vectors.cols() - 1).cwiseAbs();
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) /= std::sqrt(double(sizes[i]));
  return z / z.maxCoeff();
}

double eigencomponent_ratio(std::span<const int> sizes, int i, int j, double q) {
  const int r = static_cast<int>(sizes.size());
  if (i < 0 || j < 0 || i >= r || j >= r) throw argument_error("eigencomponent_ratio: class index out of range");
  if (i == j) throw argument_error("eigencomponent_ratio needs distinct classes");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  const double num = q - n + 2.0 * sizes[j];
  const double den = q - n + 2.0 * sizes[i];
  if (den <= 0) throw domain_error("eigencomponent_ratio: denominator q - n + 2 n_i is not positive");
  return num / den;
}

double turan_q_closed_form(int n, int r) {
  if (r < 1 || r > n) throw argument_error("turan_q_closed_form needs 1 <= r <= n");
  const long k = n / r;
  const long t = n % r;
  if (t == 0) return 2.0 * (r - 1) * n / r;
  const double rr = r;
  const double kk = static_cast<double>(k);
  const double tt = static_cast<double>(t);
  const double disc = rr * rr * kk * kk + (2.0 * (tt + 2.0) * rr - 8.0 * tt) * kk + (tt - 2.0) * (tt - 2.0);
  return ((3.0 * rr - 4.0) * kk + 3.0 * tt - 2.0 + std::sqrt(disc)) / 2.0;
}

double complete_split_q(int a, int n) {
  if (a < 0 || a >= n) throw argument_error("complete_split_q needs 0 <= a < n");
  if (a == 0) return 0.0;
  const double trace = n + 2.0 * a - 2.0;
  const double det = 2.0 * a * (a - 1.0);
  return (trace + std::sqrt(trace * trace - 4.0 * det)) / 2.0;
}

bool spectral_tie(double a, double b, double rel) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

}  // namespace sslab
