#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "sslab/errors.hpp"
#include "sslab/families.hpp"
#include "sslab/jacobi.hpp"
#include "sslab/spectral.hpp"

using namespace sslab;
using doctest::Approx;

namespace {

double eigen_oracle_max(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return es.eigenvalues().maxCoeff();
}

}  // namespace

TEST_CASE("jacobi matches an independent symmetric solver") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coord(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = coord(rng);
    const auto ours = jacobi_eigen(m, 1e-14, 200);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    for (int k = 0; k < n; ++k) CHECK(ours.values(k) == Approx(es.eigenvalues()(k)).epsilon(1e-10));
    const Eigen::MatrixXd recon = ours.vectors * ours.values.asDiagonal() * ours.vectors.transpose();
    CHECK((recon - m).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((ours.vectors.transpose() * ours.vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("jacobi works in long double") {
  Eigen::Matrix<long double, 3, 3> m;
  m << 2, 1, 0, 1, 2, 1, 0, 1, 2;
  const auto res = jacobi_eigen(m, 1e-18L, 200);
  CHECK(static_cast<double>(res.values(2)) == Approx(2 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(static_cast<double>(res.values(0)) == Approx(2 - std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("jacobi reports non-convergence") {
  Eigen::MatrixXd m(3, 3);
  m << 1, 2, 3, 2, 4, 5, 3, 5, 6;
  CHECK_THROWS_AS(jacobi_eigen(m, 1e-14, 0), numeric_error);
  Eigen::MatrixXd rect(2, 3);
  CHECK_THROWS_AS(jacobi_eigen(rect), argument_error);
}

TEST_CASE("q radius examples") {
  const auto k23 = q_radius(complete_multipartite(std::vector<int>{2, 3}));
  CHECK(k23.radius == Approx(5).epsilon(1e-12));
  CHECK(q_radius(empty_graph(5)).radius == 0);
  CHECK(q_radius(turan(3, 7)).radius == Approx((11 + std::sqrt(57.0)) / 2).epsilon(1e-12));
  CHECK_THROWS_AS(q_radius(Graph(0)), argument_error);
  CHECK_THROWS_AS(q_radius(complete_graph(3), 0.0), argument_error);
}

TEST_CASE("a radius examples") {
  CHECK(a_radius(complete_graph(4)).radius == Approx(3).epsilon(1e-12));
  CHECK(a_radius(cycle_graph(4)).radius == Approx(2).epsilon(1e-12));
  CHECK(a_radius(complete_multipartite(std::vector<int>{1, 4})).radius == Approx(2).epsilon(1e-12));
  CHECK(a_radius(cycle_graph(5)).radius == Approx(2).epsilon(1e-12));
}

TEST_CASE("perron vector normalization and residual") {
  const Graph g = turan(3, 7);
  const auto res = q_radius(g);
  CHECK(res.perron.maxCoeff() == 1.0);
  CHECK(res.perron.minCoeff() > 0);
  CHECK(res.residual <= 1e-10);
  const Eigen::VectorXd r = signless_laplacian<double>(g) * res.perron - res.radius * res.perron;
  CHECK(r.cwiseAbs().maxCoeff() <= 1e-10);
  const auto unit = q_radius(g, SpectralOptions{.norm = PerronNorm::unit});
  CHECK(unit.perron.norm() == Approx(1).epsilon(1e-14));
  CHECK(unit.norm == PerronNorm::unit);
}

TEST_CASE("disconnected graphs take the best component") {
  const Graph g = disjoint_union(complete_graph(2), complete_graph(4));
  const auto res = q_radius(g);
  CHECK(res.radius == Approx(6).epsilon(1e-12));
  CHECK(res.perron(0) == 0);
  CHECK(res.perron(1) == 0);
  CHECK(res.perron.tail(4).minCoeff() == Approx(1).epsilon(1e-12));
  const auto iso = q_radius(disjoint_union(Graph(1), path_graph(2)));
  CHECK(iso.radius == Approx(2).epsilon(1e-12));
}

TEST_CASE("solver agrees with the oracle on random graphs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng());
    const double q = q_radius(g).radius;
    const double lambda = a_radius(g).radius;
    CHECK(q == Approx(eigen_oracle_max(signless_laplacian<double>(g))).epsilon(1e-10));
    CHECK(lambda == Approx(eigen_oracle_max(adjacency_matrix<double>(g))).epsilon(1e-10));
    CHECK(lambda <= q + 1e-10);
    CHECK(q <= 2.0 * (n - 1) + 1e-10);
    CHECK(q >= 4.0 * g.edge_count() / n - 1e-10);
  }
}

TEST_CASE("rayleigh quotient") {
  const Graph k23 = complete_multipartite(std::vector<int>{2, 3});
  const Graph g = random_graph(9, 0.5, 4);
  CHECK(rayleigh_q(g, Eigen::VectorXd::Ones(9)) == Approx(4.0 * g.edge_count() / 9).epsilon(1e-14));
  CHECK(rayleigh_q(k23, q_radius(k23).perron) == Approx(5).epsilon(1e-12));
  // x = 1 on the 2-side: Q-form = sum over the 6 cross edges of (1 + 0)^2 = 6, over x^T x = 2.
  Eigen::VectorXd side(5);
  side << 1, 1, 0, 0, 0;
  CHECK(rayleigh_q(k23, side) == Approx(3).epsilon(1e-14));
  CHECK_THROWS_AS(rayleigh_q(k23, Eigen::VectorXd::Zero(5)), argument_error);
  CHECK_THROWS_AS(rayleigh_q(k23, Eigen::VectorXd::Ones(4)), argument_error);
}

TEST_CASE("quotient matrices") {
  const auto q23 = quotient_multipartite(std::vector<int>{2, 3});
  Eigen::MatrixXd expect(2, 2);
  expect << 3, 3, 2, 2;
  CHECK(q23.matrix == expect);
  CHECK(q23.radius() == Approx(5).epsilon(1e-13));
  CHECK(quotient_multipartite(std::vector<int>{2, 2, 2}).radius() == Approx(8).epsilon(1e-13));
  for (int r = 2; r <= 8; ++r)
    CHECK(quotient_multipartite(std::vector<int>(r, 1)).radius() == Approx(2.0 * (r - 1)).epsilon(1e-13));
  CHECK_THROWS_AS(quotient_multipartite(std::vector<int>{5}), argument_error);
  CHECK_THROWS_AS(quotient_multipartite(std::vector<int>{2, 0}), argument_error);

  const std::vector<int> sizes{4, 3, 1};
  const auto quot = quotient_multipartite(sizes);
  const Eigen::VectorXd y = quot.perron();
  CHECK((quot.matrix * y - quot.radius() * y).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::EigenSolver<Eigen::MatrixXd> es(quot.matrix);
  CHECK(quot.radius() == Approx(es.eigenvalues().real().maxCoeff()).epsilon(1e-12));
}

TEST_CASE("eigencomponent ratio") {
  const std::vector<int> s23{2, 3};
  CHECK(eigencomponent_ratio(s23, 0, 1, 5) == Approx(1.5));
  const auto x = q_radius(complete_multipartite(s23)).perron;
  CHECK(x(0) / x(2) == Approx(1.5).epsilon(1e-8));
  CHECK(eigencomponent_ratio(std::vector<int>{3, 3, 3}, 0, 2, 12) == 1.0);
  const std::vector<int> s322{3, 2, 2};
  const double q = (11 + std::sqrt(57.0)) / 2;
  const double ratio = eigencomponent_ratio(s322, 0, 1, q);
  CHECK(ratio == Approx((q - 7 + 4) / (q - 7 + 6)));
  const auto xs = q_radius(turan(3, 7)).perron;
  CHECK(xs(0) / xs(3) == Approx(ratio).epsilon(1e-8));
  CHECK_THROWS_AS(eigencomponent_ratio(s23, 0, 0, 5), argument_error);
  CHECK_THROWS_AS(eigencomponent_ratio(s23, 0, 2, 5), argument_error);
  CHECK_THROWS_AS(eigencomponent_ratio(s23, 0, 1, -10), domain_error);
}

TEST_CASE("closed form for turan graphs") {
  CHECK(turan_q_closed_form(6, 3) == 8);
  CHECK(turan_q_closed_form(12, 3) == 16);
  CHECK(turan_q_closed_form(7, 3) == Approx((11 + std::sqrt(57.0)) / 2).epsilon(1e-14));
  CHECK(turan_q_closed_form(9, 1) == 0);
  CHECK(turan_q_closed_form(9, 9) == Approx(16).epsilon(1e-14));
  CHECK_THROWS_AS(turan_q_closed_form(3, 4), argument_error);
  for (int r = 1; r <= 6; ++r)
    for (int n = r; n <= 30; ++n)
      CHECK(q_radius(turan(r, n)).radius == Approx(turan_q_closed_form(n, r)).epsilon(1e-10));
}

TEST_CASE("complete split closed form") {
  CHECK(complete_split_q(2, 12) == Approx((14 + std::sqrt(180.0)) / 2).epsilon(1e-14));
  CHECK(complete_split_q(1, 6) == Approx(6).epsilon(1e-14));
  CHECK(complete_split_q(0, 6) == 0);
  for (int n = 2; n <= 20; ++n)
    for (int a = 0; a < n; ++a)
      CHECK(q_radius(complete_split(a, n)).radius == Approx(complete_split_q(a, n)).epsilon(1e-10));
}

TEST_CASE("spectral ties") {
  CHECK(spectral_tie(5.0, 5.0 + 1e-9));
  CHECK_FALSE(spectral_tie(5.0, 5.0 + 1e-7));
  CHECK(spectral_tie(0.0, 1e-10));
}
