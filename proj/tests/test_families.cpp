#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sslab/canonical.hpp"
#include "sslab/containment.hpp"
#include "sslab/errors.hpp"
#include "sslab/families.hpp"

using namespace sslab;

TEST_CASE("turan examples") {
  CHECK(turan_sizes(3, 7) == std::vector<int>{3, 2, 2});
  CHECK(turan(3, 7).edge_count() == 16);
  CHECK(turan(2, 4) == cycle_graph(4).permuted(std::vector<int>{0, 2, 1, 3}));
  CHECK(isomorphic(turan(2, 4), cycle_graph(4)));
  for (int n = 1; n <= 8; ++n) CHECK(turan(n, n) == complete_graph(n));
  CHECK_THROWS_AS(turan(4, 3), argument_error);
  CHECK_THROWS_AS(turan(0, 3), argument_error);
}

TEST_CASE("turan edge count bounds") {
  for (int r = 1; r <= 6; ++r)
    for (int n = r; n <= 60; ++n) {
      const Graph g = turan(r, n);
      const auto sizes = turan_sizes(r, n);
      CHECK(std::ranges::max(sizes) - std::ranges::min(sizes) <= 1);
      CHECK(g == complete_multipartite(sizes));
      long internal = 0;
      for (int s : sizes) internal += binomial2(s);
      CHECK(g.edge_count() == binomial2(n) - internal);
      CHECK(g.edge_count() == turan_edge_count(n, r));
      const double top = (1.0 - 1.0 / r) * n * n / 2.0;
      CHECK(g.edge_count() - top <= 1e-9);
      CHECK(g.edge_count() - top >= -r / 8.0 - 1e-9);
    }
}

TEST_CASE("fans and books") {
  CHECK(fan(1, 3) == complete_graph(3));
  const Graph f23 = fan(2, 3);
  CHECK(f23.order() == 5);
  CHECK(f23.edge_count() == 6);
  CHECK(f23.degree(0) == 4);
  const Graph f24 = fan(2, 4);
  CHECK(f24.order() == 7);
  CHECK(f24.edge_count() == 12);
  for (int k = 1; k <= 4; ++k)
    for (int t = 2; t <= 5; ++t) {
      const Graph f = fan(k, t);
      CHECK(f.order() == (t - 1) * k + 1);
      CHECK(f.edge_count() == k * binomial2(t));
      CHECK(f.degree(0) == k * (t - 1));
    }
  CHECK(fan(3, 2) == join(Graph(1), empty_graph(3)));
  CHECK(isomorphic(fan(3, 3), parse_family("kfan:3").resolve()));

  CHECK(book(2).order() == 4);
  CHECK(book(2).edge_count() == 5);
  for (int k = 1; k <= 6; ++k) {
    CHECK(book(k) == join(complete_graph(2), empty_graph(k)));
    CHECK(book(k).edge_count() == 2 * k + 1);
    CHECK(contains(book(k), complete_graph(3)).has_value());
  }
}

TEST_CASE("odd cycles and split graphs") {
  CHECK(odd_cycle(2) == cycle_graph(5));
  CHECK(odd_cycle(1) == complete_graph(3));
  const Graph s = complete_split(2, 12);
  CHECK(s.edge_count() == 21);
  CHECK(s == join(complete_graph(2), empty_graph(10)));
  for (int n = 1; n <= 12; ++n)
    for (int a = 0; a < n; ++a) CHECK(complete_split(a, n).edge_count() == binomial2(a) + a * (n - a));
}

TEST_CASE("extremal fan-free constructions") {
  const Graph g1 = fan_extremal(12, 3);
  CHECK(g1.edge_count() == 42);
  CHECK(g1 == fan_extremal_odd(12, 3));
  const Graph g2 = fan_extremal(13, 2);
  CHECK(g2.edge_count() == 43);
  CHECK(g2 == fan_extremal_even(13, 2));
  CHECK_THROWS_AS(fan_extremal(10, 3), argument_error);
  CHECK_THROWS_AS(fan_extremal(4, 2), argument_error);
  CHECK_THROWS_AS(fan_extremal_odd(13, 2), argument_error);
  CHECK_THROWS_AS(fan_extremal_even(13, 3), argument_error);

  for (int k = 2; k <= 6; k += 2) {
    const auto edges = g2_embedded_edges(k);
    CHECK(static_cast<long>(edges.size()) == k * k - 3 * k / 2);
    const Graph h = Graph::from_edges(2 * k - 1, edges);
    CHECK(h.edge_count() == k * k - 3 * k / 2);
    CHECK(h.max_degree() == k - 1);
  }
}

TEST_CASE("extremal constructions avoid the fan") {
  for (int k = 2; k <= 3; ++k) {
    const Graph fk = fan(k, 3);
    const int lo = k % 2 == 1 ? 4 * k - 1 : 4 * k - 3;
    for (int n = lo; n <= 14; ++n) {
      const Graph g = fan_extremal(n, k);
      CHECK_MESSAGE(is_free(g, fk), "n=", n, " k=", k);
      const long extra = k % 2 == 1 ? 2 * binomial2(k) : k * k - 3 * k / 2;
      CHECK(g.edge_count() == turan_edge_count(n, 2) + extra);
    }
  }
}

TEST_CASE("family spec parsing") {
  CHECK(parse_family("turan:3,7").resolve() == turan(3, 7));
  CHECK(parse_family("fan:2,4").resolve() == fan(2, 4));
  CHECK(parse_family("clique:4").resolve() == complete_graph(4));
  CHECK(parse_family("turan-clique:4").resolve() == complete_graph(4));
  CHECK(parse_family("multipartite:3,1,2").resolve() == complete_multipartite(std::vector<int>{3, 1, 2}));
  CHECK(parse_family("book:3").resolve() == book(3));
  CHECK(parse_family("odd-cycle:2").resolve() == cycle_graph(5));
  CHECK(parse_family("split:2,12").resolve() == complete_split(2, 12));
  CHECK(parse_family("fan-extremal:12,3").resolve() == fan_extremal(12, 3));
  CHECK(parse_family("fan:2,4").to_string() == "fan:2,4");
  CHECK_THROWS_AS(parse_family("wheel:5"), argument_error);
  CHECK_THROWS_AS(parse_family("fan:2"), argument_error);
  CHECK_THROWS_AS(parse_family("fan:a,b"), argument_error);
  CHECK_THROWS_AS(parse_family(""), argument_error);
}
