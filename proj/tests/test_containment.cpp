#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sslab/containment.hpp"
#include "sslab/errors.hpp"
#include "sslab/families.hpp"

using namespace sslab;

namespace {

// Tries every injective map; only for tiny patterns.
bool brute_contains(const Graph& g, const Graph& f) {
  const int n = g.order(), k = f.order();
  if (k > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::ranges::sort(pick);
  do {
    std::vector<int> chosen;
    for (int v = 0; v < n; ++v)
      if (pick[v]) chosen.push_back(v);
    do {
      bool ok = true;
      for (int u = 0; u < k && ok; ++u)
        for (int w = u + 1; w < k && ok; ++w)
          if (f.adjacent(u, w) && !g.adjacent(chosen[u], chosen[w])) ok = false;
      if (ok) return true;
    } while (std::ranges::next_permutation(chosen).found);
  } while (std::ranges::next_permutation(pick).found);
  return false;
}

// Tries every colouring.
int brute_chromatic(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : g.edges())
        if (col[u] == col[v]) ok = false;
      if (ok) return k;
      int i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("containment examples") {
  CHECK_FALSE(contains(cycle_graph(5), complete_graph(3)).has_value());
  Graph t = turan(3, 6);
  t = t.with_edge(0, 1);
  const auto w = contains(t, complete_graph(4));
  REQUIRE(w.has_value());
  CHECK(verify_witness(t, complete_graph(4), *w));
  CHECK(contains(complete_graph(4), path_graph(3)).has_value());
  CHECK(is_free(turan(3, 6), complete_graph(4)));
  CHECK(contains(Graph(3), Graph(1)).has_value());
  CHECK_FALSE(contains(Graph(2), Graph(3)).has_value());
}

TEST_CASE("witness verification rejects bad maps") {
  const Graph k3 = complete_graph(3);
  CHECK_FALSE(verify_witness(path_graph(3), k3, EmbeddingWitness{{0, 1, 2}}));
  CHECK_FALSE(verify_witness(k3, k3, EmbeddingWitness{{0, 0, 1}}));
  CHECK_FALSE(verify_witness(k3, k3, EmbeddingWitness{{0, 1}}));
  CHECK_FALSE(verify_witness(k3, k3, EmbeddingWitness{{0, 1, 5}}));
  CHECK(verify_witness(k3, k3, EmbeddingWitness{{2, 0, 1}}));
}

TEST_CASE("matcher agrees with exhaustive maps") {
  std::mt19937_64 rng(31);
  const std::vector<Graph> patterns{complete_graph(3), complete_graph(4), cycle_graph(4), cycle_graph(5),
                                    fan(2, 3),         book(2),           path_graph(4), turan(2, 5)};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng());
    for (const Graph& f : patterns) {
      const auto w = contains(g, f);
      CHECK(w.has_value() == brute_contains(g, f));
      if (w) CHECK(verify_witness(g, f, *w));
    }
  }
}

TEST_CASE("matcher domains and vertex-anchored search") {
  const SubgraphMatcher m(complete_graph(3));
  const Graph g = disjoint_union(complete_graph(3), path_graph(3));
  CHECK(m.exists_through(g, 0));
  CHECK_FALSE(m.exists_through(g, 4));
  std::vector<VertexSet> dom(3, VertexSet{3, 4, 5});
  CHECK_FALSE(m.find(g, dom).has_value());
  dom.assign(3, VertexSet{0, 1, 2});
  CHECK(m.find(g, dom).has_value());
}

TEST_CASE("saturation examples") {
  CHECK(is_saturated(turan(3, 7), complete_graph(4)));
  CHECK_FALSE(is_saturated(empty_graph(5), complete_graph(3)));
  CHECK(is_saturated(complete_multipartite(std::vector<int>{2, 3}), complete_graph(3)));
  CHECK_THROWS_AS(is_saturated(complete_graph(4), complete_graph(3)), precondition_error);
  CHECK(is_saturated(complete_graph(3), complete_graph(4)));
}

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(is_color_critical(cycle_graph(5)));
  CHECK(chromatic_number(complete_graph(4)) == 4);
  CHECK(is_color_critical(complete_graph(4)));
  CHECK(chromatic_number(fan(2, 3)) == 3);
  CHECK(is_colorable(fan(2, 3), 3));
  CHECK_FALSE(is_colorable(fan(2, 3), 2));
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(Graph(4)) == 1);
  CHECK_THROWS_AS(chromatic_number(Graph(17)), capacity_error);
  for (int r = 1; r <= 5; ++r)
    for (int n = r; n <= 15; ++n) CHECK(chromatic_number(turan(r, n)) == r);
}

TEST_CASE("chromatic number agrees with exhaustive colourings") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng());
    const int chi = chromatic_number(g);
    CHECK(chi == brute_chromatic(g));
    bool critical = false;
    for (auto [u, v] : g.edges()) {
      Graph h = g;
      h = h.without_edge(u, v);
      if (brute_chromatic(h) == chi - 1) critical = true;
    }
    CHECK(is_color_critical(g) == critical);
  }
}

TEST_CASE("containment is monotone and freeness survives deletion") {
  std::mt19937_64 rng(41);
  const Graph k4 = complete_graph(4), k3 = complete_graph(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(9, 0.5, rng());
    const bool had = contains(g, k4).has_value();
    for (auto [u, v] : complement(g).edges()) {
      Graph h = g;
      h = h.with_edge(u, v);
      if (had) CHECK(contains(h, k4).has_value());
    }
    while (g.edge_count() > 0) {
      auto edges = g.edges();
      const auto e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      const bool free_before = is_free(g, k3);
      g = g.without_edge(e.first, e.second);
      if (free_before) CHECK(is_free(g, k3));
    }
  }
}
