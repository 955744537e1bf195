#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "sslab/canonical.hpp"
#include "sslab/families.hpp"
#include "sslab/graph6.hpp"

using namespace sslab;

namespace {

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::ranges::next_permutation(p).found);
  return out;
}

// Lexicographically largest row sequence over all relabelings.
std::vector<Bits> brute_key(const Graph& g, const std::vector<std::vector<int>>& perms) {
  std::vector<Bits> best;
  for (const auto& p : perms) {
    const Graph h = g.permuted(p);
    std::vector<Bits> rows(g.order());
    for (int v = 0; v < g.order(); ++v) rows[v] = h.row(v);
    if (best.empty() || rows > best) best = rows;
  }
  return best;
}

std::vector<int> brute_orbits(const Graph& g, const std::vector<std::vector<int>>& perms) {
  std::vector<int> orbit(g.order());
  std::iota(orbit.begin(), orbit.end(), 0);
  for (const auto& p : perms)
    if (g.permuted(p) == g)
      for (int v = 0; v < g.order(); ++v) orbit[p[v]] = std::min(orbit[p[v]], orbit[v]);
  // one pass per perm already closes orbits since Aut is a group
  std::vector<int> least(g.order());
  for (int v = 0; v < g.order(); ++v) {
    least[v] = v;
    for (const auto& p : perms)
      if (g.permuted(p) == g) least[v] = std::min(least[v], p[v]);
  }
  return least;
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::ranges::shuffle(p, rng);
  return g.permuted(p);
}

}  // namespace

TEST_CASE("canonical labeling bookkeeping") {
  const Graph g = turan(3, 7);
  const auto cf = canonical_form(g);
  REQUIRE(cf.position.size() == 7);
  for (int v = 0; v < 7; ++v) CHECK(cf.vertex_at[cf.position[v]] == v);
  CHECK(cf.form == g.permuted(cf.position));
  CHECK(canonical_graph6(g) == graph6_encode(cf.form));
  CHECK(canonical_form(Graph(0)).form.order() == 0);
  CHECK(canonical_form(Graph(1)).orbit == std::vector<int>{0});
}

TEST_CASE("canonical forms are relabeling invariant") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 20)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng());
    const Graph h = shuffled(g, rng);
    CHECK(canonical_form(g).form == canonical_form(h).form);
    CHECK(isomorphic(g, h));
  }
  for (int n : {12, 16, 24, 40}) {
    const Graph regular = cycle_graph(n);
    CHECK(canonical_form(regular).form == canonical_form(shuffled(regular, rng)).form);
    const Graph t = turan(4, n);
    CHECK(canonical_form(t).form == canonical_form(shuffled(t, rng)).form);
  }
}

TEST_CASE("canonical forms separate classes like a brute-force oracle") {
  std::mt19937_64 rng(47);
  for (int n = 1; n <= 6; ++n) {
    const auto perms = all_perms(n);
    for (int trial = 0; trial < 150; ++trial) {
      const double p = std::uniform_real_distribution<double>(0, 1)(rng);
      const Graph a = random_graph(n, p, rng());
      const Graph b = random_graph(n, p, rng());
      CHECK(isomorphic(a, b) == (brute_key(a, perms) == brute_key(b, perms)));
    }
  }
  CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
  CHECK_FALSE(isomorphic(path_graph(4), Graph(5)));
}

TEST_CASE("orbits match brute-force automorphisms") {
  std::mt19937_64 rng(53);
  for (int n = 1; n <= 7; ++n) {
    const auto perms = all_perms(n);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng());
      CHECK(canonical_form(g).orbit == brute_orbits(g, perms));
    }
  }
  const auto k = canonical_form(complete_multipartite(std::vector<int>{3, 2, 2}));
  CHECK(k.orbit == std::vector<int>{0, 0, 0, 3, 3, 3, 3});
  const auto c = canonical_form(cycle_graph(9));
  CHECK(std::ranges::all_of(c.orbit, [](int o) { return o == 0; }));
}
