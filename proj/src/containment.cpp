#include "sslab/containment.hpp"

#include <algorithm>
#include <numeric>

#include "sslab/errors.hpp"

namespace sslab {

SubgraphMatcher::SubgraphMatcher(Graph f) : f_(std::move(f)) {
  if (f_.order() < 1) throw argument_error("forbidden graph needs at least one vertex");
  int best = 0;
  for (int u = 1; u < f_.order(); ++u)
    if (f_.degree(u) > f_.degree(best)) best = u;
  order_ = order_from(best);
  order_by_start_.reserve(f_.order());
  for (int u = 0; u < f_.order(); ++u) order_by_start_.push_back(order_from(u));
}

std::vector<int> SubgraphMatcher::order_from(int first) const {
  const int k = f_.order();
  std::vector<int> order{first};
  Bits placed = bit(first);
  while (static_cast<int>(order.size()) < k) {
    int pick = -1;
    int pick_links = -1;
    for (int u = 0; u < k; ++u) {
      if (placed & bit(u)) continue;
      const int links = std::popcount(f_.row(u) & placed);
      if (links > pick_links || (links == pick_links && f_.degree(u) > f_.degree(pick))) {
        pick = u;
        pick_links = links;
      }
    }
    order.push_back(pick);
    placed |= bit(pick);
  }
  return order;
}

bool SubgraphMatcher::search(const Graph& g, const std::vector<int>& order, std::size_t depth,
                             std::vector<int>& map, Bits used, std::span<const VertexSet> domains) const {
  if (depth == order.size()) return true;
  const int u = order[depth];
  Bits cand = low_bits(g.order()) & ~used;
  if (!domains.empty()) cand &= domains[u].bits();
  for_each_bit(f_.row(u), [&](int w) {
    if (map[w] >= 0) cand &= g.row(map[w]);
  });
  const int need = f_.degree(u);
  while (cand) {
    const int x = std::countr_zero(cand);
    cand &= cand - 1;
    if (g.degree(x) < need) continue;
    map[u] = x;
    if (search(g, order, depth + 1, map, used | bit(x), domains)) return true;
  }
  map[u] = -1;
  return false;
}

std::optional<EmbeddingWitness> SubgraphMatcher::find(const Graph& g) const { return find(g, {}); }

std::optional<EmbeddingWitness> SubgraphMatcher::find(const Graph& g, std::span<const VertexSet> domains) const {
  if (!domains.empty() && static_cast<int>(domains.size()) != f_.order())
    throw argument_error("one domain per pattern vertex required");
  if (f_.order() > g.order()) return std::nullopt;
  if (f_.edge_count() > g.edge_count()) return std::nullopt;
  std::vector<int> map(f_.order(), -1);
  if (!search(g, order_, 0, map, 0, domains)) return std::nullopt;
  return EmbeddingWitness{std::move(map)};
}

bool SubgraphMatcher::exists_through(const Graph& g, int v, std::span<const int> starts) const {
  if (f_.order() > g.order()) return false;
  auto try_start = [&](int u) {
    if (f_.degree(u) > g.degree(v)) return false;
    std::vector<int> map(f_.order(), -1);
    map[u] = v;
    return search(g, order_by_start_[u], 1, map, bit(v), {});
  };
  if (starts.empty()) {
    for (int u = 0; u < f_.order(); ++u)
      if (try_start(u)) return true;
    return false;
  }
  return std::any_of(starts.begin(), starts.end(), try_start);
}

std::optional<EmbeddingWitness> contains(const Graph& g, const Graph& f) {
  if (f.order() > g.order() && f.order() >= 1) return std::nullopt;
  return SubgraphMatcher(f).find(g);
}

bool is_free(const Graph& g, const Graph& f) { return !contains(g, f).has_value(); }

bool verify_witness(const Graph& g, const Graph& f, const EmbeddingWitness& w) {
  if (static_cast<int>(w.map.size()) != f.order()) return false;
  Bits used = 0;
  for (int x : w.map) {
    if (x < 0 || x >= g.order() || (used & bit(x))) return false;
    used |= bit(x);
  }
  for (auto [a, b] : f.edges())
    if (!g.adjacent(w.map[a], w.map[b])) return false;
  return true;
}

bool is_saturated(const Graph& g, const Graph& f) {
  const SubgraphMatcher matcher(f);
  if (matcher.find(g)) throw precondition_error("is_saturated: graph already contains the forbidden graph");
  for (auto [u, v] : g.non_edges())
    if (!matcher.exists_through(g.with_edge(u, v), u)) return false;
  return true;
}

namespace {

// DSATUR-ordered backtracking k-colouring.
bool colour(const Graph& g, int k, std::vector<int>& colours, int coloured) {
  const int n = g.order();
  if (coloured == n) return true;
  int pick = -1;
  int pick_sat = -1;
  for (int v = 0; v < n; ++v) {
    if (colours[v] >= 0) continue;
    unsigned seen = 0;
    for_each_bit(g.row(v), [&](int w) {
      if (colours[w] >= 0) seen |= 1U << colours[w];
    });
    const int sat = std::popcount(seen);
    if (sat > pick_sat || (sat == pick_sat && g.degree(v) > g.degree(pick))) {
      pick = v;
      pick_sat = sat;
    }
  }
  unsigned forbidden = 0;
  int max_used = -1;
  for (int v = 0; v < n; ++v) max_used = std::max(max_used, colours[v]);
  for_each_bit(g.row(pick), [&](int w) {
    if (colours[w] >= 0) forbidden |= 1U << colours[w];
  });
  // a fresh colour is interchangeable with any other unused one
  const int limit = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    if (forbidden & (1U << c)) continue;
    colours[pick] = c;
    if (colour(g, k, colours, coloured + 1)) return true;
  }
  colours[pick] = -1;
  return false;
}

}  // namespace

bool is_colorable(const Graph& g, int k) {
  if (g.order() > chromatic_capacity) throw capacity_error("exact colouring supports n <= 16");
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  std::vector<int> colours(g.order(), -1);
  return colour(g, k, colours, 0);
}

int chromatic_number(const Graph& g) {
  if (g.order() > chromatic_capacity) throw capacity_error("exact chromatic number supports n <= 16");
  if (g.order() == 0) return 0;
  int k = g.edge_count() > 0 ? 2 : 1;
  while (!is_colorable(g, k)) ++k;
  return k;
}

bool is_color_critical(const Graph& g) {
  const int chi = chromatic_number(g);
  for (auto [u, v] : g.edges())
    if (is_colorable(g.without_edge(u, v), chi - 1)) return true;
  return false;
}

}  // namespace sslab
