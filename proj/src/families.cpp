#include "sslab/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

#include "sslab/errors.hpp"

namespace sslab {

std::vector<int> turan_sizes(int r, int n) {
  if (r < 1 || r > n) throw argument_error("turan needs 1 <= r <= n");
  std::vector<int> sizes(r, n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

Graph turan(int r, int n) {
  const auto sizes = turan_sizes(r, n);
  return complete_multipartite(sizes);
}

Graph complete_multipartite(std::span<const int> sizes) {
  int n = 0;
  for (int s : sizes) {
    if (s < 0) throw argument_error("negative part size");
    n += s;
  }
  if (n > max_vertices) throw capacity_error("multipartite graph exceeds 64 vertices");
  std::vector<Bits> rows(n);
  int start = 0;
  for (int s : sizes) {
    const Bits block = low_bits(start + s) & ~low_bits(start);
    for (int v = start; v < start + s; ++v) rows[v] = low_bits(n) & ~block;
    start += s;
  }
  return Graph::from_rows(n, rows);
}

Graph fan(int k, int t) {
  if (k < 1 || t < 2) throw argument_error("fan needs k >= 1, t >= 2");
  const int n = (t - 1) * k + 1;
  if (n > max_vertices) throw capacity_error("fan exceeds 64 vertices");
  std::vector<Bits> rows(n, 0);
  for (int c = 0; c < k; ++c) {
    const Bits block = (low_bits(1 + (c + 1) * (t - 1)) & ~low_bits(1 + c * (t - 1))) | bit(0);
    for_each_bit(block, [&](int v) { rows[v] |= block & ~bit(v); });
  }
  return Graph::from_rows(n, rows);
}

Graph book(int k) {
  if (k < 1) throw argument_error("book needs k >= 1");
  return join(complete_graph(2), empty_graph(k));
}

Graph odd_cycle(int k) {
  if (k < 1) throw argument_error("odd_cycle needs k >= 1");
  return cycle_graph(2 * k + 1);
}

Graph complete_split(int a, int n) {
  if (a < 0 || a >= n) throw argument_error("complete_split needs 0 <= a < n");
  return join(complete_graph(a), empty_graph(n - a));
}

std::vector<Edge> g2_embedded_edges(int k) {
  if (k < 2 || k % 2 != 0) throw argument_error("G2 embedding needs even k >= 2");
  const int m = 2 * k - 1;
  std::vector<Edge> edges;
  for (int d = 1; d <= (k - 2) / 2; ++d)
    for (int i = 0; i < m; ++i) edges.emplace_back(std::min(i, (i + d) % m), std::max(i, (i + d) % m));
  for (int i = 0; i < k - 1; ++i) edges.emplace_back(i, i + k - 1);
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

Graph turan2_with(int n, std::span<const Edge> extra) {
  Graph g = turan(2, n);
  for (auto [u, v] : extra) g = g.with_edge(u, v);
  return g;
}

}  // namespace

Graph fan_extremal_odd(int n, int k) {
  if (k < 2 || k % 2 == 0) throw argument_error("G1 needs odd k >= 3");
  if (n < 4 * k - 1) throw argument_error("G1_{n,k} needs n >= 4k - 1");
  std::vector<Edge> extra;
  for (int block = 0; block < 2; ++block)
    for (int u = block * k; u < (block + 1) * k; ++u)
      for (int v = u + 1; v < (block + 1) * k; ++v) extra.emplace_back(u, v);
  return turan2_with(n, extra);
}

Graph fan_extremal_even(int n, int k) {
  if (k < 2 || k % 2 != 0) throw argument_error("G2 needs even k >= 2");
  if (n < 4 * k - 3) throw argument_error("G2_{n,k} needs n >= 4k - 3");
  return turan2_with(n, g2_embedded_edges(k));
}

Graph fan_extremal(int n, int k) {
  if (k < 2) throw argument_error("fan_extremal needs k >= 2");
  return k % 2 == 1 ? fan_extremal_odd(n, k) : fan_extremal_even(n, k);
}

namespace {

void need(const FamilySpec& f, std::size_t count) {
  if (f.params.size() != count)
    throw argument_error("family '" + f.kind + "' takes " + std::to_string(count) + " parameter(s)");
}

}  // namespace

Graph FamilySpec::resolve() const {
  const auto& p = params;
  if (kind == "turan") return need(*this, 2), turan(p[0], p[1]);
  if (kind == "multipartite") {
    if (p.empty()) throw argument_error("multipartite needs part sizes");
    return complete_multipartite(p);
  }
  if (kind == "fan") return need(*this, 2), fan(p[0], p[1]);
  if (kind == "kfan") return need(*this, 1), fan(p[0], 3);
  if (kind == "book") return need(*this, 1), book(p[0]);
  if (kind == "odd-cycle") return need(*this, 1), odd_cycle(p[0]);
  if (kind == "cycle") return need(*this, 1), cycle_graph(p[0]);
  if (kind == "clique" || kind == "turan-clique") {
    need(*this, 1);
    if (p[0] < 1) throw argument_error("clique needs m >= 1");
    return complete_graph(p[0]);
  }
  if (kind == "split") return need(*this, 2), complete_split(p[0], p[1]);
  if (kind == "g1") return need(*this, 2), fan_extremal_odd(p[0], p[1]);
  if (kind == "g2") return need(*this, 2), fan_extremal_even(p[0], p[1]);
  if (kind == "fan-extremal") return need(*this, 2), fan_extremal(p[0], p[1]);
  if (kind == "empty") return need(*this, 1), empty_graph(p[0]);
  if (kind == "path") return need(*this, 1), path_graph(p[0]);
  throw argument_error("unknown graph family '" + kind + "'");
}

std::string FamilySpec::to_string() const {
  std::string out = kind + ":";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out;
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw argument_error("family spec must look like kind:a,b (got '" + std::string(text) + "')");
  FamilySpec f;
  f.kind = std::string(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
      throw argument_error("bad integer '" + std::string(token) + "' in family spec");
    f.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw argument_error("trailing comma in family spec");
  }
  if (f.params.empty()) throw argument_error("family spec has no parameters");
  f.resolve();  // validates kind and parameters
  return f;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw argument_error("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace sslab
