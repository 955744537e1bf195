#include "sslab/graph.hpp"

#include <algorithm>
#include <sstream>

#include "sslab/errors.hpp"

namespace sslab {

namespace {

void check_order(int n) {
  if (n < 0 || n > max_vertices)
    throw capacity_error("graph order " + std::to_string(n) + " outside 0..64");
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) {
    if (v < 0 || v >= max_vertices) throw argument_error("vertex out of range");
    bits_ |= bit(v);
  }
}

VertexSet VertexSet::from(std::span<const int> members) {
  VertexSet s;
  for (int v : members) {
    if (v < 0 || v >= max_vertices) throw argument_error("vertex out of range");
    s = s | VertexSet(bit(v));
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_bit(bits_, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw argument_error("loop at vertex " + std::to_string(u));
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const Bits> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) throw argument_error("row count differs from order");
  const Bits mask = low_bits(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~mask) throw argument_error("row references vertex outside the graph");
    if (rows[v] & bit(v)) throw argument_error("loop at vertex " + std::to_string(v));
    g.adj_[v] = rows[v];
  }
  for (int v = 0; v < n; ++v)
    for_each_bit(g.adj_[v], [&](int u) {
      if (!g.adjacent(u, v)) throw argument_error("asymmetric adjacency rows");
    });
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw argument_error("vertex " + std::to_string(v) + " outside graph");
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

long Graph::edge_count() const {
  long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  const Bits all = low_bits(n_);
  for (int u = 0; u < n_; ++u)
    for_each_bit(all & ~adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

long Graph::edges_within(VertexSet s) const {
  long twice = 0;
  for_each_bit(s.bits(), [&](int v) { twice += std::popcount(adj_[v] & s.bits()); });
  return twice / 2;
}

long Graph::edges_between(VertexSet s, VertexSet t) const {
  if (!(s & t).empty()) throw argument_error("edges_between needs disjoint sets");
  long count = 0;
  for_each_bit(s.bits(), [&](int v) { count += std::popcount(adj_[v] & t.bits()); });
  return count;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw argument_error("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] |= bit(v);
  g.adj_[v] |= bit(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw argument_error("permutation size mismatch");
  Bits seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || (seen & bit(p))) throw argument_error("not a permutation");
    seen |= bit(p);
  }
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    Bits row = 0;
    for_each_bit(adj_[v], [&](int u) { row |= bit(perm[u]); });
    g.adj_[perm[v]] = row;
  }
  return g;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  Bits left = low_bits(n_);
  while (left) {
    Bits comp = left & (~left + 1);
    Bits frontier = comp;
    while (frontier) {
      Bits next = 0;
      for_each_bit(frontier, [&](int v) { next |= adj_[v]; });
      frontier = next & ~comp;
      comp |= next;
    }
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 + n2 > max_vertices) throw capacity_error("union exceeds 64 vertices");
  std::vector<Bits> rows(n1 + n2);
  for (int v = 0; v < n1; ++v) rows[v] = g1.row(v);
  for (int v = 0; v < n2; ++v) rows[n1 + v] = g2.row(v) << n1;
  return Graph::from_rows(n1 + n2, rows);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 + n2 > max_vertices) throw capacity_error("join exceeds 64 vertices");
  const Bits block1 = low_bits(n1);
  const Bits block2 = low_bits(n1 + n2) & ~block1;
  std::vector<Bits> rows(n1 + n2);
  for (int v = 0; v < n1; ++v) rows[v] = g1.row(v) | block2;
  for (int v = 0; v < n2; ++v) rows[n1 + v] = (g2.row(v) << n1) | block1;
  return Graph::from_rows(n1 + n2, rows);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Bits> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = low_bits(n) & ~g.row(v) & ~bit(v);
  return Graph::from_rows(n, rows);
}

Graph induced(const Graph& g, VertexSet s) {
  if (s.empty()) throw argument_error("induced subgraph of an empty vertex set");
  if (s.bits() & ~low_bits(g.order())) throw argument_error("vertex set exceeds graph");
  const auto members = s.members();
  const int k = static_cast<int>(members.size());
  std::vector<Bits> rows(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.adjacent(members[i], members[j])) rows[i] |= bit(j);
  return Graph::from_rows(k, rows);
}

Graph complete_graph(int n) { return complement(Graph(n)); }
Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw argument_error("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

long binomial2(long n) { return n * (n - 1) / 2; }

long turan_edge_count(int n, int r) {
  if (r < 1 || n < 0) throw argument_error("turan_edge_count needs r >= 1");
  long missing = 0;
  const int q = n / r;
  const int extra = n % r;
  missing += extra * binomial2(q + 1);
  missing += (r - extra) * binomial2(q);
  return binomial2(n) - missing;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", e=" << g.edge_count() << ", {";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ", ") << u << '-' << v;
    first = false;
  }
  os << "})";
  return os.str();
}

}  // namespace sslab
