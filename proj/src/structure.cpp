#include "sslab/structure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "sslab/canonical.hpp"
#include "sslab/containment.hpp"
#include "sslab/errors.hpp"
#include "sslab/families.hpp"
#include "sslab/spectral.hpp"

namespace sslab {

namespace {

// Depth-first over restricted-growth assignments in a fixed vertex order.
class PartitionWalker {
public:
  PartitionWalker(const Graph& g, int r) : g_(g), n_(g.order()), r_(std::min(r, g.order())) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    classes_.assign(r_, 0);
    assign_.assign(n_, -1);
  }

  // Minimum internal total, counting optima up to two.
  void minimize() {
    best_ = std::numeric_limits<long>::max();
    optima_ = 0;
    descend_min(0, 0, 0);
  }

  // Partitions with every class holding at most c0 internal edges.
  void count_low(long c0, int limit) {
    count_ = 0;
    descend_low(0, 0, c0, limit);
  }

  long best() const { return best_; }
  int optima() const { return optima_; }
  int count() const { return count_; }
  const std::vector<int>& best_assign() const { return best_assign_; }

private:
  long lower_bound(int depth) const {
    long extra = 0;
    for (int k = depth; k < n_; ++k) {
      const Bits row = g_.row(order_[k]);
      long cheapest = std::numeric_limits<long>::max();
      for (int c = 0; c < r_; ++c) cheapest = std::min<long>(cheapest, std::popcount(row & classes_[c]));
      extra += cheapest;
    }
    return extra;
  }

  template <typename Visit>
  void for_each_class(int depth, int used, Visit&& visit) {
    const int v = order_[depth];
    const int remaining = n_ - depth;
    // Every class must end up nonempty.
    const int lo = (r_ - used >= remaining) ? used : 0;
    const int hi = std::min(used, r_ - 1);
    for (int c = lo; c <= hi; ++c) {
      const long added = std::popcount(g_.row(v) & classes_[c]);
      classes_[c] |= bit(v);
      assign_[v] = c;
      visit(c, added, c == used ? used + 1 : used);
      classes_[c] &= ~bit(v);
      assign_[v] = -1;
    }
  }

  void descend_min(int depth, int used, long internal) {
    if (depth == n_) {
      if (internal < best_) {
        best_ = internal;
        optima_ = 1;
        best_assign_ = assign_;
      } else if (internal == best_) {
        ++optima_;
      }
      return;
    }
    const long lb = internal + lower_bound(depth);
    if (lb > best_ || (lb == best_ && optima_ >= 2)) return;
    for_each_class(depth, used, [&](int, long added, int next_used) { descend_min(depth + 1, next_used, internal + added); });
  }

  void descend_low(int depth, int used, long c0, int limit) {
    if (count_ >= limit) return;
    if (depth == n_) {
      ++count_;
      return;
    }
    for_each_class(depth, used, [&](int c, long, int next_used) {
      if (g_.edges_within(VertexSet(classes_[c])) <= c0) descend_low(depth + 1, next_used, c0, limit);
    });
  }

  const Graph& g_;
  int n_;
  int r_;
  std::vector<int> order_;
  std::vector<Bits> classes_;
  std::vector<int> assign_;
  std::vector<int> best_assign_;
  long best_ = 0;
  int optima_ = 0;
  int count_ = 0;
};

void check_partition_args(const Graph& g, int r) {
  if (r < 2) throw argument_error("partitions need r >= 2");
  if (g.order() > partition_capacity)
    throw capacity_error("exact partition search is capped at " + std::to_string(partition_capacity) + " vertices");
}

}  // namespace

PartitionSearch min_internal_partition(const Graph& g, int r) {
  check_partition_args(g, r);
  PartitionSearch out;
  if (g.order() == 0) {
    out.partition = PartitionVec(r, {});
    out.unique = true;
    return out;
  }
  PartitionWalker walk(g, r);
  walk.minimize();
  out.partition = PartitionVec(r, walk.best_assign()).normalized();
  out.internal = walk.best();
  out.unique = walk.optima() == 1;
  return out;
}

int count_low_internal_partitions(const Graph& g, int r, long c0, int limit) {
  check_partition_args(g, r);
  if (g.order() == 0) return 1;
  PartitionWalker walk(g, r);
  walk.count_low(c0, limit);
  return walk.count();
}

StructureReport decompose(const Graph& g, const PartitionVec& p, std::optional<long> c0) {
  if (p.order() != g.order()) throw argument_error("partition does not match the graph's order");
  StructureReport rep;
  rep.partition = p;
  rep.counts = edge_counts(g, p);
  const int r = p.classes();
  const auto sizes = p.sizes();
  rep.e_in = rep.counts.internal_total();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const long missing = static_cast<long>(sizes[i]) * sizes[j] - rep.counts.cross_at(i, j);
      rep.cross_missing.push_back(missing);
      rep.e_out += missing;
    }
  rep.balance_gap = p.balance_gap();
  for (int i = 0; i < r; ++i) {
    const VertexSet vi = p.members(i);
    Bits a = 0;
    for_each_bit(vi.bits(), [&](int v) {
      if (g.degree_in(v, vi) >= 1) a |= bit(v);
    });
    rep.a_sets.push_back(VertexSet(a));
    rep.b_sets.push_back(vi - VertexSet(a));
  }
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet own = p.members(p.class_of(v));
    const VertexSet others = g.vertices() - own;
    rep.max_out_degree = std::max(rep.max_out_degree, others.size() - g.degree_in(v, others));
  }
  if (g.order() > 0) {
    const auto sr = q_radius(g);
    rep.perron_min = sr.perron.minCoeff();
  }
  rep.c0 = c0;
  if (c0) {
    const double c = static_cast<double>(*c0);
    const long max_internal = rep.counts.internal.empty()
                                  ? 0
                                  : *std::max_element(rep.counts.internal.begin(), rep.counts.internal.end());
    int max_a = 0;
    for (const auto& a : rep.a_sets) max_a = std::max(max_a, a.size());
    rep.checks.push_back({"class internal edges <= c0", max_internal <= *c0, double(max_internal), c});
    rep.checks.push_back({"e_in - e_out <= c0", rep.e_in - rep.e_out <= *c0, double(rep.e_in - rep.e_out), c});
    rep.checks.push_back({"|A_i| <= 2 c0", max_a <= 2 * *c0, double(max_a), 2 * c});
    const double out_cap = 2.0 * (r - 1) * r * c * c;
    rep.checks.push_back({"e_out <= 2(r-1) r c0^2", rep.e_out <= out_cap, double(rep.e_out), out_cap});
    rep.checks.push_back({"max out-degree <= c0 + 1", rep.max_out_degree <= *c0 + 1, double(rep.max_out_degree), c + 1});
  }
  return rep;
}

PartiteSubgraph partite_subgraph(const Graph& g, int p) {
  if (p < 2) throw argument_error("p must be at least 2");
  if (g.order() >= p + 1 && contains(g, complete_graph(p + 1)))
    throw precondition_error("graph contains K_" + std::to_string(p + 1));
  PartiteSubgraph out;
  const int n = g.order();
  out.t = turan_edge_count(n, p) - g.edge_count();
  if (out.t < 0) throw lab_error("K_{p+1}-free graph exceeds the Turan number");
  const auto best = min_internal_partition(g, p);
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges())
    if (best.partition.class_of(u) != best.partition.class_of(v)) kept.emplace_back(u, v);
  out.h0 = Graph::from_edges(n, kept);
  out.bound_ok = out.h0.edge_count() >= g.edge_count() - out.t;
  return out;
}

bool intersection_bound_check(const std::vector<VertexSet>& sets) {
  if (sets.empty()) throw argument_error("need at least one set");
  VertexSet meet = sets.front();
  VertexSet all;
  long total = 0;
  for (const auto& s : sets) {
    meet = meet & s;
    all = all | s;
    total += s.size();
  }
  const long p = static_cast<long>(sets.size());
  return meet.size() >= total - (p - 1) * all.size();
}

StructureReport stability_chain(const Graph& g, const Graph& f, const ExtremalRecord& rec, std::optional<long> c0) {
  if (g.order() != rec.n) throw argument_error("graph order does not match the record");
  if (canonical_graph6(f) != rec.f_graph6) throw argument_error("forbidden graph does not match the record");
  const std::string key = canonical_graph6(g);
  const auto listed = [&](const std::vector<GraphEntry>& list) {
    return std::any_of(list.begin(), list.end(), [&](const GraphEntry& e) { return e.graph6 == key; });
  };
  if (!listed(rec.ex_ssp_graphs)) throw argument_error("graph is not in the record's Ex_ssp");
  if (!rec.f_chromatic || *rec.f_chromatic < 3) throw argument_error("stability chain needs chi(F) >= 3");
  const int r = *rec.f_chromatic - 1;
  StructureReport rep = decompose(g, min_internal_partition(g, r).partition, c0);
  StabilityChain chain;
  chain.q = q_radius(g).radius;
  chain.balanced = rep.balance_gap <= 1;
  chain.c3_fit = g.order() * (1.0 - rep.perron_min);
  chain.edges_equal_ex = g.edge_count() == rec.ex;
  chain.member_of_ex = listed(rec.ex_graphs);
  rep.stability = chain;
  return rep;
}

}  // namespace sslab
