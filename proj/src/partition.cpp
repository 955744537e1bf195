#include "sslab/partition.hpp"

#include <algorithm>
#include <numeric>

#include "sslab/errors.hpp"

namespace sslab {

PartitionVec::PartitionVec(int r, std::vector<int> assignment)
    : r_(r), assignment_(std::move(assignment)), sets_(r < 0 ? 0 : r) {
  if (r < 1) throw argument_error("partition needs at least one class");
  if (assignment_.size() > static_cast<std::size_t>(max_vertices))
    throw capacity_error("partition over more than 64 vertices");
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    const int c = assignment_[v];
    if (c < 0 || c >= r) throw argument_error("class index out of range at vertex " + std::to_string(v));
    sets_[c] = sets_[c] | VertexSet(bit(static_cast<int>(v)));
  }
}

PartitionVec PartitionVec::from_sets(int n, std::span<const VertexSet> classes) {
  std::vector<int> assignment(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].bits() & ~low_bits(n)) throw argument_error("class contains a vertex outside 0..n-1");
    for (int v : classes[c].members()) {
      if (assignment[v] != -1) throw argument_error("vertex " + std::to_string(v) + " in two classes");
      assignment[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < n; ++v)
    if (assignment[v] == -1) throw argument_error("vertex " + std::to_string(v) + " not covered");
  return PartitionVec(static_cast<int>(classes.size()), std::move(assignment));
}

std::vector<int> PartitionVec::sizes() const {
  std::vector<int> out;
  out.reserve(sets_.size());
  for (auto s : sets_) out.push_back(s.size());
  return out;
}

int PartitionVec::balance_gap() const {
  const auto s = sizes();
  if (s.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return *hi - *lo;
}

PartitionVec PartitionVec::normalized() const {
  std::vector<int> order(r_);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int c) { return sets_[c].empty() ? max_vertices : std::countr_zero(sets_[c].bits()); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<int> relabel(r_);
  for (int i = 0; i < r_; ++i) relabel[order[i]] = i;
  std::vector<int> a(assignment_.size());
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = relabel[assignment_[v]];
  return PartitionVec(r_, std::move(a));
}

std::size_t pair_index(int r, int i, int j) {
  if (i > j) std::swap(i, j);
  // pairs before row i: sum_{k<i} (r-1-k)
  return static_cast<std::size_t>(i * (2 * r - i - 1) / 2 + (j - i - 1));
}

long EdgeCounts::cross_at(int i, int j) const {
  if (i == j) throw argument_error("cross_at needs distinct classes");
  return cross[pair_index(r, i, j)];
}

long EdgeCounts::internal_total() const { return std::accumulate(internal.begin(), internal.end(), 0L); }
long EdgeCounts::cross_total() const { return std::accumulate(cross.begin(), cross.end(), 0L); }

EdgeCounts edge_counts(const Graph& g, const PartitionVec& parts) {
  if (parts.order() != g.order()) throw argument_error("partition does not cover the graph's vertices");
  const int r = parts.classes();
  EdgeCounts out;
  out.r = r;
  out.internal.assign(r, 0);
  out.cross.assign(static_cast<std::size_t>(r) * (r - 1) / 2, 0);
  for (int i = 0; i < r; ++i) {
    out.internal[i] = g.edges_within(parts.members(i));
    for (int j = i + 1; j < r; ++j)
      out.cross[pair_index(r, i, j)] = g.edges_between(parts.members(i), parts.members(j));
  }
  return out;
}

}  // namespace sslab
