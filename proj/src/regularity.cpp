#include "sslab/regularity.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "sslab/containment.hpp"
#include "sslab/errors.hpp"

namespace sslab {

double density(const Graph& g, VertexSet u, VertexSet w) {
  if (u.empty() || w.empty()) throw argument_error("density needs nonempty sets");
  if (!(u & w).empty()) throw argument_error("density needs disjoint sets");
  if (((u | w) - g.vertices()).size() > 0) throw argument_error("set leaves the vertex range");
  return static_cast<double>(g.edges_between(u, w)) / (static_cast<double>(u.size()) * w.size());
}

int qualifying_size(double eps, int size) {
  // Guard against eps * size landing a hair above an integer.
  const double raw = eps * size;
  const double nearest = std::round(raw);
  const int k = std::abs(raw - nearest) < 1e-9 ? static_cast<int>(nearest) : static_cast<int>(std::ceil(raw));
  return std::max(k, 1);
}

namespace {

// Subsets of `set` with at least `min_size` members, as masks.
std::vector<Bits> subsets_at_least(VertexSet set, int min_size) {
  const auto members = set.members();
  const int k = static_cast<int>(members.size());
  std::vector<Bits> out;
  for (Bits code = 1; code < (Bits{1} << k); ++code) {
    if (std::popcount(code) < min_size) continue;
    Bits mask = 0;
    for_each_bit(code, [&](int i) { mask |= bit(members[i]); });
    out.push_back(mask);
  }
  return out;
}

}  // namespace

PairRegularity is_regular_pair(const Graph& g, VertexSet u, VertexSet w, double eps) {
  if (!(eps > 0 && eps <= 1)) throw argument_error("eps must lie in (0, 1]");
  if (u.size() > regular_pair_capacity || w.size() > regular_pair_capacity)
    throw capacity_error("regular-pair scan is capped at " + std::to_string(regular_pair_capacity) +
                         " vertices per side");
  PairRegularity out;
  out.pair_density = density(g, u, w);
  out.worst_a = u;
  out.worst_b = w;
  const auto as = subsets_at_least(u, qualifying_size(eps, u.size()));
  const auto wm = w.members();
  const int kw = static_cast<int>(wm.size());
  const int min_b = qualifying_size(eps, w.size());
  std::vector<int> into_a(kw);
  for (Bits a : as) {
    const double size_a = std::popcount(a);
    for (int i = 0; i < kw; ++i) into_a[i] = std::popcount(g.row(wm[i]) & a);
    // B runs through all subsets of W in Gray-code order, one member flipped per step.
    Bits code = 0;
    long e = 0;
    int size_b = 0;
    for (Bits step = 1; step < (Bits{1} << kw); ++step) {
      const int flip = std::countr_zero(step);
      code ^= bit(flip);
      if (code & bit(flip)) {
        e += into_a[flip];
        ++size_b;
      } else {
        e -= into_a[flip];
        --size_b;
      }
      if (size_b < min_b) continue;
      const double dev = std::abs(static_cast<double>(e) / (size_a * size_b) - out.pair_density);
      if (dev > out.worst_deviation) {
        out.worst_deviation = dev;
        out.worst_a = VertexSet(a);
        Bits b = 0;
        for_each_bit(code, [&](int i) { b |= bit(wm[i]); });
        out.worst_b = VertexSet(b);
      }
    }
  }
  out.regular = out.worst_deviation <= eps;
  return out;
}

double partition_irregularity(const Graph& g, const PartitionVec& parts, double eps) {
  if (parts.order() != g.order()) throw argument_error("partition does not match the graph's order");
  if (g.order() == 0) return 0;
  double mass = 0;
  for (int i = 0; i < parts.classes(); ++i)
    for (int j = i + 1; j < parts.classes(); ++j) {
      const VertexSet a = parts.members(i);
      const VertexSet b = parts.members(j);
      if (a.empty() || b.empty()) continue;
      if (!is_regular_pair(g, a, b, eps).regular) mass += static_cast<double>(a.size()) * b.size();
    }
  const double n = g.order();
  return mass / (n * n);
}

CountingPremiseReport counting_premise(const Graph& g, const std::vector<VertexSet>& classes, double eps,
                                       const Graph& f) {
  if (!(eps > 0 && eps <= 1)) throw argument_error("eps must lie in (0, 1]");
  if (static_cast<int>(classes.size()) != f.order())
    throw argument_error("need one class per vertex of F");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) throw argument_error("classes must be nonempty");
    if ((classes[i] - g.vertices()).size() > 0) throw argument_error("class leaves the vertex range");
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (!(classes[i] & classes[j]).empty()) throw argument_error("classes must be pairwise disjoint");
  }
  CountingPremiseReport rep;
  const int delta = f.max_degree();
  const double density_floor = delta > 0 ? (delta + 1) * std::pow(eps, 1.0 / delta) : 0.0;
  const double size_floor = f.order() / eps;
  bool all = true;
  for (int i = 0; i < f.order(); ++i) {
    const bool ok = classes[i].size() >= size_floor;
    rep.rows.push_back({i, i, "class size", ok, double(classes[i].size()), size_floor});
    all = all && ok;
  }
  for (auto [a, b] : f.edges()) {
    const auto reg = is_regular_pair(g, classes[a], classes[b], eps);
    rep.rows.push_back({a, b, "pair regular", reg.regular, reg.worst_deviation, eps});
    const bool dense = reg.pair_density >= density_floor;
    rep.rows.push_back({a, b, "pair density", dense, reg.pair_density, density_floor});
    all = all && reg.regular && dense;
  }
  rep.premises_hold = all;
  SubgraphMatcher matcher(f);
  if (auto w = matcher.find(g, classes)) {
    rep.embedding_found = true;
    rep.embedding = w->map;
  }
  if (rep.premises_hold && !rep.embedding_found)
    throw lab_error("counting premises hold but no class-respecting copy of F exists");
  return rep;
}

RegularPartitionSearch find_regular_partition(const Graph& g, int k, double eps) {
  const int n = g.order();
  if (n > regular_partition_search_limit)
    throw capacity_error("regular-partition search is capped at " + std::to_string(regular_partition_search_limit) +
                         " vertices");
  if (k < 1 || k > n) throw argument_error("need 1 <= k <= n");
  RegularPartitionSearch out;
  std::vector<int> assign(n, 0);
  // Restricted-growth strings with exactly k distinct values.
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == n) {
      if (used != k) return false;
      ++out.partitions_tried;
      PartitionVec p(k, assign);
      if (partition_irregularity(g, p, eps) <= eps) {
        out.found = p;
        return true;
      }
      return false;
    }
    if (k - used > n - v) return false;
    for (int c = 0; c <= std::min(used, k - 1); ++c) {
      assign[v] = c;
      if (self(self, v + 1, c == used ? used + 1 : used)) return true;
    }
    return false;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<VertexSet> read_class_file(std::istream& in) {
  std::vector<VertexSet> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string tok;
    Bits set = 0;
    while (fields >> tok) {
      int v = -1;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) v = -1;
      } catch (const std::exception&) {
        v = -1;
      }
      if (v < 0 || v >= max_vertices) throw parse_error("bad vertex index '" + tok + "' in class file", start);
      set |= bit(v);
    }
    out.push_back(VertexSet(set));
  }
  return out;
}

}  // namespace sslab
