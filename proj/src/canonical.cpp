#include "sslab/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "sslab/graph6.hpp"

namespace sslab {

namespace {

struct Cells {
  std::array<Bits, max_vertices> cell{};
  int count = 0;
};

// Splits every cell by neighbour counts into each splitter cell until the
// ordered partition is equitable. Sub-cells are ordered by ascending count,
// which keeps the result invariant under relabeling.
void refine(const Graph& g, Cells& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < p.count && !changed; ++w) {
      const Bits splitter = p.cell[w];
      Cells next;
      for (int c = 0; c < p.count; ++c) {
        const Bits x = p.cell[c];
        if (std::popcount(x) == 1) {
          next.cell[next.count++] = x;
          continue;
        }
        std::array<Bits, max_vertices + 1> by_count{};
        int lo = max_vertices + 1;
        int hi = -1;
        for_each_bit(x, [&](int v) {
          const int k = std::popcount(g.row(v) & splitter);
          by_count[k] |= bit(v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        });
        if (lo == hi) {
          next.cell[next.count++] = x;
          continue;
        }
        changed = true;
        for (int k = lo; k <= hi; ++k)
          if (by_count[k]) next.cell[next.count++] = by_count[k];
      }
      if (changed) p = next;
    }
  }
}

using Perm = std::array<int, max_vertices>;
using Cert = std::array<Bits, max_vertices>;

struct UnionFind {
  std::array<int, max_vertices> parent{};
  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Search {
public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Cells root;
    if (n_ > 0) {
      root.cell[0] = low_bits(n_);
      root.count = 1;
    }
    refine(g_, root);
    std::vector<int> prefix;
    descend(root, prefix);
  }

  const Perm& best_lab() const { return best_lab_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t leaves() const { return leaves_; }

private:
  int compare(const Cert& a, const Cert& b) const {
    for (int i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  // gamma maps from_lab[i] -> to_lab[i]
  void record_automorphism(const Perm& from_lab, const Perm& to_lab) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[from_lab[i]] = to_lab[i];
    generators_.push_back(gamma);
  }

  static int shared_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  // Returns the depth to resume at, or -1 to carry on normally. An
  // automorphism onto an explored leaf makes the rest of the current subtree
  // below the common ancestor redundant.
  int leaf(const Cells& p, const std::vector<int>& prefix) {
    ++leaves_;
    Perm lab{};
    Perm inv{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = std::countr_zero(p.cell[i]);
      inv[lab[i]] = i;
    }
    Cert cert{};
    for (int i = 0; i < n_; ++i) {
      Bits row = 0;
      for_each_bit(g_.row(lab[i]), [&](int u) { row |= bit(inv[u]); });
      cert[i] = row;
    }
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = prefix;
      return -1;
    }
    if (compare(cert, first_cert_) == 0) {
      record_automorphism(first_lab_, lab);
      return shared_prefix(prefix, first_path_);
    }
    const int cmp = compare(cert, best_cert_);
    if (cmp == 0) {
      record_automorphism(best_lab_, lab);
      return shared_prefix(prefix, best_path_);
    }
    if (cmp > 0) {
      best_cert_ = cert;
      best_lab_ = lab;
      best_path_ = prefix;
    }
    return -1;
  }

  int descend(const Cells& p, std::vector<int>& prefix) {
    int target = -1;
    for (int c = 0; c < p.count; ++c)
      if (std::popcount(p.cell[c]) > 1) {
        target = c;
        break;
      }
    if (target < 0) return leaf(p, prefix);
    const Bits cell = p.cell[target];
    Bits tried = 0;
    std::size_t seen_generators = static_cast<std::size_t>(-1);
    UnionFind orbits(n_);
    const int depth = static_cast<int>(prefix.size());
    int jump = -1;
    for_each_bit(cell, [&](int v) {
      if (jump >= 0) return;
      if (tried) {
        if (seen_generators != generators_.size()) {
          orbits = UnionFind(n_);
          for (const auto& gamma : generators_) {
            const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int x) { return gamma[x] == x; });
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) orbits.unite(x, gamma[x]);
          }
          seen_generators = generators_.size();
        }
        bool equivalent = false;
        for_each_bit(tried, [&](int u) { equivalent = equivalent || orbits.find(u) == orbits.find(v); });
        if (equivalent) return;
      }
      tried |= bit(v);
      Cells child;
      for (int c = 0; c < p.count; ++c) {
        if (c == target) {
          child.cell[child.count++] = bit(v);
          child.cell[child.count++] = cell & ~bit(v);
        } else {
          child.cell[child.count++] = p.cell[c];
        }
      }
      refine(g_, child);
      prefix.push_back(v);
      const int back = descend(child, prefix);
      prefix.pop_back();
      if (back >= 0 && back < depth) jump = back;
    });
    return jump;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  Cert first_cert_{};
  Cert best_cert_{};
  Perm first_lab_{};
  Perm best_lab_{};
  std::vector<int> first_path_;
  std::vector<int> best_path_;
  std::vector<Perm> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  Search search(g);
  search.run();
  CanonicalForm out;
  out.vertex_at.assign(search.best_lab().begin(), search.best_lab().begin() + n);
  out.position.assign(n, 0);
  for (int i = 0; i < n; ++i) out.position[out.vertex_at[i]] = i;
  out.form = g.permuted(out.position);
  UnionFind orbits(n);
  for (const auto& gamma : search.generators())
    for (int x = 0; x < n; ++x) orbits.unite(x, gamma[x]);
  out.orbit.resize(n);
  for (int v = 0; v < n; ++v) out.orbit[v] = orbits.find(v);
  out.generators = static_cast<int>(search.generators().size());
  out.leaves = search.leaves();
  return out;
}

std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_form(g).form); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).form == canonical_form(b).form;
}

}  // namespace sslab
