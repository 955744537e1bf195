#include "sslab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "sslab/canonical.hpp"
#include "sslab/containment.hpp"
#include "sslab/errors.hpp"
#include "sslab/graph6.hpp"
#include "sslab/spectral.hpp"

namespace sslab {

namespace {

class Generator {
public:
  Generator(int n, const Graph& f, const EnumerationOptions& opts)
      : n_(n), matcher_(f), budget_(opts.budget) {
    const auto orbit = canonical_form(f).orbit;
    for (int u = 0; u < f.order(); ++u)
      if (orbit[u] == u) starts_.push_back(u);
  }

  // Accepted children of a canonical parent, as canonical forms.
  std::vector<Graph> children(const Graph& parent) {
    const std::size_t used = nodes_.fetch_add(1) + 1;
    if (used > budget_) {
      stop_.store(true);
      throw budget_exhausted(used - 1, deepest_.load(), emitted_.load());
    }
    const int m = parent.order();
    const int v = m;
    std::vector<Bits> rows(m + 1);
    std::set<std::string> seen;
    std::vector<Graph> out;
    const Bits all = low_bits(m);
    for (Bits s = 0;; ++s) {
      const int dv = std::popcount(s);
      bool keep = true;
      for (int u = 0; u < m && keep; ++u) {
        rows[u] = parent.row(u) | (((s >> u) & 1U) ? bit(v) : 0);
        keep = std::popcount(rows[u]) <= dv;
      }
      if (keep) {
        rows[v] = s;
        const Graph child = Graph::from_rows(m + 1, rows);
        if (!(matcher_.pattern().order() <= m + 1 && matcher_.exists_through(child, v, starts_))) {
          const CanonicalForm cf = canonical_form(child);
          int pick = -1;
          for (int u = 0; u <= m; ++u)
            if (child.degree(u) == dv && (pick < 0 || cf.position[u] > cf.position[pick])) pick = u;
          if (cf.orbit[v] == cf.orbit[pick] && seen.insert(graph6_encode(cf.form)).second)
            out.push_back(cf.form);
        }
      }
      if (s == all) break;
    }
    note_depth(m + 1);
    return out;
  }

  void walk(const Graph& g, const GraphVisitor& visit, std::mutex* lock) {
    if (stop_.load()) throw budget_exhausted(nodes_.load(), deepest_.load(), emitted_.load());
    if (g.order() == n_) {
      ++emitted_;
      if (lock) {
        std::scoped_lock guard(*lock);
        visit(g);
      } else {
        visit(g);
      }
      return;
    }
    for (const Graph& child : children(g)) walk(child, visit, lock);
  }

private:
  void note_depth(int d) {
    int cur = deepest_.load();
    while (d > cur && !deepest_.compare_exchange_weak(cur, d)) {
    }
  }

  int n_;
  SubgraphMatcher matcher_;
  std::vector<int> starts_;
  std::size_t budget_;
  std::atomic<std::size_t> nodes_{0};
  std::atomic<std::size_t> emitted_{0};
  std::atomic<int> deepest_{0};
  std::atomic<bool> stop_{false};
};

}  // namespace

std::size_t enumerate_ffree(int n, const Graph& f, const EnumerationOptions& opts, const GraphVisitor& visit) {
  if (n < 0) throw argument_error("order must be nonnegative");
  if (opts.max_order > enumeration_capacity)
    throw capacity_error("enumeration is capped at order " + std::to_string(enumeration_capacity));
  if (n > opts.max_order)
    throw capacity_error("order " + std::to_string(n) + " exceeds the enumeration limit " +
                         std::to_string(opts.max_order));
  if (opts.workers < 1) throw argument_error("at least one worker is needed");
  if (f.order() < 1) throw argument_error("forbidden graph needs at least one vertex");

  Generator gen(n, f, opts);
  std::size_t count = 0;
  const GraphVisitor counted = [&](const Graph& g) {
    ++count;
    visit(g);
  };
  if (opts.workers == 1 || n < 4) {
    gen.walk(Graph(0), counted, nullptr);
    return count;
  }

  // Expand breadth-first until there is enough work to share, then hand out
  // subtrees.
  std::vector<Graph> frontier{Graph(0)};
  while (frontier.front().order() < n - 2 && frontier.size() < 8 * opts.workers) {
    std::vector<Graph> next;
    for (const auto& g : frontier)
      for (auto& c : gen.children(g)) next.push_back(std::move(c));
    if (next.empty()) return 0;
    frontier = std::move(next);
  }
  std::mutex lock;
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < opts.workers; ++w)
    pool.emplace_back([&] {
      try {
        for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) gen.walk(frontier[i], counted, &lock);
      } catch (...) {
        std::scoped_lock guard(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return count;
}

std::vector<Graph> collect_ffree(int n, const Graph& f, const EnumerationOptions& opts) {
  std::vector<std::pair<std::string, Graph>> keyed;
  enumerate_ffree(n, f, opts, [&](const Graph& g) { keyed.emplace_back(graph6_encode(g), g); });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

double turan_density(int chromatic) {
  const int r = chromatic - 1;
  return r < 1 ? 0.0 : 1.0 - 1.0 / r;
}

ExtremalRecord extremal_record(int n, const Graph& f, const std::string& label, const RecordOptions& opts) {
  if (n < 1) throw argument_error("extremal records need n >= 1");
  if (opts.eps <= 0) throw argument_error("eps must be positive");
  ExtremalRecord rec;
  rec.n = n;
  rec.f_label = label;
  rec.f_graph6 = canonical_graph6(f);
  rec.min_degree_eps = opts.eps;
  if (f.order() <= chromatic_capacity) rec.f_chromatic = chromatic_number(f);
  const double pi = rec.f_chromatic ? turan_density(*rec.f_chromatic) : 0.0;
  const double min_degree_floor = (pi - opts.eps) * n;

  // Keep every graph that can still end up in a list; trim once the maxima are known.
  struct Candidate {
    Graph g;
    long edges;
    double q;
  };
  std::vector<Candidate> by_edges;
  std::vector<Candidate> by_q;
  long best_edges = -1;
  double best_q = -1;
  const SpectralOptions sopts{.tol = opts.tol};

  enumerate_ffree(n, f, opts.enumeration, [&](const Graph& g) {
    ++rec.classes;
    const long e = g.edge_count();
    const double q = q_radius(g, sopts).radius;
    if (e > best_edges) {
      best_edges = e;
      by_edges.clear();
    }
    if (e == best_edges) by_edges.push_back({g, e, q});
    if (q > best_q) {
      best_q = q;
      std::erase_if(by_q, [&](const Candidate& c) { return !spectral_tie(c.q, best_q, ssp_near_tie); });
    }
    if (spectral_tie(q, best_q, ssp_near_tie)) by_q.push_back({g, e, q});
    if (rec.f_chromatic && g.min_degree() > min_degree_floor) {
      ++rec.min_degree_count;
      rec.min_degree_q = std::max(rec.min_degree_q.value_or(q), q);
    }
  });

  auto entry = [&](const Candidate& c) {
    if (contains(c.g, f)) throw lab_error("enumerated graph " + graph6_encode(c.g) + " contains F");
    return GraphEntry{graph6_encode(c.g), c.edges, c.q};
  };
  auto by_key = [](const GraphEntry& a, const GraphEntry& b) { return a.graph6 < b.graph6; };

  rec.ex = best_edges;
  for (const auto& c : by_edges) rec.ex_graphs.push_back(entry(c));
  std::sort(rec.ex_graphs.begin(), rec.ex_graphs.end(), by_key);

  rec.ex_ssp = best_q;
  for (const auto& c : by_q) {
    if (spectral_tie(c.q, best_q, ssp_tie))
      rec.ex_ssp_graphs.push_back(entry(c));
    else
      rec.near_ties.push_back(entry(c));
  }
  std::sort(rec.ex_ssp_graphs.begin(), rec.ex_ssp_graphs.end(), by_key);
  std::sort(rec.near_ties.begin(), rec.near_ties.end(), by_key);

  if (rec.f_chromatic && *rec.f_chromatic >= 2)
    rec.c0_term = rec.ex - turan_edge_count(n, *rec.f_chromatic - 1);

  if (rec.ex_ssp < 4.0 * rec.ex / n - 1e-9 * std::max(1.0, rec.ex_ssp))
    throw numeric_error("ex_ssp fell below 4 ex / n", 4.0 * rec.ex / n - rec.ex_ssp);
  return rec;
}

}  // namespace sslab
