#include "sslab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <type_traits>

#include "sslab/containment.hpp"
#include "sslab/enumerate.hpp"
#include "sslab/families.hpp"
#include "sslab/graph6.hpp"
#include "sslab/spectral.hpp"
#include "sslab/structure.hpp"

namespace sslab {

namespace {

constexpr std::size_t kept_failures = 10;

class Sweep {
public:
  Sweep(std::string name, std::string anchor, std::string metric, bool slack)
      : slack_(slack), start_(std::chrono::steady_clock::now()) {
    res_.name = std::move(name);
    res_.anchor = std::move(anchor);
    res_.metric = std::move(metric);
    res_.worst = slack ? std::numeric_limits<double>::infinity() : 0.0;
  }

  // value is a slack (must be > 0, or >= 0 when `strict` is false) or an
  // error (must be <= tol). `what` is a string or a callable producing one,
  // only evaluated on failure.
  template <typename What>
  void slack(double value, What&& what, bool strict = true) {
    ++res_.instances;
    res_.worst = std::min(res_.worst, value);
    if (strict ? !(value > 0) : !(value >= 0)) fail(std::forward<What>(what));
  }
  template <typename What>
  void error(double value, double tol, What&& what) {
    ++res_.instances;
    res_.worst = std::max(res_.worst, value);
    if (!(value <= tol)) fail(std::forward<What>(what));
  }
  template <typename What>
  void fail(What&& what) {
    ++res_.violations;
    if (res_.failures.size() >= kept_failures) return;
    if constexpr (std::is_invocable_v<What>)
      res_.failures.push_back(what());
    else
      res_.failures.push_back(std::string(what));
  }

  SuiteResult done() {
    res_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (slack_ && res_.instances == 0) res_.worst = 0;
    return res_;
  }

private:
  bool slack_;
  std::chrono::steady_clock::time_point start_;
  SuiteResult res_;
};

std::string sizes_text(const std::vector<int>& sizes) {
  std::string s = "K(";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + ")";
}

// Non-increasing compositions of n into exactly r positive parts.
void for_each_partition(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left, int slots, int cap) -> void {
    if (slots == 0) {
      if (left == 0) fn(parts);
      return;
    }
    for (int x = std::min(left - (slots - 1), cap); x * slots >= left && x >= 1; --x) {
      parts.push_back(x);
      self(self, left - x, slots - 1, x);
      parts.pop_back();
    }
  };
  rec(rec, n, r, n);
}

double quotient_q(const std::vector<int>& sizes) { return quotient_multipartite(sizes).radius(); }

}  // namespace

SuiteResult turan_closed_form_suite(int r_max, int n_max, double tol) {
  Sweep s("turan closed form", "q(T_r(n)) closed form with n = kr + t", "max |solver - closed form|", false);
  for (int r = 2; r <= r_max; ++r)
    for (int n = r; n <= n_max; ++n) {
      const Graph t = turan(r, n);
      const double err = std::abs(q_radius(t).radius - turan_q_closed_form(n, r));
      s.error(err, tol, "T_" + std::to_string(r) + "(" + std::to_string(n) + ") " + graph6_encode(t));
    }
  return s.done();
}

SuiteResult bipartite_suite(int n_max, double tol) {
  Sweep s("complete bipartite radius", "q(K_{n1,n2}) = n", "max |q - n|", false);
  for (int n = 2; n <= n_max; ++n)
    for (int a = 1; a < n; ++a) {
      const std::vector<int> sizes{a, n - a};
      const Graph g = complete_multipartite(sizes);
      s.error(std::abs(q_radius(g).radius - n), tol, sizes_text(sizes));
    }
  return s.done();
}

SuiteResult quotient_agreement_suite(int n_max, int r_max, double tol) {
  Sweep s("quotient radius", "q(K) = rho(Q(K)/pi)", "max |solver - quotient|", false);
  for (int n = 2; n <= n_max; ++n)
    for (int r = 2; r <= std::min(r_max, n); ++r)
      for_each_partition(n, r, [&](const std::vector<int>& sizes) {
        const double dense = q_radius(complete_multipartite(sizes)).radius;
        s.error(std::abs(dense - quotient_q(sizes)), tol, sizes_text(sizes));
      });
  return s.done();
}

SuiteResult balancing_step_suite(const std::vector<int>& rs, int n_max) {
  Sweep s("balancing step", "q(K_{..,n_i-1,..,n_j+1,..}) > q(K_{n_1,..,n_r})", "min q(K') - q(K) - 1e-12", true);
  for (int r : rs)
    for (int n = r; n <= n_max; ++n)
      for_each_partition(n, r, [&](const std::vector<int>& sizes) {
        const double q = quotient_q(sizes);
        for (int i = 0; i < r; ++i)
          for (int j = i + 1; j < r; ++j) {
            if (sizes[i] - sizes[j] < 2) continue;
            auto moved = sizes;
            --moved[i];
            ++moved[j];
            s.slack(quotient_q(moved) - q - 1e-12, sizes_text(sizes) + " -> " + sizes_text(moved));
          }
      });
  return s.done();
}

SuiteResult balancing_gap_suite(const std::vector<int>& rs, int n_max) {
  Sweep s("turan gap", "q(T_r(n)) > q(K_{n_1,..,n_r}) + 2(r-2)/(r^2 n)", "min q(T_r(n)) - q(K) - 2(r-2)/(r^2 n)", true);
  for (int r : rs)
    for (int n = r; n <= n_max; ++n) {
      const double qt = quotient_q(turan_sizes(r, n));
      const double bound = 2.0 * (r - 2) / (static_cast<double>(r) * r * n);
      for_each_partition(n, r, [&](const std::vector<int>& sizes) {
        if (sizes.front() - sizes.back() < 2) return;
        s.slack(qt - quotient_q(sizes) - bound, sizes_text(sizes));
      });
    }
  return s.done();
}

SuiteResult join_bound_suite(int instances, std::uint64_t seed, int n_max) {
  Sweep s("join bound", "q(G1 v G2) < q(empty_an v G2) + 4 c1 (1-alpha) n / (alpha n - 2 c1)^2", "min bound - q(G)", true);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_a(2, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int done = 0; done < instances;) {
    const int a = pick_a(rng);
    // a > 2 c1 with c1 = max(e(G1), 1/2) caps e(G1) at floor((a-1)/2).
    const int e_cap = std::min({3, (a - 1) / 2, static_cast<int>(binomial2(a))});
    const int n = std::uniform_int_distribution<int>(a + 1, n_max)(rng);
    const int e1 = std::uniform_int_distribution<int>(0, e_cap)(rng);
    const double c1 = std::max(static_cast<double>(e1), 0.5);
    auto pairs = complete_graph(a).edges();
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(e1);
    const Graph g1 = Graph::from_edges(a, pairs);
    const Graph g2 = random_graph(n - a, unit(rng), rng());
    const Graph g = join(g1, g2);
    const Graph base = join(empty_graph(a), g2);
    const double alpha = static_cast<double>(a) / n;
    const double extra = 4 * c1 * (1 - alpha) * n / std::pow(alpha * n - 2 * c1, 2);
    const double q = q_radius(g).radius;
    s.slack(q_radius(base).radius + extra - q, graph6_encode(g) + " a=" + std::to_string(a));
    ++done;
  }
  return s.done();
}

SuiteResult partite_subgraph_suite(int p, int n_max) {
  Sweep s("partite subgraph K_" + std::to_string(p + 1) + "-free", "e(H0) >= e(G) - t",
          "min e(H0) - e(G) + t", true);
  const Graph clique = complete_graph(p + 1);
  for (int n = 1; n <= n_max; ++n)
    enumerate_ffree(n, clique, {}, [&](const Graph& g) {
      const auto res = partite_subgraph(g, p);
      bool sub = res.h0.order() == g.order();
      for (auto [u, v] : res.h0.edges()) sub = sub && g.adjacent(u, v);
      const double slack = static_cast<double>(res.h0.edge_count() - g.edge_count() + res.t);
      if (!sub || !is_colorable(res.h0, p) || res.bound_ok != (slack >= 0)) {
        s.fail(graph6_encode(g) + " malformed H0");
        return;
      }
      s.slack(slack, graph6_encode(g), false);
    });
  return s.done();
}

SuiteResult adjacency_symmetry_suite(int instances, std::uint64_t seed) {
  Sweep s("adjacency symmetry", "Q(G) = D(G) + A(G)", "max asymmetry", false);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < instances; ++k) {
    const int n = std::uniform_int_distribution<int>(1, 64)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng());
    const auto a = adjacency_matrix<double>(g);
    const auto q = signless_laplacian<double>(g);
    double err = (a - a.transpose()).cwiseAbs().maxCoeff() + (q - q.transpose()).cwiseAbs().maxCoeff();
    for (int v = 0; v < n; ++v) {
      err += std::abs(a.row(v).sum() - g.degree(v)) + std::abs(q(v, v) - g.degree(v)) + std::abs(a(v, v));
      for (int u = 0; u < n; ++u)
        if (u != v) err += std::abs(a(u, v) - (g.adjacent(u, v) ? 1.0 : 0.0));
    }
    s.error(err, 0.0, [&] { return to_string(g); });
  }
  return s.done();
}

SuiteResult graph6_roundtrip_suite(int instances, std::uint64_t seed) {
  Sweep s("graph6 round trip", "graph6 interchange", "mismatches", false);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < instances; ++k) {
    const int n = std::uniform_int_distribution<int>(0, 62)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng());
    const std::string text = graph6_encode(g);
    const bool ok = graph6_decode(text) == g && graph6_encode(graph6_decode(text)) == text;
    s.error(ok ? 0.0 : 1.0, 0.0, text);
  }
  return s.done();
}

SuiteResult edge_monotonicity_suite(int n_max, int samples, std::uint64_t seed) {
  Sweep s("edge monotonicity", "adding an edge does not decrease q", "min q(G+uv) - q(G) + 1e-10", true);
  std::mt19937_64 rng(seed);
  const Graph never = complete_graph(n_max + 1);
  for (int n = 2; n <= n_max; ++n)
    enumerate_ffree(n, never, {}, [&](const Graph& g) {
      auto gaps = g.non_edges();
      if (gaps.empty()) return;
      std::shuffle(gaps.begin(), gaps.end(), rng);
      const double q = q_radius(g).radius;
      for (int k = 0; k < samples && k < static_cast<int>(gaps.size()); ++k) {
        const auto [u, v] = gaps[k];
        s.slack(q_radius(g.with_edge(u, v)).radius - q + 1e-10,
                graph6_encode(g) + " +" + std::to_string(u) + "," + std::to_string(v), false);
      }
    });
  return s.done();
}

SuiteResult rayleigh_identity_suite(int instances, std::uint64_t seed) {
  Sweep s("rayleigh identity", "x^T Q x = sum_{ij in E} (x_i + x_j)^2", "max relative gap",
          false);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int k = 0; k < instances; ++k) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng());
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = coord(rng);
    const double matrix_form = x.dot(signless_laplacian<double>(g) * x);
    double edge_form = 0;
    for (auto [u, v] : g.edges()) edge_form += (x(u) + x(v)) * (x(u) + x(v));
    const double gap = std::abs(matrix_form - edge_form) / std::max(1.0, std::abs(edge_form));
    s.error(gap, 1e-12, graph6_encode(g));
  }
  return s.done();
}

SuiteResult intersection_bound_suite(int instances, std::uint64_t seed) {
  Sweep s("intersection bound", "|V_1 n ... n V_p| >= sum |V_i| - (p-1) |V_1 u ... u V_p|", "min |meet| - (sum |V_i| - (p-1)|union|)", true);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < instances; ++k) {
    std::vector<VertexSet> sets;
    for (int i = 0; i < 3; ++i) sets.push_back(VertexSet(rng() & low_bits(12)));
    VertexSet meet = sets[0] & sets[1] & sets[2];
    VertexSet all = sets[0] | sets[1] | sets[2];
    const double slack = meet.size() - (sets[0].size() + sets[1].size() + sets[2].size() - 2.0 * all.size());
    if (intersection_bound_check(sets) != (slack >= 0)) {
      s.fail("checker disagrees with direct count");
      continue;
    }
    s.slack(slack, "random triple", false);
  }
  return s.done();
}

}  // namespace sslab
