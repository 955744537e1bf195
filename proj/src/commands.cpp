#include "sslab/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>

#include "sslab/canonical.hpp"
#include "sslab/containment.hpp"
#include "sslab/enumerate.hpp"
#include "sslab/errors.hpp"
#include "sslab/families.hpp"
#include "sslab/graph6.hpp"
#include "sslab/record_store.hpp"
#include "sslab/regularity.hpp"
#include "sslab/spectral.hpp"
#include "sslab/suites.hpp"

namespace sslab {

using nlohmann::json;

void ExperimentConfig::validate() const {
  if (!(eps > 0 && eps <= 1)) throw argument_error("--eps must lie in (0, 1]");
  if (!(tol > 0)) throw argument_error("--tol must be positive");
  if (workers < 1) throw argument_error("--workers must be at least 1");
  if (budget == 0) throw argument_error("--budget must be positive");
  if (n_range && (n_range->first > n_range->second || n_range->first < 0))
    throw argument_error("--n range is empty or negative");
}

json ExperimentConfig::to_json() const {
  json j;
  j["forbid"] = forbid ? json(*forbid) : json(nullptr);
  j["n"] = n_range ? json::array({n_range->first, n_range->second}) : json(nullptr);
  j["eps"] = eps;
  j["tol"] = tol;
  j["budget"] = budget == std::numeric_limits<std::size_t>::max() ? json(nullptr) : json(budget);
  j["workers"] = workers;
  j["out"] = out ? json(out->string()) : json(nullptr);
  j["cache"] = cache ? json(cache->string()) : json(nullptr);
  j["k"] = k;
  j["t"] = t;
  j["enumerate"] = enumerate;
  j["graph"] = graph ? json(*graph) : json(nullptr);
  j["c0"] = c0 ? json(*c0) : json(nullptr);
  j["r"] = r ? json(*r) : json(nullptr);
  j["classes"] = classes ? json(classes->string()) : json(nullptr);
  j["search_classes"] = search_classes ? json(*search_classes) : json(nullptr);
  return j;
}

namespace {

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw argument_error(std::string("bad integer '") + std::string(s) + "' for " + what);
  return v;
}

// A readable file (first non-blank line is graph6) wins over a bare family spec.
NamedGraph load_graph(const std::string& text) {
  if (text.starts_with("family:") || text.starts_with("g6:")) return parse_graph_arg(text);
  std::ifstream in(text);
  if (!in) return parse_graph_arg(text);
  auto graphs = read_graph6_lines(in);
  if (graphs.empty()) throw argument_error("no graph in " + text);
  return {graphs.front(), text};
}

bool is_complete(const Graph& f) { return f.edge_count() == binomial2(f.order()); }

json entries_graph6(const std::vector<GraphEntry>& list) {
  json out = json::array();
  for (const auto& e : list) out.push_back(e.graph6);
  return out;
}

bool listed(const std::vector<GraphEntry>& list, const std::string& g6) {
  return std::any_of(list.begin(), list.end(), [&](const GraphEntry& e) { return e.graph6 == g6; });
}

RecordOptions record_options(const ExperimentConfig& cfg) {
  RecordOptions o;
  o.enumeration.budget = cfg.budget;
  o.enumeration.workers = cfg.workers;
  o.enumeration.max_order = enumeration_capacity;
  o.eps = cfg.eps;
  o.tol = cfg.tol;
  return o;
}

std::optional<RecordStore> open_store(const ExperimentConfig& cfg) {
  if (auto dir = cache_dir(cfg.cache)) return RecordStore(*dir);
  return std::nullopt;
}

template <typename Fn>
LabReport timed(const std::string& name, const ExperimentConfig& cfg, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  LabReport rep(name, cfg.to_json());
  try {
    cfg.validate();
    body(rep);
  } catch (const lab_error& e) {
    rep.error(e.what());
  }
  rep.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return rep;
}

void record_rows(LabReport& rep, const ExtremalRecord& rec, const Graph& f) {
  const std::string at = " n=" + std::to_string(rec.n);
  bool sizes_ok = std::all_of(rec.ex_graphs.begin(), rec.ex_graphs.end(), [&](const GraphEntry& e) { return e.edges == rec.ex; });
  bool ties_ok = std::all_of(rec.ex_ssp_graphs.begin(), rec.ex_ssp_graphs.end(),
                             [&](const GraphEntry& e) { return spectral_tie(e.q, rec.ex_ssp, ssp_tie); });
  bool free_ok = true;
  for (const auto* list : {&rec.ex_graphs, &rec.ex_ssp_graphs})
    for (const auto& e : *list) free_ok = free_ok && is_free(graph6_decode(e.graph6), f);
  const double rayleigh = 4.0 * rec.ex / rec.n;
  rep.check("record invariants" + at, "ex_ssp >= 4 ex(n,F) / n; listed graphs F-free",
            sizes_ok && ties_ok && free_ok && rec.ex_ssp >= rayleigh - 1e-9 * std::max(1.0, rayleigh),
            {{"n", rec.n}, {"ex", rec.ex}, {"ex_ssp", rec.ex_ssp}, {"four_ex_over_n", rayleigh}, {"classes", rec.classes}});

  if (is_complete(f) && f.order() >= 2) {
    const int r = f.order() - 1;
    const std::string turan_g6 = canonical_graph6(turan(std::min(r, rec.n), rec.n));
    const bool exact = rec.ex == turan_edge_count(rec.n, r) && rec.ex_graphs.size() == 1 &&
                       rec.ex_graphs.front().graph6 == turan_g6;
    rep.check("turan number" + at, "T_r(n) is the unique extremal graph for K_{r+1}", exact,
              {{"n", rec.n}, {"ex", rec.ex}, {"t_r", turan_edge_count(rec.n, r)}});
    if (r >= 3 || rec.n <= r) {
      const bool spectral = rec.ex_ssp_graphs.size() == 1 && rec.ex_ssp_graphs.front().graph6 == turan_g6;
      rep.check("spectral turan" + at, "Ex_ssp(n,K_{r+1}) = {T_r(n)}", spectral,
                {{"n", rec.n}, {"ex_ssp", rec.ex_ssp}, {"members", rec.ex_ssp_graphs.size()}});
    } else if (r == 2) {
      // Every K_{s,n-s} has q = n, so all of them tie.
      std::set<std::string> want;
      for (int a = 1; a <= rec.n / 2; ++a)
        want.insert(canonical_graph6(complete_multipartite(std::vector<int>{a, rec.n - a})));
      std::set<std::string> got;
      for (const auto& e : rec.ex_ssp_graphs) got.insert(e.graph6);
      rep.check("spectral triangle" + at, "Ex_ssp(n,K_3) = {K_{s,n-s}}, strictly larger than Ex(n,K_3) for n >= 4",
                got == want && std::abs(rec.ex_ssp - rec.n) <= 1e-8 && (rec.n < 4 || got.size() > rec.ex_graphs.size()),
                {{"n", rec.n}, {"ex_ssp", rec.ex_ssp}, {"members", got.size()}, {"ex_members", rec.ex_graphs.size()}});
    }
  }

  bool contained = std::all_of(rec.ex_ssp_graphs.begin(), rec.ex_ssp_graphs.end(),
                               [&](const GraphEntry& e) { return listed(rec.ex_graphs, e.graph6); });
  std::string note;
  if (rec.f_chromatic && *rec.f_chromatic == 3)
    note = "r = 2: Ex_ssp need not lie in Ex (triangle: every K_{s,n-s} has q = n)";
  rep.observe("Ex_ssp in Ex" + at, "Ex_ssp(n,F) in Ex(n,F) for sufficiently large n",
              {{"n", rec.n},
               {"contained", contained},
               {"ex_graphs", entries_graph6(rec.ex_graphs)},
               {"ex_ssp_graphs", entries_graph6(rec.ex_ssp_graphs)},
               {"near_ties", entries_graph6(rec.near_ties)}},
              note);
  for (const auto& e : rec.ex_graphs) rep.artifact("Ex" + at, e.graph6);
  for (const auto& e : rec.ex_ssp_graphs) rep.artifact("Ex_ssp" + at, e.graph6);
  for (const auto& e : rec.near_ties) rep.artifact("near tie" + at, e.graph6);
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text, "--n");
    return {n, n};
  }
  const int lo = parse_int(std::string_view(text).substr(0, dots), "--n");
  const int hi = parse_int(std::string_view(text).substr(dots + 2), "--n");
  if (lo > hi) throw argument_error("--n range " + text + " is inverted");
  return {lo, hi};
}

NamedGraph parse_graph_arg(const std::string& text) {
  if (text.starts_with("g6:")) return {graph6_decode(std::string_view(text).substr(3)), text.substr(3)};
  const auto spec = parse_family(text.starts_with("family:") ? std::string_view(text).substr(7) : text);
  return {spec.resolve(), spec.to_string()};
}

json partition_json(const PartitionVec& p) {
  json assignment = json::array();
  for (int c : p.assignment()) assignment.push_back(c + 1);
  json classes = json::array();
  for (const auto& s : p.sets()) classes.push_back(s.members());
  return {{"r", p.classes()}, {"assignment", assignment}, {"classes", classes}, {"sizes", p.sizes()}};
}

json structure_json(const StructureReport& rep) {
  json j;
  j["partition"] = partition_json(rep.partition);
  j["internal_edges"] = rep.counts.internal;
  j["cross_present"] = rep.counts.cross;
  j["cross_missing"] = rep.cross_missing;
  j["e_in"] = rep.e_in;
  j["e_out"] = rep.e_out;
  j["balance_gap"] = rep.balance_gap;
  json a = json::array();
  json b = json::array();
  for (const auto& s : rep.a_sets) a.push_back(s.members());
  for (const auto& s : rep.b_sets) b.push_back(s.members());
  j["a_sets"] = a;
  j["b_sets"] = b;
  j["max_out_degree"] = rep.max_out_degree;
  j["perron_min"] = rep.perron_min;
  j["c0"] = rep.c0 ? json(*rep.c0) : json(nullptr);
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  j["checks"] = checks;
  if (rep.stability) {
    const auto& s = *rep.stability;
    j["stability"] = {{"q", s.q},
                      {"balanced", s.balanced},
                      {"c3_fit", s.c3_fit},
                      {"edges_equal_ex", s.edges_equal_ex},
                      {"member_of_ex", s.member_of_ex}};
  }
  return j;
}

LabReport cmd_extremal(const ExperimentConfig& cfg) {
  return timed("extremal", cfg, [&](LabReport& rep) {
    if (!cfg.forbid) throw argument_error("extremal needs --forbid");
    if (!cfg.n_range) throw argument_error("extremal needs --n");
    const auto [f, label] = parse_graph_arg(*cfg.forbid);
    RecordSource src(f, label, record_options(cfg), open_store(cfg));
    json records = json::array();
    int last = cfg.n_range->first - 1;
    try {
      for (int n = std::max(1, cfg.n_range->first); n <= cfg.n_range->second; ++n) {
        const ExtremalRecord& rec = src.get(n);
        record_rows(rep, rec, f);
        records.push_back(to_json(rec));
        last = n;
      }
    } catch (const lab_error& e) {
      rep.section("records", records);
      throw;
    }
    rep.section("records", records);
    rep.section("cache", {{"hits", src.cache_hits()}});

    const int lo = std::max(1, cfg.n_range->first);
    if (last >= lo && f.order() <= chromatic_capacity && chromatic_number(f) >= 2) {
      const auto seq = c0_sequence(src, lo, last);
      json terms = json::array();
      for (auto [n, c] : seq.terms) terms.push_back({n, c});
      rep.observe("c0 window", "c0 = lim sup (ex(n,F) - t_r(n))",
                  {{"r", seq.r.value_or(0)}, {"terms", terms}, {"window_sup", seq.window_sup.value_or(0)}},
                  "finite window only; the limit is not certified");
      for (const auto& row : hypothesis_check(src, std::max(2, lo), last)) {
        rep.observe("density hypotheses n=" + std::to_string(row.n),
                    "|ex(n,F) - ex(n-1,F) - pi(F) n| <= sigma n and |q(G_n) - 4 ex(n,F)/n| <= sigma",
                    {{"n", row.n},
                     {"ex", row.ex},
                     {"ex_prev", row.ex_prev},
                     {"pi", row.pi},
                     {"step_gap", row.step_gap},
                     {"four_ex_over_n", row.four_ex_over_n},
                     {"min_degree_count", row.min_degree_count},
                     {"min_degree_q", row.min_degree_q ? json(*row.min_degree_q) : json(nullptr)},
                     {"spectral_gap", row.spectral_gap ? json(*row.spectral_gap) : json(nullptr)}});
      }
    }
  });
}

LabReport cmd_verify(const ExperimentConfig& cfg) {
  return timed("verify-lemmas", cfg, [&](LabReport& rep) {
    const std::vector<SuiteResult> suites{
        turan_closed_form_suite(),        bipartite_suite(),      quotient_agreement_suite(), balancing_step_suite(),
        balancing_gap_suite(),  join_bound_suite(),     partite_subgraph_suite(2, 8),         partite_subgraph_suite(3, 7),
        adjacency_symmetry_suite(), graph6_roundtrip_suite(), edge_monotonicity_suite(),
        rayleigh_identity_suite(),  intersection_bound_suite()};
    for (const auto& s : suites) {
      rep.check(s.name, s.anchor, s.passed(),
                {{"instances", s.instances},
                 {"violations", s.violations},
                 {"metric", s.metric},
                 {"worst", s.worst},
                 {"seconds", s.seconds},
                 {"failures", s.failures}});
      for (const auto& f : s.failures) {
        const auto word = f.substr(0, f.find(' '));
        try {
          graph6_decode(word);
          rep.artifact("failing instance: " + s.name, word);
        } catch (const parse_error&) {
        }
      }
    }
  });
}

LabReport cmd_fan_problem(const ExperimentConfig& cfg) {
  return timed("fan-problem", cfg, [&](LabReport& rep) {
    if (cfg.k < 1 || cfg.t < 3) throw argument_error("fan-problem needs k >= 1 and t >= 3");
    if (!cfg.n_range) throw argument_error("fan-problem needs --n");
    const Graph f = fan(cfg.k, cfg.t);
    const int r = cfg.t - 1;
    const int a = cfg.k * (cfg.t - 2);
    for (int n = cfg.n_range->first; n <= cfg.n_range->second; ++n) {
      const std::string at = " n=" + std::to_string(n);
      if (a >= n || r > n) throw argument_error("n" + at + " too small for K_a join and T_r(n)");
      const Graph split = complete_split(a, n);
      const Graph tr = turan(r, n);
      const double q_split = q_radius(split, cfg.tol).radius;
      const double q_split_closed = complete_split_q(a, n);
      const double q_turan = q_radius(tr, cfg.tol).radius;
      const double q_turan_closed = turan_q_closed_form(n, r);
      rep.check("split radius" + at, "q(K_a v empty_{n-a}) from its equitable quotient",
                std::abs(q_split - q_split_closed) <= 1e-8, {{"solver", q_split}, {"closed", q_split_closed}});
      rep.check("turan radius" + at, "q(T_r(n)) closed form with n = kr + t", std::abs(q_turan - q_turan_closed) <= 1e-8,
                {{"solver", q_turan}, {"closed", q_turan_closed}});
      const std::string larger = spectral_tie(q_turan, q_split) ? "tie" : (q_turan > q_split ? "turan" : "split");
      rep.observe("turan vs split" + at, "Ex_ssp(n,F_{k,t}) versus K_{k(t-2)} v empty_{n-k(t-2)}",
                  {{"n", n}, {"a", a}, {"r", r}, {"q_turan", q_turan}, {"q_split", q_split}, {"larger", larger}});
      rep.artifact("T_r(n)" + at, graph6_encode(tr));
      rep.artifact("split" + at, graph6_encode(split));
      if (cfg.enumerate) {
        const ExtremalRecord rec = extremal_record(n, f, FamilySpec{"fan", {cfg.k, cfg.t}}.to_string(), record_options(cfg));
        const bool turan_top = listed(rec.ex_ssp_graphs, canonical_graph6(tr));
        const bool split_top = listed(rec.ex_ssp_graphs, canonical_graph6(split));
        rep.observe("true ex_ssp" + at, "ex_ssp(n,F) over every F-free graph",
                    {{"n", n},
                     {"ex_ssp", rec.ex_ssp},
                     {"ex_ssp_graphs", entries_graph6(rec.ex_ssp_graphs)},
                     {"turan_attains", turan_top},
                     {"split_attains", split_top},
                     {"split_f_free", is_free(split, f)},
                     {"turan_f_free", is_free(tr, f)}});
      }
    }
  });
}

LabReport cmd_structure(const ExperimentConfig& cfg) {
  return timed("structure", cfg, [&](LabReport& rep) {
    if (!cfg.graph) throw argument_error("structure needs --graph");
    const auto [g, label] = load_graph(*cfg.graph);
    std::optional<NamedGraph> f;
    if (cfg.forbid) f = parse_graph_arg(*cfg.forbid);
    int r = 2;
    if (cfg.r) {
      r = *cfg.r;
    } else if (f && f->graph.order() <= chromatic_capacity) {
      r = std::max(2, chromatic_number(f->graph) - 1);
    }
    rep.artifact("input", graph6_encode(g));

    std::optional<long> c0 = cfg.c0;
    std::optional<ExtremalRecord> rec;
    if (f && g.order() <= enumeration_capacity) {
      RecordSource src(f->graph, f->label, record_options(cfg), open_store(cfg));
      rec = src.get(g.order());
      if (!c0 && cfg.n_range && rec->f_chromatic && *rec->f_chromatic >= 2) {
        c0 = c0_sequence(src, std::max(1, cfg.n_range->first), cfg.n_range->second).window_sup;
      }
    }

    const auto best = min_internal_partition(g, r);
    rep.observe("optimal partition", "partition V_1..V_r minimizing sum e(V_i)",
                {{"r", r}, {"internal", best.internal}, {"unique", best.unique}});
    StructureReport sr;
    const std::string key = canonical_graph6(g);
    if (rec && f && listed(rec->ex_ssp_graphs, key) && rec->f_chromatic && *rec->f_chromatic >= 3 &&
        *rec->f_chromatic - 1 == r) {
      sr = stability_chain(g, f->graph, *rec, c0);
      const auto& s = *sr.stability;
      rep.observe("stability chain", "balanced parts, x_w > 1 - c3/n, e(G) = ex(n,F), G in Ex(n,F)",
                  {{"balance_gap", sr.balance_gap},
                   {"balanced", s.balanced},
                   {"perron_min", sr.perron_min},
                   {"c3_fit", s.c3_fit},
                   {"edges_equal_ex", s.edges_equal_ex},
                   {"member_of_ex", s.member_of_ex}});
    } else {
      sr = decompose(g, best.partition, c0);
      if (rec) rep.observe("stability chain", "G in Ex_ssp(n,F)", {{"in_ex_ssp", false}}, "graph is not spectral extremal");
    }

    // Unconditional bookkeeping identities.
    long pairs = 0;
    const auto sizes = sr.partition.sizes();
    for (std::size_t i = 0; i < sizes.size(); ++i)
      for (std::size_t j = i + 1; j < sizes.size(); ++j) pairs += static_cast<long>(sizes[i]) * sizes[j];
    const long present = sr.counts.cross_total();
    rep.check("edge bookkeeping", "e(G_in) + cross edges = e(G); cross edges + e(G_out) = sum n_i n_j",
              sr.e_in + present == g.edge_count() && present + sr.e_out == pairs,
              {{"e", g.edge_count()}, {"e_in", sr.e_in}, {"cross", present}, {"e_out", sr.e_out}});
    for (const auto& c : sr.checks)
      rep.observe(c.name, "structural bound against the supplied c0", {{"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    if (c0) {
      const int count = count_low_internal_partitions(g, r, *c0);
      rep.observe("partition uniqueness", "a unique partition with e(V_i) <= c0",
                  {{"c0", *c0}, {"partitions_found", count}, {"unique", count == 1}}, "search stops at 2");
    }
    if (f && is_complete(f->graph) && f->graph.order() >= 3 && is_free(g, f->graph)) {
      const auto fr = partite_subgraph(g, f->graph.order() - 1);
      rep.check("partite subgraph", "e(H0) >= e(G) - t", fr.bound_ok,
                {{"e", g.edge_count()}, {"t", fr.t}, {"e_h0", fr.h0.edge_count()}});
      rep.artifact("H0", graph6_encode(fr.h0));
    }
    rep.section("structure", structure_json(sr));
  });
}

LabReport cmd_regularity(const ExperimentConfig& cfg) {
  return timed("regularity", cfg, [&](LabReport& rep) {
    if (!cfg.graph) throw argument_error("regularity needs --graph");
    const auto [g, label] = load_graph(*cfg.graph);
    rep.artifact("input", graph6_encode(g));
    std::vector<VertexSet> classes;
    if (cfg.classes) {
      std::ifstream in(*cfg.classes);
      if (!in) throw argument_error("cannot read class file " + cfg.classes->string());
      classes = read_class_file(in);
    }
    if (!classes.empty()) {
      const auto parts = PartitionVec::from_sets(g.order(), classes);
      rep.section("partition", partition_json(parts));
      bool symmetric = true;
      bool monotone = true;
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
          const auto res = is_regular_pair(g, classes[i], classes[j], cfg.eps);
          symmetric = symmetric && density(g, classes[i], classes[j]) == density(g, classes[j], classes[i]);
          if (res.regular) monotone = monotone && is_regular_pair(g, classes[i], classes[j], std::min(1.0, 2 * cfg.eps)).regular;
          rep.observe("pair " + std::to_string(i + 1) + "," + std::to_string(j + 1),
                      "|d(A,B) - d(U,W)| <= eps for |A| >= eps|U|, |B| >= eps|W|",
                      {{"density", res.pair_density},
                       {"regular", res.regular},
                       {"worst_deviation", res.worst_deviation},
                       {"worst_a", res.worst_a.members()},
                       {"worst_b", res.worst_b.members()},
                       {"min_a", qualifying_size(cfg.eps, classes[i].size())},
                       {"min_b", qualifying_size(cfg.eps, classes[j].size())}});
        }
      rep.check("density symmetry", "d(U,W) = e(U,W)/(|U||W|)", symmetric);
      rep.check("eps monotonicity", "regular at eps implies regular at larger eps", monotone);
      const double mass = partition_irregularity(g, parts, cfg.eps);
      rep.observe("partition irregularity", "sum over irregular pairs |V_i||V_j| <= eps n^2",
                  {{"mass_over_n2", mass}, {"eps_regular", mass <= cfg.eps}});
      if (cfg.forbid) {
        const auto [f, flabel] = parse_graph_arg(*cfg.forbid);
        if (static_cast<int>(classes.size()) == f.order()) {
          bool consistent = true;
          CountingPremiseReport cp;
          try {
            cp = counting_premise(g, classes, cfg.eps, f);
          } catch (const lab_error& e) {
            if (std::string(e.what()).find("premises hold") == std::string::npos) throw;
            consistent = false;
          }
          json rows = json::array();
          for (const auto& row : cp.rows)
            rows.push_back({{"f_edge", {row.fu, row.fv}},
                            {"premise", row.premise},
                            {"pass", row.pass},
                            {"value", row.value},
                            {"threshold", row.threshold}});
          rep.observe("counting premises", "d(X_i,X_j) >= (Delta(F)+1) eps^{1/Delta(F)} and |X_i| >= |V(F)|/eps",
                      {{"rows", rows}, {"premises_hold", cp.premises_hold}, {"embedding_found", cp.embedding_found},
                       {"embedding", cp.embedding}});
          rep.check("premises imply embedding", "there exists an injective homomorphism F -> G", consistent,
                    {{"premises_hold", cp.premises_hold}, {"embedding_found", cp.embedding_found}});
        } else {
          rep.observe("counting premises", "one class per vertex of F", {}, "class count differs from |V(F)|; skipped");
        }
      }
    }
    if (cfg.search_classes) {
      const auto found = find_regular_partition(g, *cfg.search_classes, cfg.eps);
      rep.observe("regular partition search", "eps-regular partition into k classes",
                  {{"k", *cfg.search_classes},
                   {"tried", found.partitions_tried},
                   {"found", found.found ? partition_json(*found.found) : json(nullptr)}},
                  "exhaustive diagnostic, not scalable");
    }
  });
}

LabReport cmd_records(const ExperimentConfig& cfg) {
  return timed("records", cfg, [&](LabReport& rep) {
    const auto dir = cache_dir(cfg.cache);
    if (!dir) throw argument_error("records needs --cache or LAB_CACHE_DIR");
    RecordStore store(*dir);
    json list = json::array();
    for (const auto& e : store.list()) {
      list.push_back({{"file", e.file.filename().string()},
                      {"version", e.version},
                      {"n", e.n},
                      {"f", e.f_label},
                      {"f_graph6", e.f_graph6},
                      {"current", e.current}});
    }
    rep.observe("cached records", "record store inspection",
                {{"dir", dir->string()}, {"version", record_version}, {"entries", list}});
  });
}

}  // namespace sslab
