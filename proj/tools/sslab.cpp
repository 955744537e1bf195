#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sslab/commands.hpp"
#include "sslab/errors.hpp"

namespace {

struct Shared {
  std::string forbid;
  std::string n;
  std::string out;
  std::string cache;
  double eps = 0.1;
  double tol = 1e-10;
  std::size_t budget = 0;
  unsigned workers = 1;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--forbid", s.forbid, "forbidden graph: <kind:a,b> (e.g. clique:4, fan:2,3) or g6:<graph6>");
  cmd->add_option("--n", s.n, "order or range a..b");
  cmd->add_option("--eps", s.eps, "epsilon for regularity and the min-degree class")->capture_default_str();
  cmd->add_option("--tol", s.tol, "eigensolver residual tolerance")->capture_default_str();
  cmd->add_option("--budget", s.budget, "enumeration node budget (0 = unlimited)");
  cmd->add_option("--workers", s.workers, "enumeration worker threads")->capture_default_str();
  cmd->add_option("--out", s.out, "write the JSON report here (plus .csv and .g6 siblings)");
  cmd->add_option("--cache", s.cache, "record store directory (LAB_CACHE_DIR overrides)");
}

sslab::ExperimentConfig make_config(const Shared& s) {
  sslab::ExperimentConfig cfg;
  if (!s.forbid.empty()) cfg.forbid = s.forbid;
  if (!s.n.empty()) cfg.n_range = sslab::parse_n_range(s.n);
  cfg.eps = s.eps;
  cfg.tol = s.tol;
  if (s.budget > 0) cfg.budget = s.budget;
  cfg.workers = s.workers;
  if (!s.out.empty()) cfg.out = s.out;
  if (!s.cache.empty()) cfg.cache = s.cache;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signless Laplacian spectral extremal lab"};
  app.require_subcommand(1);
  Shared shared;

  auto* extremal = app.add_subcommand("extremal", "ex, Ex, ex_ssp and Ex_ssp for each n by exhaustive enumeration");
  auto* verify = app.add_subcommand("verify-lemmas", "spectral and structural inequality suites");
  auto* fan = app.add_subcommand("fan-problem", "T_{t-1}(n) against K_{k(t-2)} joined with an independent set");
  auto* structure = app.add_subcommand("structure", "partition structure of a single graph");
  auto* regularity = app.add_subcommand("regularity", "eps-regularity checks on a fixture");
  auto* records = app.add_subcommand("records", "inspect the record store");
  for (auto* cmd : {extremal, verify, fan, structure, regularity, records}) add_shared(cmd, shared);

  int k = 1;
  int t = 4;
  bool enumerate = false;
  fan->add_option("--k", k, "number of cliques in the fan")->capture_default_str();
  fan->add_option("--t", t, "clique order in the fan")->capture_default_str();
  fan->add_flag("--enumerate", enumerate, "also compute the true ex_ssp by enumeration");

  std::string graph;
  std::string classes;
  long c0 = -1;
  int r = 0;
  int search = 0;
  structure->add_option("--graph", graph, "<kind:a,b>, g6:<graph6> or a graph6 file")->required();
  structure->add_option("--c0", c0, "c0 candidate for the structural bounds");
  structure->add_option("--r", r, "number of classes (default chi(F) - 1, else 2)");
  regularity->add_option("--graph", graph, "<kind:a,b>, g6:<graph6> or a graph6 file")->required();
  regularity->add_option("--classes", classes, "class file, one class per line");
  regularity->add_option("--search", search, "exhaustively look for an eps-regular partition into k classes");

  CLI11_PARSE(app, argc, argv);

  sslab::LabReport report("", {});
  try {
    sslab::ExperimentConfig cfg = make_config(shared);
    cfg.k = k;
    cfg.t = t;
    cfg.enumerate = enumerate;
    if (!graph.empty()) cfg.graph = graph;
    if (!classes.empty()) cfg.classes = classes;
    if (c0 >= 0) cfg.c0 = c0;
    if (r > 0) cfg.r = r;
    if (search > 0) cfg.search_classes = search;

    if (extremal->parsed()) report = sslab::cmd_extremal(cfg);
    else if (verify->parsed()) report = sslab::cmd_verify(cfg);
    else if (fan->parsed()) report = sslab::cmd_fan_problem(cfg);
    else if (structure->parsed()) report = sslab::cmd_structure(cfg);
    else if (regularity->parsed()) report = sslab::cmd_regularity(cfg);
    else report = sslab::cmd_records(cfg);

    if (cfg.out) {
      report.write(*cfg.out);
    } else {
      std::cout << report.to_json().dump(2) << '\n';
    }
  } catch (const sslab::lab_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (report.error_message()) std::cerr << "error: " << *report.error_message() << '\n';
  if (report.failed_asserts() > 0) std::cerr << report.failed_asserts() << " asserted check(s) failed\n";
  return report.ok() ? 0 : 1;
}
