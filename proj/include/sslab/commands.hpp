#pragma once

#include <cstddef>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "sslab/graph.hpp"
#include "sslab/partition.hpp"
#include "sslab/report.hpp"
#include "sslab/structure.hpp"

namespace sslab {

struct ExperimentConfig {
  std::optional<std::string> forbid;  // family spec (optionally "family:"-prefixed) or "g6:<graph6>"
  std::optional<std::pair<int, int>> n_range;
  double eps = 0.1;
  double tol = 1e-10;
  std::size_t budget = std::numeric_limits<std::size_t>::max();
  unsigned workers = 1;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> cache;

  // fan-problem
  int k = 1;
  int t = 4;
  bool enumerate = false;
  // structure / regularity
  std::optional<std::string> graph;  // as forbid, or a file of graph6 lines
  std::optional<long> c0;
  std::optional<int> r;
  std::optional<std::filesystem::path> classes;
  std::optional<int> search_classes;

  /// Throws argument_error on non-positive tolerances or an inverted range.
  void validate() const;
  nlohmann::json to_json() const;
};

/// "a..b" or "a".
std::pair<int, int> parse_n_range(const std::string& text);

struct NamedGraph {
  Graph graph;
  std::string label;
};

/// "g6:<graph6>", "family:<spec>" or a bare family spec.
NamedGraph parse_graph_arg(const std::string& text);

nlohmann::json partition_json(const PartitionVec& p);  // classes reported 1-based
nlohmann::json structure_json(const StructureReport& rep);

LabReport cmd_extremal(const ExperimentConfig& cfg);
LabReport cmd_verify(const ExperimentConfig& cfg);
LabReport cmd_fan_problem(const ExperimentConfig& cfg);
LabReport cmd_structure(const ExperimentConfig& cfg);
LabReport cmd_regularity(const ExperimentConfig& cfg);
LabReport cmd_records(const ExperimentConfig& cfg);

}  // namespace sslab
