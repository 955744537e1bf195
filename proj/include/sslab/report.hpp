#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sslab {

/// "assert" rows must hold at desk scale and decide the exit status;
/// "observe" rows record asymptotic statements and never fail.
enum class RowKind { assert_row, observe };

struct ReportRow {
  std::string name;
  std::string anchor;
  RowKind kind = RowKind::observe;
  bool pass = true;
  nlohmann::json numbers = nlohmann::json::object();
  std::string note;

  std::string status() const { return kind == RowKind::observe ? "observe" : (pass ? "pass" : "fail"); }
};

struct Artifact {
  std::string role;
  std::string graph6;
};

class LabReport {
public:
  LabReport(std::string command, nlohmann::json config);

  void check(std::string name, std::string anchor, bool pass, nlohmann::json numbers = nlohmann::json::object(),
             std::string note = {});
  void observe(std::string name, std::string anchor, nlohmann::json numbers = nlohmann::json::object(),
               std::string note = {});
  void artifact(std::string role, std::string graph6);
  /// Extra structured payload under `sections[key]`.
  void section(const std::string& key, nlohmann::json value);
  /// Records an error that cut the run short; the report stays partial.
  void error(std::string message);
  void set_seconds(double s) { seconds_ = s; }

  const std::vector<ReportRow>& rows() const { return rows_; }
  const std::vector<Artifact>& artifacts() const { return artifacts_; }
  const std::optional<std::string>& error_message() const { return error_; }
  const nlohmann::json& sections() const { return sections_; }

  /// No failed assert row and no error.
  bool ok() const;
  int failed_asserts() const;

  nlohmann::json to_json() const;
  /// Flat export, one line per row: name,anchor,kind,status,numbers(json),note.
  std::string to_csv() const;
  /// JSON to `path`, CSV next to it with ".csv", graph6 sidecar with ".g6".
  void write(const std::filesystem::path& path) const;

private:
  std::string command_;
  nlohmann::json config_;
  std::vector<ReportRow> rows_;
  std::vector<Artifact> artifacts_;
  nlohmann::json sections_ = nlohmann::json::object();
  std::optional<std::string> error_;
  double seconds_ = 0;
};

}  // namespace sslab
