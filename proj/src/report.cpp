#include "sslab/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sslab {

using nlohmann::json;

LabReport::LabReport(std::string command, json config) : command_(std::move(command)), config_(std::move(config)) {}

void LabReport::check(std::string name, std::string anchor, bool pass, json numbers, std::string note) {
  rows_.push_back({std::move(name), std::move(anchor), RowKind::assert_row, pass, std::move(numbers), std::move(note)});
}

void LabReport::observe(std::string name, std::string anchor, json numbers, std::string note) {
  rows_.push_back({std::move(name), std::move(anchor), RowKind::observe, true, std::move(numbers), std::move(note)});
}

void LabReport::artifact(std::string role, std::string graph6) {
  artifacts_.push_back({std::move(role), std::move(graph6)});
}

void LabReport::section(const std::string& key, json value) { sections_[key] = std::move(value); }

void LabReport::error(std::string message) { error_ = std::move(message); }

int LabReport::failed_asserts() const {
  return static_cast<int>(
      std::count_if(rows_.begin(), rows_.end(), [](const ReportRow& r) { return r.kind == RowKind::assert_row && !r.pass; }));
}

bool LabReport::ok() const { return !error_ && failed_asserts() == 0; }

json LabReport::to_json() const {
  json doc;
  doc["command"] = command_;
  doc["config"] = config_;
  json rows = json::array();
  for (const auto& r : rows_)
    rows.push_back({{"name", r.name},
                    {"anchor", r.anchor},
                    {"kind", r.kind == RowKind::observe ? "observe" : "assert"},
                    {"status", r.status()},
                    {"numbers", r.numbers},
                    {"note", r.note}});
  doc["checks"] = rows;
  json arts = json::array();
  for (const auto& a : artifacts_) arts.push_back({{"role", a.role}, {"graph6", a.graph6}});
  doc["artifacts"] = arts;
  doc["sections"] = sections_;
  doc["error"] = error_ ? json(*error_) : json(nullptr);
  doc["summary"] = {{"asserts_failed", failed_asserts()}, {"ok", ok()}};
  doc["timing"] = {{"seconds", seconds_}};
  return doc;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string LabReport::to_csv() const {
  std::ostringstream os;
  os << "name,anchor,kind,status,numbers,note\n";
  for (const auto& r : rows_)
    os << csv_field(r.name) << ',' << csv_field(r.anchor) << ','
       << (r.kind == RowKind::observe ? "observe" : "assert") << ',' << r.status() << ','
       << csv_field(r.numbers.dump()) << ',' << csv_field(r.note) << '\n';
  return os.str();
}

void LabReport::write(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream(path) << to_json().dump(2) << '\n';
  auto sibling = [&](const char* ext) {
    auto p = path;
    p += ext;
    return p;
  };
  std::ofstream(sibling(".csv")) << to_csv();
  std::ofstream g6(sibling(".g6"));
  for (const auto& a : artifacts_) g6 << a.graph6 << '\n';
}

}  // namespace sslab
