#include "sslab/record_store.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "sslab/canonical.hpp"
#include "sslab/errors.hpp"

namespace sslab {

using nlohmann::json;

namespace {

json entries_json(const std::vector<GraphEntry>& list) {
  json out = json::array();
  for (const auto& e : list) out.push_back({{"graph6", e.graph6}, {"edges", e.edges}, {"q", e.q}});
  return out;
}

std::vector<GraphEntry> entries_from(const json& list) {
  std::vector<GraphEntry> out;
  for (const auto& e : list)
    out.push_back({e.at("graph6").get<std::string>(), e.at("edges").get<long>(), e.at("q").get<double>()});
  return out;
}

std::string hex(const std::string& s) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : s) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

}  // namespace

json to_json(const ExtremalRecord& rec) {
  json doc;
  doc["version"] = record_version;
  doc["n"] = rec.n;
  doc["f"] = {{"label", rec.f_label}, {"graph6", rec.f_graph6}};
  doc["f_chromatic"] = rec.f_chromatic ? json(*rec.f_chromatic) : json(nullptr);
  doc["classes"] = rec.classes;
  doc["ex"] = rec.ex;
  doc["ex_graphs"] = entries_json(rec.ex_graphs);
  doc["ex_ssp"] = rec.ex_ssp;
  doc["ex_ssp_graphs"] = entries_json(rec.ex_ssp_graphs);
  doc["ties"] = {{"tie_rel", ssp_tie}, {"near_tie_rel", ssp_near_tie}, {"near_ties", entries_json(rec.near_ties)}};
  doc["c0_term"] = rec.c0_term ? json(*rec.c0_term) : json(nullptr);
  doc["min_degree_class"] = {{"eps", rec.min_degree_eps},
                             {"count", rec.min_degree_count},
                             {"q_max", rec.min_degree_q ? json(*rec.min_degree_q) : json(nullptr)}};
  return doc;
}

ExtremalRecord record_from_json(const json& doc) {
  try {
    ExtremalRecord rec;
    rec.n = doc.at("n").get<int>();
    rec.f_label = doc.at("f").at("label").get<std::string>();
    rec.f_graph6 = doc.at("f").at("graph6").get<std::string>();
    if (!doc.at("f_chromatic").is_null()) rec.f_chromatic = doc.at("f_chromatic").get<int>();
    rec.classes = doc.at("classes").get<std::size_t>();
    rec.ex = doc.at("ex").get<long>();
    rec.ex_graphs = entries_from(doc.at("ex_graphs"));
    rec.ex_ssp = doc.at("ex_ssp").get<double>();
    rec.ex_ssp_graphs = entries_from(doc.at("ex_ssp_graphs"));
    rec.near_ties = entries_from(doc.at("ties").at("near_ties"));
    if (!doc.at("c0_term").is_null()) rec.c0_term = doc.at("c0_term").get<long>();
    const auto& md = doc.at("min_degree_class");
    rec.min_degree_eps = md.at("eps").get<double>();
    rec.min_degree_count = md.at("count").get<std::size_t>();
    if (!md.at("q_max").is_null()) rec.min_degree_q = md.at("q_max").get<double>();
    return rec;
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed extremal record: ") + e.what(), 0);
  }
}

RecordStore::RecordStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string RecordStore::key(int n, const std::string& f_graph6) const {
  return "ex-n" + std::to_string(n) + "-" + hex(f_graph6);
}

std::optional<ExtremalRecord> RecordStore::load(int n, const std::string& f_graph6, double eps) const {
  std::ifstream in(dir_ / (key(n, f_graph6) + ".json"));
  if (!in) return std::nullopt;
  const json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("version", "") != record_version) return std::nullopt;
  try {
    ExtremalRecord rec = record_from_json(doc);
    if (rec.n != n || rec.f_graph6 != f_graph6 || rec.min_degree_eps != eps) return std::nullopt;
    return rec;
  } catch (const parse_error&) {
    return std::nullopt;
  }
}

void RecordStore::save(const ExtremalRecord& rec) const {
  const std::string base = key(rec.n, rec.f_graph6);
  {
    std::ofstream out(dir_ / (base + ".json"));
    out << to_json(rec).dump(2) << '\n';
  }
  std::ofstream g6(dir_ / (base + ".g6"));
  for (const auto* list : {&rec.ex_graphs, &rec.ex_ssp_graphs, &rec.near_ties})
    for (const auto& e : *list) g6 << e.graph6 << '\n';
}

std::vector<RecordStore::Entry> RecordStore::list() const {
  std::vector<Entry> out;
  for (const auto& item : std::filesystem::directory_iterator(dir_)) {
    if (item.path().extension() != ".json") continue;
    std::ifstream in(item.path());
    const json doc = json::parse(in, nullptr, false);
    Entry e;
    e.file = item.path();
    if (!doc.is_discarded() && doc.is_object()) {
      e.version = doc.value("version", "");
      e.n = doc.value("n", 0);
      if (doc.contains("f") && doc["f"].is_object()) {
        e.f_label = doc["f"].value("label", "");
        e.f_graph6 = doc["f"].value("graph6", "");
      }
    }
    e.current = e.version == record_version;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.file < b.file; });
  return out;
}

std::optional<std::filesystem::path> cache_dir(const std::optional<std::filesystem::path>& fallback) {
  if (const char* env = std::getenv("LAB_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return fallback;
}

RecordSource::RecordSource(Graph f, std::string label, RecordOptions opts, std::optional<RecordStore> store)
    : f_(std::move(f)), label_(std::move(label)), f_graph6_(canonical_graph6(f_)), opts_(opts),
      store_(std::move(store)) {}

const ExtremalRecord& RecordSource::get(int n) {
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  if (store_) {
    if (auto cached = store_->load(n, f_graph6_, opts_.eps)) {
      ++hits_;
      return memo_.emplace(n, std::move(*cached)).first->second;
    }
  }
  ExtremalRecord rec = extremal_record(n, f_, label_, opts_);
  if (store_) store_->save(rec);
  return memo_.emplace(n, std::move(rec)).first->second;
}

C0Sequence c0_sequence(RecordSource& src, int lo, int hi) {
  if (lo > hi) throw argument_error("empty n range");
  if (lo < 1) throw argument_error("n range must start at 1 or above");
  C0Sequence out;
  for (int n = lo; n <= hi; ++n) {
    const ExtremalRecord& rec = src.get(n);
    if (!rec.f_chromatic) throw capacity_error("chromatic number of F is beyond the colouring capacity");
    out.r = *rec.f_chromatic - 1;
    if (!rec.c0_term) throw argument_error("c0 terms need chi(F) >= 2");
    out.terms.emplace_back(n, *rec.c0_term);
    out.window_sup = std::max(out.window_sup.value_or(*rec.c0_term), *rec.c0_term);
  }
  return out;
}

std::vector<DensityHypothesisRow> hypothesis_check(RecordSource& src, int lo, int hi) {
  if (lo > hi) throw argument_error("empty n range");
  if (lo < 2) throw argument_error("the step condition needs n >= 2");
  std::vector<DensityHypothesisRow> rows;
  for (int n = lo; n <= hi; ++n) {
    const ExtremalRecord prev = src.get(n - 1);
    const ExtremalRecord& rec = src.get(n);
    if (!rec.f_chromatic) throw capacity_error("chromatic number of F is beyond the colouring capacity");
    DensityHypothesisRow row;
    row.n = n;
    row.ex = rec.ex;
    row.ex_prev = prev.ex;
    row.pi = turan_density(*rec.f_chromatic);
    row.step_gap = std::abs(static_cast<double>(rec.ex - prev.ex) - row.pi * n);
    row.four_ex_over_n = 4.0 * rec.ex / n;
    row.min_degree_count = rec.min_degree_count;
    row.min_degree_q = rec.min_degree_q;
    if (rec.min_degree_q) row.spectral_gap = std::abs(*rec.min_degree_q - row.four_ex_over_n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sslab
