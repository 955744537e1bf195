#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sslab/enumerate.hpp"

namespace sslab {

/// Bumped whenever the record layout or the values it caches change meaning.
inline constexpr const char* record_version = "sslab-record-2";

nlohmann::json to_json(const ExtremalRecord& rec);
/// Throws parse_error on a malformed document.
ExtremalRecord record_from_json(const nlohmann::json& doc);

/// On-disk cache keyed by (n, canonical graph6 of F). Each key owns
/// `<key>.json` (the record plus a version stamp) and `<key>.g6` (every graph
/// the record lists, one per line).
class RecordStore {
public:
  explicit RecordStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::string key(int n, const std::string& f_graph6) const;

  /// Absent on a miss, a stale version stamp, an eps mismatch or an unreadable file.
  std::optional<ExtremalRecord> load(int n, const std::string& f_graph6, double eps) const;
  void save(const ExtremalRecord& rec) const;

  struct Entry {
    std::filesystem::path file;
    std::string version;
    int n = 0;
    std::string f_label;
    std::string f_graph6;
    bool current = false;
  };
  std::vector<Entry> list() const;

private:
  std::filesystem::path dir_;
};

/// Directory from LAB_CACHE_DIR if set, else `fallback`.
std::optional<std::filesystem::path> cache_dir(const std::optional<std::filesystem::path>& fallback);

/// Computes records on demand, memoized in memory and, when a store is
/// attached, on disk.
class RecordSource {
public:
  RecordSource(Graph f, std::string label, RecordOptions opts = {}, std::optional<RecordStore> store = {});

  const Graph& forbidden() const { return f_; }
  const std::string& label() const { return label_; }
  const RecordOptions& options() const { return opts_; }
  const ExtremalRecord& get(int n);
  /// Records served from the disk cache rather than computed.
  int cache_hits() const { return hits_; }

private:
  Graph f_;
  std::string label_;
  std::string f_graph6_;
  RecordOptions opts_;
  std::optional<RecordStore> store_;
  std::map<int, ExtremalRecord> memo_;
  int hits_ = 0;
};

struct C0Sequence {
  std::optional<int> r;  // chi(F) - 1
  std::vector<std::pair<int, long>> terms;  // (n, ex - t_r(n))
  std::optional<long> window_sup;
};

/// Finite prefix of the sequence ex(n,F) - t_r(n) on [lo, hi]; the sup is over
/// this window only.
C0Sequence c0_sequence(RecordSource& src, int lo, int hi);

struct DensityHypothesisRow {
  int n = 0;
  long ex = 0;
  long ex_prev = 0;
  double pi = 0;
  double step_gap = 0;  // |ex(n) - ex(n-1) - pi n|
  double four_ex_over_n = 0;
  std::size_t min_degree_count = 0;
  std::optional<double> min_degree_q;
  std::optional<double> spectral_gap;  // |q_max - 4 ex / n| over the min-degree class
};

/// The two left-hand quantities of the density hypotheses per n, for trend
/// observation only. Needs n >= 2 throughout.
std::vector<DensityHypothesisRow> hypothesis_check(RecordSource& src, int lo, int hi);

}  // namespace sslab
