#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knotmosaic/catalog.hpp"
#include "knotmosaic/grid.hpp"
#include "knotmosaic/layout.hpp"

namespace knotmosaic {

/// A mosaic identified as a prime knot.
struct KnotHit {
  std::string name;
  MosaicGrid grid;
  int nonblank = 0;
  int crossings = 0;
  std::string layout_id;

  int mosaic_size() const noexcept { return grid.size(); }
  static KnotHit make(std::string name, MosaicGrid grid, std::string layout_id);
  friend bool operator==(const KnotHit&, const KnotHit&) = default;
};

/// Store lines: "name;n;nonblank;crossings;layout_id;r0c0 r0c1 ... / r1c0 ...".
std::string format_hit(const KnotHit& hit);
KnotHit parse_hit(std::string_view line);
std::vector<KnotHit> load_store(const std::filesystem::path& path);
/// Appends hits whose grid is not already stored; returns how many were
/// written. Creates the file when missing.
std::size_t append_to_store(const std::filesystem::path& path, const std::vector<KnotHit>& hits);

struct RunStats {
  std::uint64_t enumerated = 0;
  std::uint64_t links = 0;
  std::uint64_t unknots = 0;
  std::uint64_t unidentified = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t prime_hits = 0;

  bool balanced() const noexcept {
    return enumerated == links + unknots + unidentified + ambiguous + prime_hits;
  }
  RunStats& operator+=(const RunStats& o) noexcept;
  friend bool operator==(const RunStats&, const RunStats&) = default;
};

struct LayoutRun {
  RunStats stats;
  std::vector<KnotHit> hits;
  /// Ambiguous verdict labels with their counts.
  std::map<std::string, std::uint64_t> ambiguous;
};

/// Enumerates, traces and identifies one shard of a layout in memory.
/// `jobs` > 1 splits the shard across worker threads; the result does not
/// depend on `jobs`.
LayoutRun run_layout(const Layout& layout, const FingerprintIndex& index, int min_crossings, int shard_index = 0,
                     int shard_total = 1, int jobs = 1);

struct RunConfig {
  std::filesystem::path layout_path;
  int min_crossings = 0;
  int shard_index = 0;
  int shard_total = 1;
  std::filesystem::path store_path;
  std::filesystem::path catalog_path;
  std::optional<std::filesystem::path> fingerprint_cache_dir;
  int jobs = 1;
  /// Long runs: records the next prefix index here and flushes hits every
  /// `checkpoint_every` prefixes; an existing checkpoint resumes the run.
  /// Requires jobs == 1.
  std::optional<std::filesystem::path> checkpoint_path;
  std::uint64_t checkpoint_every = 256;
};

/// Loads layout and catalog (failing before any enumeration), runs the shard
/// and appends prime hits to the store.
RunStats run_pipeline(const RunConfig& config);

struct SummaryRecord {
  std::string name;
  std::map<int, int> min_nonblank_by_size;
  int min_nonblank = 0;
  int min_crossings = 0;
  int mosaic_size = 0;  // smallest mosaic size seen
  int tile_minimal_size = 0;  // smallest size attaining min_nonblank
  bool crossing_number_realized = false;
  KnotHit fewest_tiles;  // ties: smaller mosaic, then smallest serialized grid
  KnotHit fewest_crossings;  // ties: fewer tiles, then smallest serialized grid
  KnotHit smallest_mosaic;  // fewest tiles on the smallest mosaic size
};

/// One record per knot name, sorted by knot_name_less.
std::vector<SummaryRecord> best_per_knot(const std::vector<KnotHit>& hits);

struct LayoutComparison {
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;
  std::vector<std::string> both;
};

LayoutComparison compare_layouts(const std::vector<KnotHit>& a, const std::vector<KnotHit>& b);

/// Knots grouped by (mosaic number, tile number). A '*' marks knots whose
/// fewest-tile mosaic is larger than their smallest mosaic. Throws
/// std::invalid_argument on empty input.
std::string report_table(const std::vector<SummaryRecord>& summaries);

struct VerifyFailure {
  std::size_t record = 0;  // 1-based record index
  std::string stored;
  std::string derived;
};

/// Re-traces and re-identifies every hit.
std::vector<VerifyFailure> verify_store(const std::vector<KnotHit>& hits, const FingerprintIndex& index);

}  // namespace knotmosaic
