#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/grid.hpp"

namespace knotmosaic {

class LayoutError : public std::runtime_error {
 public:
  LayoutError(const std::string& what, CellCoord cell);
  CellCoord cell() const noexcept { return cell_; }

 private:
  CellCoord cell_;
};

/// A mosaic shell whose wildcard cells take one of the four-point tiles
/// T7..T10.
class Layout {
 public:
  /// Validates the shell: wildcards must be interior, and the grid with every
  /// wildcard set to T9 must be suitably connected.
  Layout(MosaicGrid base, std::vector<CellCoord> wildcards, std::string id = "layout");

  int size() const noexcept { return base_.size(); }
  const std::string& id() const noexcept { return id_; }
  /// Fixed tiles; wildcard cells hold T9.
  const MosaicGrid& base() const noexcept { return base_; }
  /// Wildcard coordinates in row-major order.
  const std::vector<CellCoord>& wildcards() const noexcept { return wildcards_; }
  int wildcard_count() const noexcept { return static_cast<int>(wildcards_.size()); }
  bool is_wildcard(CellCoord c) const noexcept;

  /// Layout with its wildcards replaced by `fill` (values 7..10).
  MosaicGrid fill(std::span<const std::uint8_t> fill) const;

 private:
  MosaicGrid base_;
  std::vector<CellCoord> wildcards_;
  std::string id_;
};

/// Matrix text where "*" marks a wildcard cell.
Layout parse_layout(std::string_view text, std::string id = "layout");
std::string serialize_layout(const Layout& layout);
Layout load_layout_file(const std::string& path);

/// Sizes of the split enumeration over `n_interior` wildcards.
struct EnumerationPlan {
  int n_interior = 0;
  int prefix_length = 0;  // floor(n_interior / 2)
  int min_crossings = 0;

  EnumerationPlan(int n_interior, int min_crossings);
  int suffix_length() const noexcept { return n_interior - prefix_length; }
  std::uint64_t prefix_count() const noexcept { return std::uint64_t{1} << (2 * prefix_length); }
};

/// Number of fill vectors over {7,8,9,10}^n with at least m entries in
/// {9,10}: 2^n * sum_{i=m}^{n} C(n, i). Zero when m > n. Requires n <= 31.
std::uint64_t count_candidates(int n_interior, int min_crossings);

/// Streams every filling of a layout with at least `min_crossings` wildcard
/// crossings.
///
/// Fill vectors are split into a prefix of floor(n/2) entries and a suffix
/// of the rest. Prefixes are visited in lexicographic order (7 < 8 < 9 < 10);
/// for each, only suffixes whose crossing entries bring the total to at least
/// `min_crossings` are joined, also in lexicographic order. Sharding keeps
/// the prefixes whose index is congruent to `shard_index` modulo
/// `shard_total`; `start_prefix` skips earlier prefixes for resumed runs.
///
///   FillEnumerator fills(layout, 3);
///   while (fills.next()) use(fills.grid());
class FillEnumerator {
 public:
  FillEnumerator(const Layout& layout, int min_crossings, int shard_index = 0, int shard_total = 1,
                 std::uint64_t start_prefix = 0);

  /// Advances to the next filling; false once exhausted.
  bool next();
  const MosaicGrid& grid() const noexcept { return grid_; }
  /// Entries 7..10 of the current fill vector, in wildcard order.
  std::span<const std::uint8_t> fill() const noexcept { return fill_; }
  std::uint64_t prefix_index() const noexcept { return prefix_; }
  const EnumerationPlan& plan() const noexcept { return plan_; }

 private:
  bool seek_prefix(std::uint64_t from);
  bool first_suffix();
  bool next_suffix();
  void write_grid();

  Layout layout_;
  EnumerationPlan plan_;
  int shard_index_;
  int shard_total_;
  MosaicGrid grid_;
  std::vector<std::uint8_t> fill_;
  std::uint64_t prefix_;
  int suffix_threshold_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Collects every filling; for tests and small layouts.
std::vector<MosaicGrid> enumerate_fills(const Layout& layout, int min_crossings);
std::vector<MosaicGrid> shard_fills(const Layout& layout, int min_crossings, int shard_index,
                                    int shard_total);

}  // namespace knotmosaic
