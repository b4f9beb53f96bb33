#include "knotmosaic/layout.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "matrix_text.hpp"

namespace knotmosaic {

namespace {

std::string cell_name(CellCoord c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

constexpr std::uint8_t kFirstFourPoint = 7;

}  // namespace

LayoutError::LayoutError(const std::string& what, CellCoord cell)
    : std::runtime_error(what + " at cell " + cell_name(cell)), cell_(cell) {}

Layout::Layout(MosaicGrid base, std::vector<CellCoord> wildcards, std::string id)
    : base_(std::move(base)), wildcards_(std::move(wildcards)), id_(std::move(id)) {
  std::sort(wildcards_.begin(), wildcards_.end());
  if (std::adjacent_find(wildcards_.begin(), wildcards_.end()) != wildcards_.end()) {
    throw LayoutError("duplicate wildcard", *std::adjacent_find(wildcards_.begin(), wildcards_.end()));
  }
  const int n = base_.size();
  for (CellCoord c : wildcards_) {
    if (!base_.contains(c)) throw LayoutError("wildcard outside the grid", c);
    if (c.row == 0 || c.col == 0 || c.row == n - 1 || c.col == n - 1) {
      throw LayoutError("wildcard on the mosaic boundary", c);
    }
    base_.set(c, Tile(9));
  }
  for (const EdgeDefect& d : connection_defects(base_)) {
    const bool at_wildcard = is_wildcard(d.cell);
    const CellCoord other = neighbor(d.cell, d.side);
    if (at_wildcard || (base_.contains(other) && is_wildcard(other))) {
      const CellCoord w = at_wildcard ? d.cell : other;
      throw LayoutError("wildcard neighbor lacks the facing connection point", w);
    }
    throw LayoutError(d.boundary ? "connection point faces the mosaic boundary"
                                 : std::string("unmatched connection point on side ") +
                                       std::string(side_name(d.side)),
                      d.cell);
  }
}

bool Layout::is_wildcard(CellCoord c) const noexcept {
  return std::binary_search(wildcards_.begin(), wildcards_.end(), c);
}

MosaicGrid Layout::fill(std::span<const std::uint8_t> fill) const {
  if (fill.size() != wildcards_.size()) throw std::invalid_argument("fill length does not match wildcard count");
  MosaicGrid out = base_;
  for (std::size_t i = 0; i < fill.size(); ++i) {
    if (fill[i] < kFirstFourPoint || fill[i] > 10) throw std::invalid_argument("fill entries must be 7..10");
    out.set(wildcards_[i], Tile(fill[i]));
  }
  return out;
}

Layout parse_layout(std::string_view text, std::string id) {
  auto rows = detail::split_rows(text);
  if (rows.empty()) throw ParseError("empty layout matrix");
  const int n = static_cast<int>(rows.size());
  MosaicGrid base(n);
  std::vector<CellCoord> wildcards;
  for (int r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != n) throw ParseError("layout matrix is not square", r + 1);
    for (int c = 0; c < n; ++c) {
      std::string_view tok = row[static_cast<std::size_t>(c)];
      if (tok == "*") {
        wildcards.push_back({r, c});
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("not an integer or '*': '" + std::string(tok) + "'", r + 1, c + 1);
      }
      if (value < 0 || value >= Tile::kCount) {
        throw ParseError("tile number out of range 0..10: " + std::to_string(value), r + 1, c + 1);
      }
      base.set(r, c, Tile(value));
    }
  }
  return Layout(std::move(base), std::move(wildcards), std::move(id));
}

std::string serialize_layout(const Layout& layout) {
  std::string out;
  const int n = layout.size();
  for (int r = 0; r < n; ++r) {
    if (r > 0) out += '\n';
    for (int c = 0; c < n; ++c) {
      if (c > 0) out += ' ';
      out += layout.is_wildcard({r, c}) ? std::string("*") : std::to_string(layout.base().at(r, c).kind());
    }
  }
  return out;
}

Layout load_layout_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open layout file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_layout(buf.str(), std::filesystem::path(path).stem().string());
}

EnumerationPlan::EnumerationPlan(int n, int m) : n_interior(n), prefix_length(n / 2), min_crossings(m) {
  if (n < 0 || n > 31) throw std::invalid_argument("wildcard count must be in 0..31");
  if (m < 0) throw std::invalid_argument("minimum crossing count must be non-negative");
}

std::uint64_t count_candidates(int n, int m) {
  EnumerationPlan plan(n, m);
  if (m > n) return 0;
  std::uint64_t binom = 1;  // C(n, i), running over i
  std::uint64_t sum = 0;
  for (int i = 0; i <= n; ++i) {
    if (i >= m) sum += binom;
    binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return sum << n;
}

FillEnumerator::FillEnumerator(const Layout& layout, int min_crossings, int shard_index, int shard_total,
                               std::uint64_t start_prefix)
    : layout_(layout),
      plan_(layout.wildcard_count(), min_crossings),
      shard_index_(shard_index),
      shard_total_(shard_total),
      grid_(layout.base()),
      fill_(static_cast<std::size_t>(layout.wildcard_count()), kFirstFourPoint),
      prefix_(start_prefix) {
  if (shard_total < 1 || shard_index < 0 || shard_index >= shard_total) {
    throw std::invalid_argument("shard index must satisfy 0 <= index < total");
  }
}

namespace {

bool is_crossing_entry(std::uint8_t v) { return v >= 9; }

}  // namespace

bool FillEnumerator::seek_prefix(std::uint64_t from) {
  const auto total = static_cast<std::uint64_t>(shard_total_);
  const auto index = static_cast<std::uint64_t>(shard_index_);
  std::uint64_t p = from;
  if (p % total != index) p += (index + total - p % total) % total;
  const int k = plan_.prefix_length;
  for (; p < plan_.prefix_count(); p += total) {
    // Most significant base-4 digit is the first entry.
    int crossings = 0;
    for (int i = 0; i < k; ++i) {
      const auto digit = static_cast<std::uint8_t>((p >> (2 * (k - 1 - i))) & 3u);
      fill_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(kFirstFourPoint + digit);
      crossings += digit >= 2 ? 1 : 0;
    }
    suffix_threshold_ = std::max(0, plan_.min_crossings - crossings);
    prefix_ = p;
    if (first_suffix()) return true;
  }
  prefix_ = plan_.prefix_count();
  return false;
}

// Lexicographically smallest suffix with at least suffix_threshold_ crossing
// entries: 7s followed by 9s.
bool FillEnumerator::first_suffix() {
  const int k = plan_.prefix_length;
  const int len = plan_.suffix_length();
  if (suffix_threshold_ > len) return false;
  for (int i = 0; i < len; ++i) {
    fill_[static_cast<std::size_t>(k + i)] = i < len - suffix_threshold_ ? kFirstFourPoint : 9;
  }
  return true;
}

bool FillEnumerator::next_suffix() {
  const int k = plan_.prefix_length;
  const int len = plan_.suffix_length();
  for (int pos = len - 1; pos >= 0; --pos) {
    auto& digit = fill_[static_cast<std::size_t>(k + pos)];
    while (digit < 10) {
      ++digit;
      int crossings = 0;
      for (int i = 0; i <= pos; ++i) crossings += is_crossing_entry(fill_[static_cast<std::size_t>(k + i)]) ? 1 : 0;
      const int need = std::max(0, suffix_threshold_ - crossings);
      const int rest = len - 1 - pos;
      if (need <= rest) {
        for (int i = 0; i < rest; ++i) {
          fill_[static_cast<std::size_t>(k + pos + 1 + i)] = i < rest - need ? kFirstFourPoint : 9;
        }
        return true;
      }
    }
  }
  return false;
}

void FillEnumerator::write_grid() {
  const auto& cells = layout_.wildcards();
  for (std::size_t i = 0; i < cells.size(); ++i) grid_.set(cells[i], Tile(fill_[i]));
}

bool FillEnumerator::next() {
  if (done_) return false;
  bool ok = false;
  if (!started_) {
    started_ = true;
    ok = plan_.min_crossings <= plan_.n_interior && seek_prefix(prefix_);
  } else {
    ok = next_suffix() || seek_prefix(prefix_ + static_cast<std::uint64_t>(shard_total_));
  }
  if (!ok) {
    done_ = true;
    return false;
  }
  write_grid();
  return true;
}

std::vector<MosaicGrid> shard_fills(const Layout& layout, int min_crossings, int shard_index, int shard_total) {
  std::vector<MosaicGrid> out;
  FillEnumerator fills(layout, min_crossings, shard_index, shard_total);
  while (fills.next()) out.push_back(fills.grid());
  return out;
}

std::vector<MosaicGrid> enumerate_fills(const Layout& layout, int min_crossings) {
  return shard_fills(layout, min_crossings, 0, 1);
}

}  // namespace knotmosaic
