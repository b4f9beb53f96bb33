#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "knotmosaic/tile.hpp"

namespace knotmosaic {

struct CellCoord {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

/// Failure to read mosaic text; row and col are 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int row = 0, int col = 0);
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }

 private:
  int row_;
  int col_;
};

/// Square n x n array of tiles.
class MosaicGrid {
 public:
  MosaicGrid() = default;
  /// All-blank n x n grid; throws std::invalid_argument when n < 1.
  explicit MosaicGrid(int n);
  MosaicGrid(int n, std::vector<Tile> cells);

  int size() const noexcept { return n_; }
  Tile at(int row, int col) const { return cells_[index(row, col)]; }
  Tile at(CellCoord c) const { return at(c.row, c.col); }
  void set(int row, int col, Tile t) { cells_[index(row, col)] = t; }
  void set(CellCoord c, Tile t) { set(c.row, c.col, t); }
  bool contains(CellCoord c) const noexcept {
    return c.row >= 0 && c.col >= 0 && c.row < n_ && c.col < n_;
  }
  const std::vector<Tile>& cells() const noexcept { return cells_; }

  friend bool operator==(const MosaicGrid&, const MosaicGrid&) = default;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }
  int n_ = 0;
  std::vector<Tile> cells_;
};

/// Cell on the far side of `side`; may lie outside the grid.
constexpr CellCoord neighbor(CellCoord c, Side side) noexcept {
  switch (side) {
    case Side::Top: return {c.row - 1, c.col};
    case Side::Bottom: return {c.row + 1, c.col};
    case Side::Left: return {c.row, c.col - 1};
    case Side::Right: return {c.row, c.col + 1};
  }
  return c;
}

/// Rows of whitespace- or comma-separated tile numbers, one row per line.
/// A "/" also ends a row, so "0 2 / 3 4" is a 2 x 2 matrix.
MosaicGrid parse_matrix(std::string_view text);
/// Single-space separated rows joined by '\n', no trailing newline.
std::string serialize_matrix(const MosaicGrid& grid);
/// Same rows joined by " / " for one-line records.
std::string serialize_matrix_inline(const MosaicGrid& grid);

/// {"n": int, "cells": [[int,...],...]}
nlohmann::json grid_to_json(const MosaicGrid& grid);
MosaicGrid grid_from_json(const nlohmann::json& j);

/// An edge where connection points fail to match.
struct EdgeDefect {
  CellCoord cell;
  Side side;  // side of `cell` on which the mismatch sits
  bool boundary = false;
};

/// Every mismatched edge, each interior edge reported once from its
/// top/left cell, in row-major order.
std::vector<EdgeDefect> connection_defects(const MosaicGrid& grid);
bool is_suitably_connected(const MosaicGrid& grid);

int nonblank_count(const MosaicGrid& grid) noexcept;
int crossing_count(const MosaicGrid& grid) noexcept;

MosaicGrid rotate_half_turn(const MosaicGrid& grid);
/// Column reversal with reflected tiles (crossings drawn the same way).
MosaicGrid reflect_left_right(const MosaicGrid& grid);

}  // namespace knotmosaic
