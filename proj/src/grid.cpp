#include "knotmosaic/grid.hpp"

#include "matrix_text.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

namespace knotmosaic {

ParseError::ParseError(const std::string& what, int row, int col)
    : std::runtime_error(row > 0 ? what + " (row " + std::to_string(row) +
                                       (col > 0 ? ", col " + std::to_string(col) : std::string()) + ")"
                                 : what),
      row_(row),
      col_(col) {}

MosaicGrid::MosaicGrid(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("mosaic size must be at least 1");
  cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Tile{});
}

MosaicGrid::MosaicGrid(int n, std::vector<Tile> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 1) throw std::invalid_argument("mosaic size must be at least 1");
  if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cell count does not match n*n");
  }
}

namespace detail {

std::vector<std::vector<std::string_view>> split_rows(std::string_view text) {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<std::string_view> row;
  auto flush = [&] {
    if (!row.empty()) rows.push_back(std::move(row));
    row.clear();
  };
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n' || c == '/') {
      flush();
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && text[j] != '\n' && text[j] != '/' && text[j] != ' ' && text[j] != '\t' &&
             text[j] != '\r' && text[j] != ',') {
        ++j;
      }
      row.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  flush();
  return rows;
}

}  // namespace detail

MosaicGrid parse_matrix(std::string_view text) {
  auto rows = detail::split_rows(text);
  if (rows.empty()) throw ParseError("empty mosaic matrix");
  const int n = static_cast<int>(rows.size());
  std::vector<Tile> cells;
  cells.reserve(rows.size() * rows.size());
  for (int r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("matrix is not square: expected " + std::to_string(n) + " entries, found " +
                           std::to_string(row.size()),
                       r + 1);
    }
    for (int c = 0; c < n; ++c) {
      std::string_view tok = row[static_cast<std::size_t>(c)];
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("not an integer: '" + std::string(tok) + "'", r + 1, c + 1);
      }
      if (value < 0 || value >= Tile::kCount) {
        throw ParseError("tile number out of range 0..10: " + std::to_string(value), r + 1, c + 1);
      }
      cells.emplace_back(value);
    }
  }
  return MosaicGrid(n, std::move(cells));
}

namespace {

std::string serialize_with(const MosaicGrid& grid, std::string_view row_sep) {
  std::string out;
  for (int r = 0; r < grid.size(); ++r) {
    if (r > 0) out += row_sep;
    for (int c = 0; c < grid.size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(grid.at(r, c).kind());
    }
  }
  return out;
}

}  // namespace

std::string serialize_matrix(const MosaicGrid& grid) { return serialize_with(grid, "\n"); }

std::string serialize_matrix_inline(const MosaicGrid& grid) { return serialize_with(grid, " / "); }

nlohmann::json grid_to_json(const MosaicGrid& grid) {
  nlohmann::json cells = nlohmann::json::array();
  for (int r = 0; r < grid.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < grid.size(); ++c) row.push_back(grid.at(r, c).kind());
    cells.push_back(std::move(row));
  }
  return {{"n", grid.size()}, {"cells", std::move(cells)}};
}

MosaicGrid grid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("mosaic JSON must be an object");
  if (!j.contains("cells") || !j["cells"].is_array()) throw ParseError("mosaic JSON needs a \"cells\" array");
  const auto& rows = j["cells"];
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ParseError("empty mosaic matrix");
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != n)) {
    throw ParseError("\"n\" does not match the number of rows");
  }
  std::vector<Tile> cells;
  cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError("matrix is not square", r + 1);
    }
    for (int c = 0; c < n; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number_integer()) throw ParseError("not an integer", r + 1, c + 1);
      const auto value = v.get<long long>();
      if (value < 0 || value >= Tile::kCount) {
        throw ParseError("tile number out of range 0..10: " + std::to_string(value), r + 1, c + 1);
      }
      cells.emplace_back(static_cast<int>(value));
    }
  }
  return MosaicGrid(n, std::move(cells));
}

std::vector<EdgeDefect> connection_defects(const MosaicGrid& grid) {
  std::vector<EdgeDefect> defects;
  const int n = grid.size();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const CellCoord here{r, c};
      const SideSet pts = grid.at(here).connection_points();
      for (Side s : kAllSides) {
        const CellCoord there = neighbor(here, s);
        if (!grid.contains(there)) {
          if (pts.contains(s)) defects.push_back({here, s, true});
          continue;
        }
        // Interior edges are checked from the top/left cell only.
        if (s != Side::Right && s != Side::Bottom) continue;
        if (pts.contains(s) != grid.at(there).connection_points().contains(opposite(s))) {
          defects.push_back({here, s, false});
        }
      }
    }
  }
  return defects;
}

bool is_suitably_connected(const MosaicGrid& grid) { return connection_defects(grid).empty(); }

int nonblank_count(const MosaicGrid& grid) noexcept {
  int count = 0;
  for (Tile t : grid.cells()) count += t.blank() ? 0 : 1;
  return count;
}

int crossing_count(const MosaicGrid& grid) noexcept {
  int count = 0;
  for (Tile t : grid.cells()) count += t.is_crossing() ? 1 : 0;
  return count;
}

MosaicGrid rotate_half_turn(const MosaicGrid& grid) {
  const int n = grid.size();
  MosaicGrid out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.set(n - 1 - r, n - 1 - c, rotate_half_turn(grid.at(r, c)));
  return out;
}

MosaicGrid reflect_left_right(const MosaicGrid& grid) {
  const int n = grid.size();
  MosaicGrid out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.set(r, n - 1 - c, reflect_left_right(grid.at(r, c)));
  return out;
}

}  // namespace knotmosaic
