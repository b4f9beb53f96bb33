#include "knotmosaic/tile.hpp"

#include <string>

namespace knotmosaic {

namespace {

using enum Side;

constexpr std::array<SideSet, Tile::kCount> kPoints = {
    SideSet{},
    SideSet{Left, Bottom},
    SideSet{Bottom, Right},
    SideSet{Top, Right},
    SideSet{Top, Left},
    SideSet{Left, Right},
    SideSet{Top, Bottom},
    SideSet{Top, Bottom, Left, Right},
    SideSet{Top, Bottom, Left, Right},
    SideSet{Top, Bottom, Left, Right},
    SideSet{Top, Bottom, Left, Right},
};

// Exit side indexed by [kind][entry]; entries with no strand are never read.
constexpr Side kExit[Tile::kCount][4] = {
    //  Top     Right   Bottom  Left
    {Top, Top, Top, Top},
    {Top, Top, Left, Bottom},
    {Top, Bottom, Right, Top},
    {Right, Top, Top, Top},
    {Left, Top, Top, Top},
    {Top, Left, Top, Right},
    {Bottom, Top, Top, Top},
    {Right, Top, Left, Bottom},
    {Left, Bottom, Right, Top},
    {Bottom, Left, Top, Right},
    {Bottom, Left, Top, Right},
};

}  // namespace

std::string_view side_name(Side s) noexcept {
  switch (s) {
    case Top: return "Top";
    case Right: return "Right";
    case Bottom: return "Bottom";
    case Left: return "Left";
  }
  return "?";
}

SideSet Tile::connection_points() const noexcept { return kPoints[kind_]; }

Side Tile::exit_side(Side entry) const {
  if (!kPoints[kind_].contains(entry)) {
    throw NoStrandError("tile T" + std::to_string(kind_) + " has no strand on side " +
                        std::string(side_name(entry)));
  }
  return kExit[kind_][static_cast<unsigned>(entry)];
}

bool Tile::passes_under(Side entry) const noexcept {
  if (kind_ == 9) return is_horizontal(entry);
  if (kind_ == 10) return !is_horizontal(entry);
  return false;
}

SideSet connection_points(Tile tile) noexcept { return tile.connection_points(); }

Side exit_side(Tile tile, Side entry) { return tile.exit_side(entry); }

Tile reflect_left_right(Tile tile) noexcept {
  static constexpr int kMap[Tile::kCount] = {0, 2, 1, 4, 3, 5, 6, 8, 7, 9, 10};
  return Tile(kMap[tile.kind()]);
}

Tile switch_crossing(Tile tile) noexcept {
  if (tile.kind() == 9) return Tile(10);
  if (tile.kind() == 10) return Tile(9);
  return tile;
}

Tile rotate_half_turn(Tile tile) noexcept {
  static constexpr int kMap[Tile::kCount] = {0, 3, 4, 1, 2, 5, 6, 7, 8, 9, 10};
  return Tile(kMap[tile.kind()]);
}

}  // namespace knotmosaic
