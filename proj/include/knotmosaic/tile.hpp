#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace knotmosaic {

enum class Side : std::uint8_t { Top = 0, Right = 1, Bottom = 2, Left = 3 };

inline constexpr std::array<Side, 4> kAllSides = {Side::Top, Side::Right, Side::Bottom, Side::Left};

constexpr Side opposite(Side s) noexcept {
  return static_cast<Side>((static_cast<unsigned>(s) + 2) % 4);
}

// Counterclockwise neighbor as drawn on screen (row index grows downward):
// Bottom -> Right -> Top -> Left -> Bottom.
constexpr Side ccw(Side s) noexcept {
  return static_cast<Side>((static_cast<unsigned>(s) + 3) % 4);
}

constexpr bool is_horizontal(Side s) noexcept { return s == Side::Left || s == Side::Right; }

std::string_view side_name(Side s) noexcept;

/// Bit set over Side, bit i <-> Side(i).
class SideSet {
 public:
  constexpr SideSet() = default;
  constexpr SideSet(std::initializer_list<Side> sides) {
    for (Side s : sides) bits_ |= bit(s);
  }
  constexpr bool contains(Side s) const noexcept { return (bits_ & bit(s)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept {
    return ((bits_ >> 0) & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1) + ((bits_ >> 3) & 1);
  }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  friend constexpr bool operator==(SideSet, SideSet) = default;

 private:
  static constexpr std::uint8_t bit(Side s) noexcept { return std::uint8_t(1u << static_cast<unsigned>(s)); }
  std::uint8_t bits_ = 0;
};

class NoStrandError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One of the eleven mosaic tiles T0..T10.
///
/// T0 blank; T1..T4 single arcs; T5 horizontal, T6 vertical line; T7, T8
/// double arcs; T9, T10 crossings. T9 carries the vertical strand over,
/// T10 the horizontal strand over.
class Tile {
 public:
  static constexpr int kCount = 11;

  constexpr Tile() = default;
  /// Throws std::out_of_range unless 0 <= kind <= 10.
  explicit constexpr Tile(int kind) : kind_(checked(kind)) {}

  constexpr int kind() const noexcept { return kind_; }
  constexpr bool blank() const noexcept { return kind_ == 0; }
  constexpr bool is_crossing() const noexcept { return kind_ == 9 || kind_ == 10; }
  /// T7..T10 carry two strands and are traversed twice.
  constexpr bool has_four_points() const noexcept { return kind_ >= 7; }
  constexpr int strand_count() const noexcept { return kind_ == 0 ? 0 : (kind_ >= 7 ? 2 : 1); }

  SideSet connection_points() const noexcept;
  /// Side joined to `entry` by this tile's strand; NoStrandError when the
  /// tile has no connection point on `entry`.
  Side exit_side(Side entry) const;
  /// For crossing tiles: whether a strand entering on `entry` passes under.
  bool passes_under(Side entry) const noexcept;

  friend constexpr bool operator==(Tile, Tile) = default;

 private:
  static constexpr std::uint8_t checked(int kind) {
    if (kind < 0 || kind >= kCount) throw std::out_of_range("tile kind out of range 0..10");
    return static_cast<std::uint8_t>(kind);
  }
  std::uint8_t kind_ = 0;
};

SideSet connection_points(Tile tile) noexcept;
Side exit_side(Tile tile, Side entry);

/// Image of a tile under a left-right reflection of the mosaic (crossings keep
/// their vertical-over or horizontal-over drawing).
Tile reflect_left_right(Tile tile) noexcept;
/// Swaps T9 and T10 (crossing change); other tiles unchanged.
Tile switch_crossing(Tile tile) noexcept;
/// Image of a tile under a 180 degree rotation of the mosaic.
Tile rotate_half_turn(Tile tile) noexcept;

}  // namespace knotmosaic
