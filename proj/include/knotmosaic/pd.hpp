#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotmosaic {

class InvalidPDError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One crossing of a planar diagram code.
///
/// arcs[0] is the under-strand arc entering the crossing; the rest follow
/// counterclockwise, so the under strand runs arcs[0] -> arcs[2]. The over
/// strand runs arcs[3] -> arcs[1] on a positive (right-handed) crossing and
/// arcs[1] -> arcs[3] on a negative one.
struct PDCrossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  int over_in() const noexcept { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_out() const noexcept { return sign > 0 ? arcs[1] : arcs[3]; }

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

/// Oriented planar diagram code. An empty crossing list is the crossing-free
/// unknot.
class PDCode {
 public:
  PDCode() = default;
  explicit PDCode(std::vector<PDCrossing> crossings) : crossings_(std::move(crossings)) {}

  const std::vector<PDCrossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  bool empty() const noexcept { return crossings_.empty(); }

  /// Throws InvalidPDError unless every arc appears exactly twice, once
  /// entering and once leaving a crossing, and there are 2c distinct arcs.
  void validate() const;
  /// Number of closed strands; meaningful only on a validated code.
  int component_count() const;

  friend bool operator==(const PDCode&, const PDCode&) = default;

 private:
  std::vector<PDCrossing> crossings_;
};

/// Same diagram with every crossing switched.
PDCode mirror(const PDCode& pd);

/// Text form "PD[(a,b,c,d)+,(a,b,c,d)-,...]"; the mark is the crossing sign.
std::string format_pd(const PDCode& pd);
PDCode parse_pd(std::string_view text);

/// Builds a code from unsigned 4-tuples whose arcs are numbered 1..2c
/// consecutively along the orientation, inferring each sign from the
/// labels of the over strand. Requires at least two crossings.
PDCode pd_from_sequential_tuples(const std::vector<std::array<int, 4>>& tuples);

}  // namespace knotmosaic
