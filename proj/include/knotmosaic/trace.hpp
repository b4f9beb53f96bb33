#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotmosaic/grid.hpp"
#include "knotmosaic/pd.hpp"

namespace knotmosaic {

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Knot: one component through every strand, with crossings.
/// NoCrossings: one component, no crossings. Link: more than one component.
enum class TraceKind { Knot, Link, NoCrossings };

std::string_view trace_kind_name(TraceKind kind) noexcept;

struct Visit {
  CellCoord cell;
  Side entry;
  friend bool operator==(const Visit&, const Visit&) = default;
};

struct CrossingVisit {
  CellCoord cell;
  Side entry;
  int label = 0;  // 1-based position among crossing visits
  bool under = false;
  friend bool operator==(const CrossingVisit&, const CrossingVisit&) = default;
};

struct TraceResult {
  TraceKind kind = TraceKind::Link;
  /// Cell incidences from the start tile until the walk closes.
  std::vector<Visit> visits;
  std::vector<CrossingVisit> crossing_visits;
  /// Cell incidences a single component would need.
  int expected_incidences = 0;

  int crossing_count() const noexcept { return static_cast<int>(crossing_visits.size()) / 2; }
};

/// Walks the strand from the first non-blank cell in row-major order (which
/// must be T2), leaving through its Right side, until it re-enters that cell
/// through Bottom.
///
/// Throws TraceError when the grid has no strand, the first tile is not T2,
/// or the walk runs off the grid.
TraceResult trace(const MosaicGrid& grid);

/// Crossing labels as (odd, signed even) pairs sorted by odd label; the even
/// label is negated when that visit passes under.
struct GaussPairs {
  std::vector<std::pair<int, int>> pairs;

  GaussPairs() = default;
  /// Validates that odd labels are 1,3,..,2c-1 and |even| labels are 2,..,2c.
  explicit GaussPairs(std::vector<std::pair<int, int>> pairs);
  friend bool operator==(const GaussPairs&, const GaussPairs&) = default;
};

struct DTCode {
  std::vector<int> entries;
  friend bool operator==(const DTCode&, const DTCode&) = default;
};

/// Throws TraceError unless `result` is a knot with at least one crossing.
GaussPairs gauss_pairs(const TraceResult& result);
DTCode dt_code(const GaussPairs& pairs);

/// "4 -6 2"
std::string format_dt(const DTCode& dt);
/// "(1,4),(3,-6),(5,2)"
std::string format_gauss(const GaussPairs& pairs);

/// Arcs are numbered along the walk: arc v enters crossing visit v and arc
/// v+1 (cyclically) leaves it. A crossing-free knot gives the empty code.
/// Throws TraceError on links.
PDCode to_pd(const TraceResult& result);

}  // namespace knotmosaic
