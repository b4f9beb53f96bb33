#include "knotmosaic/trace.hpp"

#include <algorithm>
#include <map>

namespace knotmosaic {

std::string_view trace_kind_name(TraceKind kind) noexcept {
  switch (kind) {
    case TraceKind::Knot: return "knot";
    case TraceKind::Link: return "link";
    case TraceKind::NoCrossings: return "unknot";
  }
  return "?";
}

TraceResult trace(const MosaicGrid& grid) {
  const int n = grid.size();
  std::optional<CellCoord> start;
  int expected = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Tile t = grid.at(r, c);
      expected += t.strand_count();
      if (!start && !t.blank()) start = CellCoord{r, c};
    }
  }
  if (!start) throw TraceError("mosaic has no strand");
  if (grid.at(*start).kind() != 2) {
    throw TraceError("first non-blank tile must be T2, found T" + std::to_string(grid.at(*start).kind()));
  }

  TraceResult result;
  result.expected_incidences = expected;
  result.visits.push_back({*start, Side::Bottom});
  CellCoord cell = neighbor(*start, Side::Right);
  Side entry = Side::Left;
  while (!(cell == *start && entry == Side::Bottom)) {
    if (!grid.contains(cell)) throw TraceError("strand leaves the grid");
    if (static_cast<int>(result.visits.size()) >= expected) throw TraceError("strand does not close");
    const Tile tile = grid.at(cell);
    const Side exit = [&] {
      try {
        return tile.exit_side(entry);
      } catch (const NoStrandError& e) {
        throw TraceError(std::string("strand breaks: ") + e.what());
      }
    }();
    result.visits.push_back({cell, entry});
    if (tile.is_crossing()) {
      const int label = static_cast<int>(result.crossing_visits.size()) + 1;
      result.crossing_visits.push_back({cell, entry, label, tile.passes_under(entry)});
    }
    cell = neighbor(cell, exit);
    entry = opposite(exit);
  }

  if (static_cast<int>(result.visits.size()) != expected) {
    result.kind = TraceKind::Link;
  } else {
    result.kind = result.crossing_visits.empty() ? TraceKind::NoCrossings : TraceKind::Knot;
  }
  return result;
}

GaussPairs::GaussPairs(std::vector<std::pair<int, int>> p) : pairs(std::move(p)) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> evens;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first != static_cast<int>(2 * i + 1)) throw std::invalid_argument("odd labels must be 1,3,...,2c-1");
    evens.push_back(std::abs(pairs[i].second));
  }
  std::sort(evens.begin(), evens.end());
  for (std::size_t i = 0; i < evens.size(); ++i) {
    if (evens[i] != static_cast<int>(2 * i + 2)) throw std::invalid_argument("even labels must be 2,4,...,2c");
  }
}

GaussPairs gauss_pairs(const TraceResult& result) {
  if (result.kind != TraceKind::Knot) throw TraceError("Gauss pairs need a knot with at least one crossing");
  std::map<CellCoord, std::vector<const CrossingVisit*>> by_cell;
  for (const CrossingVisit& v : result.crossing_visits) by_cell[v.cell].push_back(&v);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [cell, visits] : by_cell) {
    if (visits.size() != 2 || visits[0]->label % 2 == visits[1]->label % 2) {
      throw TraceError("crossing visits do not pair odd with even");
    }
    const CrossingVisit* odd = visits[0]->label % 2 ? visits[0] : visits[1];
    const CrossingVisit* even = visits[0]->label % 2 ? visits[1] : visits[0];
    pairs.emplace_back(odd->label, even->under ? -even->label : even->label);
  }
  return GaussPairs(std::move(pairs));
}

DTCode dt_code(const GaussPairs& pairs) {
  DTCode dt;
  dt.entries.reserve(pairs.pairs.size());
  for (const auto& [odd, even] : pairs.pairs) dt.entries.push_back(even);
  return dt;
}

std::string format_dt(const DTCode& dt) {
  std::string out;
  for (std::size_t i = 0; i < dt.entries.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(dt.entries[i]);
  }
  return out;
}

std::string format_gauss(const GaussPairs& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.pairs.size(); ++i) {
    if (i > 0) out += ',';
    out += "(" + std::to_string(pairs.pairs[i].first) + "," + std::to_string(pairs.pairs[i].second) + ")";
  }
  return out;
}

PDCode to_pd(const TraceResult& result) {
  if (result.kind == TraceKind::Link) throw TraceError("a link has no knot PD code");
  if (result.kind == TraceKind::NoCrossings) return PDCode{};
  const int arcs = static_cast<int>(result.crossing_visits.size());
  auto in_arc = [](int label) { return label; };
  auto out_arc = [arcs](int label) { return label % arcs + 1; };

  std::map<CellCoord, std::vector<const CrossingVisit*>> by_cell;
  for (const CrossingVisit& v : result.crossing_visits) by_cell[v.cell].push_back(&v);

  // Ordered by the under strand's entering visit so codes are reproducible.
  std::vector<std::pair<int, PDCrossing>> ordered;
  for (const auto& [cell, visits] : by_cell) {
    if (visits.size() != 2 || visits[0]->under == visits[1]->under) {
      throw TraceError("crossing needs exactly one over and one under visit");
    }
    const CrossingVisit& under = visits[0]->under ? *visits[0] : *visits[1];
    const CrossingVisit& over = visits[0]->under ? *visits[1] : *visits[0];
    auto arc_at = [&](Side s) {
      if (s == under.entry) return in_arc(under.label);
      if (s == opposite(under.entry)) return out_arc(under.label);
      if (s == over.entry) return in_arc(over.label);
      return out_arc(over.label);
    };
    PDCrossing x;
    Side s = under.entry;
    for (int i = 0; i < 4; ++i, s = ccw(s)) x.arcs[static_cast<std::size_t>(i)] = arc_at(s);
    x.sign = over.entry == ccw(opposite(under.entry)) ? 1 : -1;
    ordered.emplace_back(under.label, x);
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PDCrossing> crossings;
  crossings.reserve(ordered.size());
  for (auto& [label, x] : ordered) crossings.push_back(x);
  return PDCode(std::move(crossings));
}

}  // namespace knotmosaic
