#include "knotmosaic/describe.hpp"

#include "knotmosaic/invariants.hpp"
#include "knotmosaic/trace.hpp"

namespace knotmosaic {

namespace {

std::string defect_message(const EdgeDefect& d) {
  const std::string where = "(" + std::to_string(d.cell.row) + "," + std::to_string(d.cell.col) + ") " +
                            std::string(side_name(d.side));
  return d.boundary ? "connection point faces the boundary at " + where : "unmatched connection at " + where;
}

// Knot Jones polynomials have integer exponents in t = q, stored x4.
std::string jones_text(const LaurentPoly& jones) {
  LaurentPoly t;
  for (const auto& [e, c] : jones.terms()) {
    if (e % 4 != 0) return jones.to_string("q^(1/4)");
    t.add_term(c, e / 4);
  }
  return t.to_string("t");
}

nlohmann::json invariants_json(const Fingerprint& fp) {
  return {{"jones", jones_text(fp.jones)},
          {"alexander", fp.alexander.to_string("t")},
          {"determinant", fp.determinant.convert_to<long long>()}};
}

}  // namespace

nlohmann::json describe_mosaic(const MosaicGrid& grid, const FingerprintIndex& index) {
  nlohmann::json out = {{"valid", true},
                        {"kind", "invalid"},
                        {"nonblank", nonblank_count(grid)},
                        {"crossings", crossing_count(grid)},
                        {"dt", nullptr},
                        {"knot", nullptr},
                        {"invariants", nullptr},
                        {"errors", nlohmann::json::array()}};
  const auto defects = connection_defects(grid);
  if (!defects.empty()) {
    out["valid"] = false;
    for (const EdgeDefect& d : defects) out["errors"].push_back(defect_message(d));
    return out;
  }
  if (nonblank_count(grid) == 0) {
    out["errors"].push_back("no strand");
    return out;
  }
  TraceResult t;
  try {
    t = trace(grid);
  } catch (const TraceError& e) {
    out["valid"] = false;
    out["errors"].push_back(e.what());
    return out;
  }
  if (t.kind == TraceKind::Link) {
    out["kind"] = "link";
    return out;
  }
  out["kind"] = "knot";
  const PDCode pd = to_pd(t);
  const Fingerprint fp = fingerprint(pd);
  out["invariants"] = invariants_json(fp);
  if (t.kind == TraceKind::Knot) {
    out["dt"] = dt_code(gauss_pairs(t)).entries;
  }
  out["knot"] = identify(fp, pd.crossing_count(), index).label();
  return out;
}

nlohmann::json tile_metadata() {
  nlohmann::json tiles = nlohmann::json::array();
  for (int k = 0; k < Tile::kCount; ++k) {
    const Tile tile(k);
    nlohmann::json points = nlohmann::json::array();
    nlohmann::json strands = nlohmann::json::array();
    for (Side s : kAllSides) {
      if (!tile.connection_points().contains(s)) continue;
      points.push_back(side_name(s));
      const Side e = tile.exit_side(s);
      if (static_cast<int>(s) < static_cast<int>(e)) strands.push_back({side_name(s), side_name(e)});
    }
    nlohmann::json entry = {{"kind", k}, {"connections", points}, {"strands", strands}};
    if (k == 9) entry["over"] = "vertical";
    if (k == 10) entry["over"] = "horizontal";
    tiles.push_back(std::move(entry));
  }
  return {{"tiles", tiles}};
}

}  // namespace knotmosaic
