#pragma once

#include <nlohmann/json.hpp>

#include "knotmosaic/catalog.hpp"
#include "knotmosaic/grid.hpp"

namespace knotmosaic {

/// Validation, trace, invariants and identification of one mosaic as the
/// identify response object:
///
///   {valid, kind: "knot"|"link"|"invalid", nonblank, crossings,
///    dt: [signed evens] | null, knot: name | "unknot" | "ambiguous:[..]" |
///    "unknown" | null, invariants: {jones, alexander, determinant} | null,
///    errors: [..]}
///
/// Shared by the CLI `identify` subcommand and POST /api/identify.
nlohmann::json describe_mosaic(const MosaicGrid& grid, const FingerprintIndex& index);

/// Tile metadata for UI rendering: connection points and strand pairings.
nlohmann::json tile_metadata();

}  // namespace knotmosaic
