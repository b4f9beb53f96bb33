"""Knot mosaic tracing, invariants and identification."""

import json
import os
from pathlib import Path

from ._core import (
    CatalogError,
    InvalidPDError,
    LayoutError,
    ParseError,
    TraceError,
    count_candidates,
    dt_from_gauss,
    fingerprint,
    is_suitably_connected,
    parse_matrix,
    pd_of,
    serialize_matrix,
    trace,
)
from ._core import Catalog as _Catalog

__all__ = [
    "Catalog",
    "CatalogError",
    "InvalidPDError",
    "LayoutError",
    "ParseError",
    "TraceError",
    "count_candidates",
    "default_catalog_path",
    "dt_from_gauss",
    "fingerprint",
    "is_suitably_connected",
    "parse_matrix",
    "pd_of",
    "serialize_matrix",
    "trace",
]


def default_catalog_path():
    bundled = Path(__file__).parent / "data" / "prime_knots_10.txt"
    if bundled.exists():
        return str(bundled)
    return str(Path(os.environ["KNOTMOSAIC_DATA_DIR"]) / "catalog" / "prime_knots_10.txt")


class Catalog(_Catalog):
    """Prime knot catalog with fingerprints, ready for identification."""

    def __init__(self, path=None):
        super().__init__(path or default_catalog_path())

    def describe(self, mosaic):
        """Identify response for a mosaic given as matrix text or a list of rows."""
        cells = parse_matrix(mosaic) if isinstance(mosaic, str) else mosaic
        return json.loads(self.describe_json(cells))
