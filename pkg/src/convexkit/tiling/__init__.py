"""Rectangle tilings: exact verification, exhaustive search, floorplan
combinatorics, equal-semiperimeter census, and divisor-record families."""

from .tiles import (
    DefectReport,
    Layout,
    Placement,
    Tile,
    TileFileError,
    TileSet,
    layout_from_json,
    layout_to_json,
    load_layout,
    load_tileset,
    parse_tileset,
    serialize_tileset,
    split_extension,
    verify_layout,
)
from .search import (
    DEFAULT_TILE_CAP,
    TilingResult,
    UnsupportedInstance,
    enumerate_layouts,
    layout_count,
)
from .floorplans import (
    MAX_ROOMS,
    Floorplan,
    baxter_count,
    enumerate_floorplans,
    floorplan_from_code,
    is_baxter,
)
from .isoperimetric import (
    ForcedPair,
    IsoSearchResult,
    IsoWitness,
    build_isoperimetric_system,
    forced_equal_pair,
    search_isoperimetric,
    solve_isoperimetric,
)
from .hcn import (
    HcnContext,
    build_hcn_tileset,
    census_count,
    construct_width_layout,
    divisor_count,
    divisor_sieve,
    divisors,
    hcn_context,
    hcn_layout_census,
    hcn_split_census,
    hcn_up_to,
    is_hcn,
    triangular,
)

__all__ = [
    "DefectReport",
    "Layout",
    "Placement",
    "Tile",
    "TileFileError",
    "TileSet",
    "layout_from_json",
    "layout_to_json",
    "load_layout",
    "load_tileset",
    "parse_tileset",
    "serialize_tileset",
    "split_extension",
    "verify_layout",
    "DEFAULT_TILE_CAP",
    "TilingResult",
    "UnsupportedInstance",
    "enumerate_layouts",
    "layout_count",
    "MAX_ROOMS",
    "Floorplan",
    "baxter_count",
    "enumerate_floorplans",
    "floorplan_from_code",
    "is_baxter",
    "ForcedPair",
    "IsoSearchResult",
    "IsoWitness",
    "build_isoperimetric_system",
    "forced_equal_pair",
    "search_isoperimetric",
    "solve_isoperimetric",
    "HcnContext",
    "build_hcn_tileset",
    "census_count",
    "construct_width_layout",
    "divisor_count",
    "divisor_sieve",
    "divisors",
    "hcn_context",
    "hcn_layout_census",
    "hcn_split_census",
    "hcn_up_to",
    "is_hcn",
    "triangular",
]
