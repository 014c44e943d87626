"""Shared numeric and geometric primitives: exact rationals, exact linear
solving, float convex polygons, and sampled support bodies."""

from .linsolve import (
    MAX_FREE_DIMS,
    EliminationOverflow,
    ParamSolution,
    PositivePoint,
    positive_point,
    solve_linear_exact,
)
from .polygon import (
    ConvexPolygon,
    convex_hull,
    diameter,
    min_width,
    polygon_metrics,
    random_convex_polygon,
    rectangle,
    regular_ngon,
)
from .rational import Rational, format_rational, parse_rational, rational_arith
from .support import DEFAULT_SAMPLES, SupportBody, support_body_metrics

__all__ = [
    "MAX_FREE_DIMS",
    "EliminationOverflow",
    "ParamSolution",
    "PositivePoint",
    "positive_point",
    "solve_linear_exact",
    "ConvexPolygon",
    "convex_hull",
    "diameter",
    "min_width",
    "polygon_metrics",
    "random_convex_polygon",
    "rectangle",
    "regular_ngon",
    "Rational",
    "format_rational",
    "parse_rational",
    "rational_arith",
    "DEFAULT_SAMPLES",
    "SupportBody",
    "support_body_metrics",
]
