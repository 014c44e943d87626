"""convexkit: exploration toolkit for four corners of combinatorial and
metric geometry.

- tiling: rectangles tiled by rectangles (exact arithmetic), mosaic
  floorplans, the distinct-area unit-semiperimeter search, and layout
  censuses of divisor-record tile sets
- fairpart: straight cuts of convex regions splitting area a:b and
  perimeter sqrt(a):sqrt(b), plus a boundary-band partition family
- extremal: diameter extremizers at fixed area and perimeter (lens
  maximizer, constant-width and sector families at the low end)
- polyhedra: distinct convex solids sharing one face multiset

Exact layers use fractions.Fraction; float layers pin tolerances per
operation.
"""

from . import extremal, fairpart, kernel, polyhedra, tiling
from .kernel import (
    ConvexPolygon,
    ParamSolution,
    Rational,
    SupportBody,
    rectangle,
    regular_ngon,
    support_body_metrics,
)

__version__ = "0.1.0"

__all__ = [
    "ConvexPolygon",
    "ParamSolution",
    "Rational",
    "SupportBody",
    "extremal",
    "fairpart",
    "kernel",
    "polyhedra",
    "rectangle",
    "regular_ngon",
    "support_body_metrics",
    "tiling",
    "__version__",
]
