"""Convex polygons in the float kernel: metrics, calipers, clipping helpers.

Vertices are stored counterclockwise with the lexicographically smallest
vertex first. Construction cleans duplicate and collinear points at 1e-12
relative tolerance; everything else runs at the 1e-9 tolerance used across
the floating-point paths.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

EPS = 1e-9
_CLEAN_EPS = 1e-12

Point = tuple[float, float]


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class ConvexPolygon:
    """Immutable convex polygon; raises ValueError on degenerate input."""

    __slots__ = ("vertices", "_area", "_perimeter")

    def __init__(self, points: Iterable[Sequence[float]]):
        pts = [(float(x), float(y)) for x, y in points]
        if len(pts) < 3:
            raise ValueError("need at least 3 vertices")
        scale = max(max(abs(x), abs(y)) for x, y in pts) or 1.0

        # signed area decides orientation; flip clockwise input
        area2 = sum(pts[i][0] * pts[(i + 1) % len(pts)][1]
                    - pts[(i + 1) % len(pts)][0] * pts[i][1]
                    for i in range(len(pts)))
        if area2 < 0:
            pts.reverse()

        pts = self._cleanup(pts, scale)
        if len(pts) < 3:
            raise ValueError("degenerate polygon after cleanup")
        for i in range(len(pts)):
            if _cross(pts[i], pts[(i + 1) % len(pts)], pts[(i + 2) % len(pts)]) <= 0:
                raise ValueError("vertices are not strictly convex counterclockwise")

        start = min(range(len(pts)), key=lambda i: pts[i])
        self.vertices: tuple[Point, ...] = tuple(pts[start:] + pts[:start])
        self._area: float | None = None
        self._perimeter: float | None = None

    @staticmethod
    def _cleanup(pts: list[Point], scale: float) -> list[Point]:
        tol = _CLEAN_EPS * scale
        out: list[Point] = []
        for p in pts:
            if not out or math.dist(out[-1], p) > tol:
                out.append(p)
        while len(out) > 1 and math.dist(out[0], out[-1]) <= tol:
            out.pop()
        # drop collinear middles; cross product scales like scale^2
        changed = True
        while changed and len(out) >= 3:
            changed = False
            kept = []
            n = len(out)
            for i in range(n):
                if abs(_cross(out[i - 1], out[i], out[(i + 1) % n])) > _CLEAN_EPS * scale * scale:
                    kept.append(out[i])
                else:
                    changed = True
            out = kept
        return out

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"ConvexPolygon({len(self.vertices)} vertices, area={self.area:.6g})"

    @property
    def area(self) -> float:
        if self._area is None:
            v = np.asarray(self.vertices)
            x, y = v[:, 0], v[:, 1]
            self._area = 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))
        return self._area

    @property
    def perimeter(self) -> float:
        if self._perimeter is None:
            v = np.asarray(self.vertices)
            self._perimeter = float(np.sum(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)))
        return self._perimeter

    def contains(self, p: Sequence[float], tol: float = EPS) -> bool:
        px, py = float(p[0]), float(p[1])
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            if (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0]) < -tol:
                return False
        return True


def polygon_metrics(poly: ConvexPolygon) -> dict[str, float]:
    """Area (shoelace) and perimeter."""
    return {"area": poly.area, "perimeter": poly.perimeter}


def diameter(poly: ConvexPolygon) -> float:
    """Largest vertex-to-vertex distance, by rotating calipers.

    Walks antipodal pairs along the hull in O(n); vertices are already
    convex and ordered, so no re-hulling is needed.
    """
    v = poly.vertices
    n = len(v)
    if n == 3:
        return max(math.dist(v[0], v[1]), math.dist(v[1], v[2]), math.dist(v[2], v[0]))
    best = 0.0
    j = 1
    for i in range(n):
        ni = (i + 1) % n
        # advance j while the next vertex is farther from edge (i, i+1)
        while True:
            nj = (j + 1) % n
            adv = _cross(v[i], v[ni], v[nj]) - _cross(v[i], v[ni], v[j])
            if adv > 0:
                j = nj
            else:
                break
        best = max(best, math.dist(v[i], v[j]), math.dist(v[ni], v[j]))
    return best


def min_width(poly: ConvexPolygon) -> float:
    """Smallest width over all directions; attained normal to some edge."""
    v = np.asarray(poly.vertices)
    n = len(v)
    edges = np.roll(v, -1, axis=0) - v
    lengths = np.linalg.norm(edges, axis=1)
    best = math.inf
    for i in range(n):
        normal = np.array([-edges[i, 1], edges[i, 0]]) / lengths[i]
        d = (v - v[i]) @ normal
        best = min(best, float(d.max()))
    return best


def rectangle(width: float, height: float) -> ConvexPolygon:
    if width <= 0 or height <= 0:
        raise ValueError("rectangle sides must be positive")
    return ConvexPolygon([(0.0, 0.0), (width, 0.0), (width, height), (0.0, height)])


def regular_ngon(n: int, circumradius: float = 1.0,
                 center: Point = (0.0, 0.0)) -> ConvexPolygon:
    if n < 3:
        raise ValueError("need n >= 3")
    cx, cy = center
    pts = [(cx + circumradius * math.cos(2 * math.pi * k / n),
            cy + circumradius * math.sin(2 * math.pi * k / n)) for k in range(n)]
    return ConvexPolygon(pts)


def random_convex_polygon(rng, max_vertices: int = 12) -> ConvexPolygon:
    """Hull of random points; useful for seeded property sweeps."""
    while True:
        k = rng.randint(4, max(4, max_vertices + 2))
        pts = [(rng.uniform(-1, 1) * rng.uniform(0.5, 3.0),
                rng.uniform(-1, 1) * rng.uniform(0.5, 3.0)) for _ in range(k)]
        hull = convex_hull(pts)
        if len(hull) >= 3:
            try:
                return ConvexPolygon(hull)
            except ValueError:
                continue


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Monotone chain; returns counterclockwise hull without repetition."""
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
