"""Diameter extremizers at fixed area and perimeter.

Upper end: among convex regions with given area A and perimeter p, the
two-circular-arc lens maximizes the diameter; the solver inverts the lens
family's area/perimeter^2 ratio, whose monotonicity in the half-angle is
checked numerically at import rather than assumed.

Lower end: no closed-form minimizer is known.  We explore two families
with small diameter: constant-width bodies interpolating Reuleaux triangle
to disc (all of diameter p/pi), and circular sectors, which extend below
the constant-width area floor at the cost of a growing diameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .kernel import DEFAULT_SAMPLES, SupportBody, support_body_metrics

EPS = 1e-9

# Dense grids keep the trapezoid area error of the Reuleaux body near 6e-8,
# an order below the 1e-6 contract on constant-width areas.
CW_SAMPLES = 14400

REULEAUX_AREA_COEFF = 0.5 * (math.pi - math.sqrt(3.0))


@dataclass(frozen=True)
class Lens:
    """Intersection of two equal discs.  diameter d is the corner-to-corner
    chord; alpha in (0, pi/2] is the half-angle of each arc, pi/2 the disc."""

    diameter: float
    alpha: float

    def __post_init__(self):
        if self.diameter <= 0:
            raise ValueError("lens diameter must be positive")
        if not (0.0 < self.alpha <= math.pi / 2 + 1e-12):
            raise ValueError("lens half-angle must lie in (0, pi/2]")

    @property
    def arc_radius(self) -> float:
        return self.diameter / (2.0 * math.sin(self.alpha))


def lens_metrics(lens: Lens) -> dict:
    r = lens.arc_radius
    a = lens.alpha
    return {
        "area": 2.0 * r * r * (a - math.sin(a) * math.cos(a)),
        "perimeter": 4.0 * a * r,
        "diameter": lens.diameter,
    }


def _lens_ratio(alpha: float) -> float:
    """area / perimeter^2 of the lens with half-angle alpha; scale-free."""
    return (alpha - math.sin(alpha) * math.cos(alpha)) / (8.0 * alpha * alpha)


def _check_lens_ratio_monotone(n: int = 10_000) -> None:
    a = np.linspace(1e-4, math.pi / 2, n)
    u = (a - np.sin(a) * np.cos(a)) / (8.0 * a * a)
    if not (np.diff(u) > 0).all():
        raise AssertionError("lens area/perimeter^2 ratio is not monotone")


_check_lens_ratio_monotone()


def max_diameter_shape(area: float, perimeter: float) -> Optional[Lens]:
    """The lens with the given area and perimeter, or None when no convex
    shape fits (area above the disc bound p^2/4pi).  At the bound the disc
    itself comes back, as the alpha = pi/2 lens."""
    if area <= 0 or perimeter <= 0:
        raise ValueError("area and perimeter must be positive")
    u = area / (perimeter * perimeter)
    u_disc = 1.0 / (4.0 * math.pi)
    if u > u_disc * (1.0 + 1e-12):
        return None
    lo, hi = 1e-12, math.pi / 2
    if u >= u_disc:
        alpha = math.pi / 2
    else:
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if _lens_ratio(mid) < u:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-15:
                break
        alpha = 0.5 * (lo + hi)
    d = perimeter * math.sin(alpha) / (2.0 * alpha)
    return Lens(d, alpha)


def reuleaux_metrics(width: float) -> dict:
    """Closed-form Reuleaux triangle values: area (pi - sqrt(3))/2 * w^2,
    perimeter pi w, diameter w."""
    if width <= 0:
        raise ValueError("width must be positive")
    return {
        "area": REULEAUX_AREA_COEFF * width * width,
        "perimeter": math.pi * width,
        "diameter": width,
    }


def sector_metrics(radius: float, phi: float) -> dict:
    """Circular sector of radius r and opening angle phi in (0, pi].
    Perimeter counts the two radii; diameter is the radius up to phi = pi/3,
    the far chord beyond."""
    if radius <= 0:
        raise ValueError("sector radius must be positive")
    if not (0.0 < phi <= math.pi + 1e-12):
        raise ValueError("sector angle must lie in (0, pi]")
    return {
        "area": 0.5 * radius * radius * phi,
        "perimeter": radius * (2.0 + phi),
        "diameter": max(radius, 2.0 * radius * math.sin(phi / 2.0)),
    }


def solve_sector(area: float, perimeter: float) -> List[Tuple[float, float]]:
    """All sectors (r, phi), phi in (0, pi], with the given area and
    perimeter.  u = A/p^2 = phi / (2 (2+phi)^2) rises to 1/16 at phi = 2
    then falls; each monotone branch is bisected, so zero, one, or two
    sectors come back."""
    if area <= 0 or perimeter <= 0:
        raise ValueError("area and perimeter must be positive")
    u = area / (perimeter * perimeter)

    def f(phi: float) -> float:
        return phi / (2.0 * (2.0 + phi) ** 2)

    out: List[Tuple[float, float]] = []
    for lo, hi, rising in ((1e-12, 2.0, True), (2.0, math.pi, False)):
        flo, fhi = f(lo), f(hi)
        fmin, fmax = min(flo, fhi), max(flo, fhi)
        if not (fmin - 1e-15 <= u <= fmax + 1e-15):
            continue
        a, b = lo, hi
        for _ in range(200):
            mid = 0.5 * (a + b)
            if (f(mid) < u) == rising:
                a = mid
            else:
                b = mid
            if b - a <= 1e-15:
                break
        phi = 0.5 * (a + b)
        r = perimeter / (2.0 + phi)
        out.append((r, phi))
    # The two branches meet at phi = 2; the peak is quadratic, so bisection
    # resolves phi only to ~sqrt(eps) there.  Drop the duplicate root.
    if len(out) == 2 and abs(out[0][1] - out[1][1]) < 1e-6:
        out.pop()
    return out


def _reuleaux_support_fn(width: float):
    """Support function of the Reuleaux triangle, width w, centered at the
    circumcenter of the generating equilateral triangle (side w, vertices
    at angles 90, 210, 330 degrees).  In directions within pi/6 of the
    outward normal opposite a vertex the boundary is the arc of radius w
    about that vertex; elsewhere the support comes from the vertices."""
    rc = width / math.sqrt(3.0)
    verts = [
        (rc * math.cos(a), rc * math.sin(a))
        for a in (math.pi / 2, math.pi / 2 + 2 * math.pi / 3, math.pi / 2 + 4 * math.pi / 3)
    ]

    def h(theta: float) -> float:
        u = (math.cos(theta), math.sin(theta))
        best = max(v[0] * u[0] + v[1] * u[1] for v in verts)
        for v in verts:
            away = math.atan2(-v[1], -v[0])
            delta = (theta - away + math.pi) % (2 * math.pi) - math.pi
            if abs(delta) <= math.pi / 6 + 1e-15:
                best = max(best, v[0] * u[0] + v[1] * u[1] + width)
        return best

    return h


def reuleaux_support(width: float = 1.0, samples: int = CW_SAMPLES) -> SupportBody:
    if width <= 0:
        raise ValueError("width must be positive")
    return SupportBody.from_function(_reuleaux_support_fn(width), samples)


def interpolate_constant_width(
    t: float, width: float = 1.0, samples: int = CW_SAMPLES
) -> SupportBody:
    """Minkowski interpolation (1-t) Reuleaux + t disc; every member has
    constant width `width`, hence perimeter pi * width."""
    if not (0.0 <= t <= 1.0):
        raise ValueError("interpolation parameter must lie in [0, 1]")
    reuleaux = reuleaux_support(width, samples)
    disc = SupportBody.disc(width, samples)
    return reuleaux.combine(disc, t)


def interpolant_with_area(
    area: float, width: float = 1.0, samples: int = CW_SAMPLES
) -> Tuple[float, SupportBody]:
    """The interpolation parameter whose body has the given area; the area
    runs monotonically from the Reuleaux value to the disc value."""
    lo_a = REULEAUX_AREA_COEFF * width * width
    hi_a = 0.25 * math.pi * width * width
    if not (lo_a - 1e-9 <= area <= hi_a + 1e-9):
        raise ValueError(
            f"area {area:.6g} outside the constant-width range [{lo_a:.6g}, {hi_a:.6g}]"
        )
    reuleaux = reuleaux_support(width, samples)
    disc = SupportBody.disc(width, samples)
    lo, hi = 0.0, 1.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        body = reuleaux.combine(disc, mid)
        if support_body_metrics(body)["area"] < area:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    return t, reuleaux.combine(disc, t)


def min_diameter_explore(area: float, perimeter: float = math.pi) -> dict:
    """Survey the known small-diameter families at the given area and
    perimeter.  Constant-width bodies cover areas between the Reuleaux and
    disc values (diameter exactly perimeter/pi); sectors reach lower areas
    with larger diameters.  Areas above the disc bound are infeasible."""
    if area <= 0 or perimeter <= 0:
        raise ValueError("area and perimeter must be positive")
    w = perimeter / math.pi
    disc_area = 0.25 * math.pi * w * w
    reuleaux_area = REULEAUX_AREA_COEFF * w * w
    report: dict = {
        "area": area,
        "perimeter": perimeter,
        "width": w,
        "disc_area": disc_area,
        "reuleaux_area": reuleaux_area,
        "feasible": area <= disc_area * (1.0 + 1e-12),
        "candidates": [],
    }
    if not report["feasible"]:
        report["reason"] = "area exceeds the disc bound p^2 / 4 pi"
        return report

    if reuleaux_area - 1e-12 <= area:
        t, body = interpolant_with_area(min(area, disc_area), w)
        m = support_body_metrics(body)
        report["candidates"].append(
            {
                "family": "constant-width",
                "diameter": w,
                "t": t,
                "area": m["area"],
                "perimeter": m["perimeter"],
            }
        )
    for r, phi in solve_sector(area, perimeter):
        m = sector_metrics(r, phi)
        report["candidates"].append(
            {
                "family": "sector",
                "diameter": m["diameter"],
                "radius": r,
                "phi": phi,
                "area": m["area"],
                "perimeter": m["perimeter"],
            }
        )
    if report["candidates"]:
        best = min(report["candidates"], key=lambda c: c["diameter"])
        report["best"] = best
    else:
        report["reason"] = "no surveyed family reaches this area"
    return report


# Conjectured crossover between the constant-width and sector regimes,
# recorded from prior experiments at perimeter pi: the sector with angle
# pi/3 and these approximate metrics.
CONJECTURED_CROSSOVER = {"diameter": 1.045, "area": 0.57, "phi": math.pi / 3}


def crossover_scan(perimeter: float = math.pi) -> dict:
    """Reconciliation of the conjectured sector crossover against exact
    sector algebra.  The sector family's diameter is minimized exactly at
    phi = pi/3 (radius equals far chord there); the scan reports that knee,
    the recorded conjecture scaled to this perimeter, and the sectors that
    actually meet the conjectured area."""
    if perimeter <= 0:
        raise ValueError("perimeter must be positive")
    scale = perimeter / math.pi

    knee_phi = math.pi / 3
    knee_r = perimeter / (2.0 + knee_phi)
    knee = sector_metrics(knee_r, knee_phi)

    conj = {
        "diameter": CONJECTURED_CROSSOVER["diameter"] * scale,
        "area": CONJECTURED_CROSSOVER["area"] * scale * scale,
        "phi": CONJECTURED_CROSSOVER["phi"],
    }
    at_conj_area = [
        {"radius": r, "phi": phi, **sector_metrics(r, phi)}
        for r, phi in solve_sector(conj["area"], perimeter)
    ]

    w = perimeter / math.pi
    return {
        "perimeter": perimeter,
        "constant_width_diameter": w,
        "constant_width_area_range": (
            REULEAUX_AREA_COEFF * w * w,
            0.25 * math.pi * w * w,
        ),
        "sector_min_diameter": knee["diameter"],
        "crossover": {
            "radius": knee_r,
            "phi": knee_phi,
            "area": knee["area"],
            "diameter": knee["diameter"],
        },
        "conjectured": conj,
        "sectors_at_conjectured_area": at_conj_area,
    }
