"""Tilings by rectangles of equal semiperimeter and distinct areas.

For a fixed floorplan, requiring every room to have semiperimeter 1
(any other value is a rescaling) gives a linear system in the segment
coordinates and room dimensions.  We solve it exactly, look for a point
with all dimensions positive, and then decide whether some pair of rooms
is forced to share its area on the whole solution space.  Room areas are
w*(1-w), so rooms i and j share area iff w_i = w_j or w_i + w_j = 1;
on an affine solution space that happens identically iff one of the two
linear forms vanishes identically on the space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..kernel import (
    MAX_FREE_DIMS,
    ParamSolution,
    positive_point,
    solve_linear_exact,
)
from .floorplans import MAX_ROOMS, Floorplan, enumerate_floorplans
from .tiles import Layout, Placement, Tile, TileSet, verify_layout

PERTURB_ATTEMPTS = 10_000


def build_isoperimetric_system(fp: Floorplan):
    """Equations over (x_0..x_{nv-1}, y_0..y_{nh-1}, w_0, h_0, ..., w_{n-1}, h_{n-1}):
    walls pinned at 0, room dimensions consistent with their segments, and
    every semiperimeter w_i + h_i equal to 1."""
    nv, nh, n = fp.num_vsegs, fp.num_hsegs, fp.n
    names = (
        [f"x{i}" for i in range(nv)]
        + [f"y{i}" for i in range(nh)]
        + [v for i in range(n) for v in (f"w{i}", f"h{i}")]
    )
    nvars = len(names)

    def xi(i):
        return i

    def yi(i):
        return nv + i

    def wi(i):
        return nv + nh + 2 * i

    def hi(i):
        return nv + nh + 2 * i + 1

    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []

    def add(coeffs, b):
        row = [Fraction(0)] * nvars
        for idx, c in coeffs:
            row[idx] += Fraction(c)
        rows.append(row)
        rhs.append(Fraction(b))

    add([(xi(0), 1)], 0)
    add([(yi(0), 1)], 0)
    for i, (l, r, b, t) in enumerate(fp.rooms):
        add([(xi(r), 1), (xi(l), -1), (wi(i), -1)], 0)
        add([(yi(t), 1), (yi(b), -1), (hi(i), -1)], 0)
        add([(wi(i), 1), (hi(i), 1)], 1)
    return rows, rhs, names


def solve_isoperimetric(fp: Floorplan) -> Optional[ParamSolution]:
    """Exact solution space of the unit-semiperimeter system, or None when
    the floorplan admits no such assignment at all (signs ignored)."""
    rows, rhs, names = build_isoperimetric_system(fp)
    return solve_linear_exact(rows, rhs, names)


def _linear_form_on_space(sol: ParamSolution, coeffs) -> Tuple[Fraction, Tuple[Fraction, ...]]:
    """Restrict sum(c_i * var_i) + const to the parameter space."""
    const = Fraction(0)
    grad = [Fraction(0)] * sol.dim
    for idx, c in coeffs[0]:
        k, ks = sol.coordinate_form(idx)
        const += c * k
        for d in range(sol.dim):
            grad[d] += c * ks[d]
    const += coeffs[1]
    return const, tuple(grad)


def _is_identically_zero(sol: ParamSolution, coeffs, shift) -> bool:
    const, grad = _linear_form_on_space(sol, (coeffs, Fraction(shift)))
    return const == 0 and all(g == 0 for g in grad)


@dataclass(frozen=True)
class ForcedPair:
    room_i: int
    room_j: int
    relation: str  # "w_i = w_j" or "w_i + w_j = 1"


@dataclass(frozen=True)
class IsoWitness:
    floorplan: Floorplan
    solution: ParamSolution
    values: dict
    layout: Layout
    tileset: TileSet
    areas: Tuple[Fraction, ...]


@dataclass(frozen=True)
class IsoSearchResult:
    """status: "witnesses", "exhausted-no-solution", or "inconclusive".

    exhausted-no-solution means every floorplan was certified impossible:
    either its linear system is infeasible, no all-positive point exists
    (exact elimination certificate), or two rooms are forced to equal areas
    identically on the solution space.  inconclusive lists the floorplans
    that resisted certification.
    """

    n: int
    status: str
    witnesses: Tuple[IsoWitness, ...]
    forced: Tuple[Tuple[Floorplan, ForcedPair], ...]
    residual: Tuple[Floorplan, ...]
    examined: int


def forced_equal_pair(sol: ParamSolution, fp: Floorplan) -> Optional[ForcedPair]:
    """A pair of rooms whose areas agree identically on the solution space,
    if any.  Area equality a_i = a_j factors as (w_i - w_j)(1 - w_i - w_j) = 0;
    the space is irreducible (affine), so identical equality forces one factor
    to vanish identically."""
    nv, nh = fp.num_vsegs, fp.num_hsegs

    def wi(i):
        return nv + nh + 2 * i

    n = fp.n
    for i in range(n):
        for j in range(i + 1, n):
            if _is_identically_zero(sol, [(wi(i), Fraction(1)), (wi(j), Fraction(-1))], 0):
                return ForcedPair(i, j, f"w{i} = w{j}")
            if _is_identically_zero(sol, [(wi(i), Fraction(1)), (wi(j), Fraction(1))], -1):
                return ForcedPair(i, j, f"w{i} + w{j} = 1")
    return None


def _witness_from_point(fp: Floorplan, sol: ParamSolution, point) -> Optional[IsoWitness]:
    nv, nh, n = fp.num_vsegs, fp.num_hsegs, fp.n
    xs = point[:nv]
    ys = point[nv : nv + nh]
    dims = [(point[nv + nh + 2 * i], point[nv + nh + 2 * i + 1]) for i in range(n)]
    if any(w <= 0 or h <= 0 for w, h in dims):
        return None
    areas = tuple(w * h for w, h in dims)
    if len(set(areas)) != n:
        return None
    tiles = TileSet([Tile(i + 1, w, h) for i, (w, h) in enumerate(dims)])
    placements = tuple(
        Placement(i + 1, xs[l], ys[b], False)
        for i, (l, r, b, t) in enumerate(fp.rooms)
    )
    layout = Layout(xs[1], ys[1], placements)
    if verify_layout(tiles, layout) is not None:
        return None
    values = dict(zip(sol.names, point))
    return IsoWitness(fp, sol, values, layout, tiles, areas)


def _distinct_area_point(fp: Floorplan, sol: ParamSolution, start_params, seed: int):
    """Perturb the parameters of a known positive point, looking for all
    dimensions positive and all areas pairwise distinct.  Distinctness is
    a finite union of hyperplane complements, so a generic nearby rational
    point works; shrink the step when positivity keeps failing."""
    rng = random.Random(seed)
    base = list(start_params)
    w = _witness_from_point(fp, sol, sol.point(base))
    if w is not None:
        return w
    for attempt in range(PERTURB_ATTEMPTS):
        scale = Fraction(1, 2 ** (2 + attempt * 12 // PERTURB_ATTEMPTS))
        params = [
            b + Fraction(rng.randint(-999, 999), 999) * scale for b in base
        ]
        w = _witness_from_point(fp, sol, sol.point(params))
        if w is not None:
            return w
    return None


def search_isoperimetric(
    n: int,
    limit: Optional[int] = None,
    seed: int = 0,
) -> IsoSearchResult:
    """Search every n-room floorplan for a tiling by rectangles of equal
    semiperimeter and pairwise distinct areas.  Stops after `limit`
    witnesses when given.  n = 1 is impossible by definition (a lone room
    has nothing to differ from, and the census question needs >= 2 rooms),
    so it reports exhausted-no-solution over the single floorplan."""
    if not (1 <= n <= MAX_ROOMS):
        raise ValueError(f"n must be in 1..{MAX_ROOMS}, got {n}")
    witnesses: List[IsoWitness] = []
    forced: List[Tuple[Floorplan, ForcedPair]] = []
    residual: List[Floorplan] = []
    examined = 0
    for fp in enumerate_floorplans(n):
        examined += 1
        sol = solve_isoperimetric(fp)
        if sol is None:
            continue
        if n == 1:
            # One room of semiperimeter 1 always exists; the distinct-areas
            # question is vacuous and counted as having no solution.
            continue
        nv, nh = fp.num_vsegs, fp.num_hsegs
        pos_idx = list(range(nv + nh, nv + nh + 2 * n))
        if sol.dim > MAX_FREE_DIMS:
            residual.append(fp)
            continue
        pp = positive_point(sol, pos_idx, seed=seed)
        if pp.certified_empty:
            continue
        if pp.point is None:
            residual.append(fp)
            continue
        pair = forced_equal_pair(sol, fp)
        if pair is not None:
            forced.append((fp, pair))
            continue
        witness = _distinct_area_point(fp, sol, pp.params, seed)
        if witness is None:
            residual.append(fp)
            continue
        witnesses.append(witness)
        if limit is not None and len(witnesses) >= limit:
            break
    if witnesses:
        status = "witnesses"
    elif residual:
        status = "inconclusive"
    else:
        status = "exhausted-no-solution"
    return IsoSearchResult(
        n, status, tuple(witnesses), tuple(forced), tuple(residual), examined
    )
