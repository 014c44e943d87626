"""Exhaustive search for perfect rectangle tilings.

Given a finite tile set, enumerate every target rectangle (up to the
W >= H symmetry) that the full set tiles exactly, with one witness layout
per target.  Dimensions are rescaled to integers by the lcm of the input
denominators, so the backtracking search is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .tiles import Layout, Placement, Tile, TileSet

DEFAULT_TILE_CAP = 24


class UnsupportedInstance(ValueError):
    """Instance exceeds the exhaustive-search cap."""


@dataclass(frozen=True)
class TilingResult:
    width: Fraction
    height: Fraction
    layout: Layout


def _integer_scale(ts: TileSet) -> int:
    denom = 1
    for t in ts:
        denom = denom * t.width.denominator // math.gcd(denom, t.width.denominator)
        denom = denom * t.height.denominator // math.gcd(denom, t.height.denominator)
    return denom


def _side_sums(choices: List[Tuple[int, ...]], limit: int) -> set:
    """Subset sums where each tile contributes 0 or one of its `choices`.
    Any edge of any tiling is partitioned by placed tile sides, so valid
    target sides must live in this set.  Bitset dynamic programming."""
    mask = 1
    keep = (1 << (limit + 1)) - 1
    for opts in choices:
        nxt = mask
        for v in set(opts):
            nxt |= mask << v
        mask = nxt & keep
    out = set()
    for s in range(1, limit + 1):
        if (mask >> s) & 1:
            out.add(s)
    return out


def _search_fill(
    dims: List[Tuple[int, int]],
    counts: List[int],
    W: int,
    H: int,
    allow_rotation: bool,
) -> Optional[List[Tuple[int, int, int, bool]]]:
    """Try to tile the W x H integer rectangle with the given multiset of
    tile dimensions.  Returns placements (dims index, x, y, rotated) or None.

    Always fills the lowest-leftmost uncovered cell; the tile covering that
    cell must have its bottom-left corner there, so trying every distinct
    tile dimension in each orientation is exhaustive.  The covered region
    stays a histogram of column heights.
    """
    skyline = [0] * W
    placed: List[Tuple[int, int, int, bool]] = []
    remaining = sum(counts)

    def rec(remaining: int) -> bool:
        if remaining == 0:
            return True
        y = min(skyline)
        x = skyline.index(y)
        run = 0
        while x + run < W and skyline[x + run] == y:
            run += 1
        free_h = H - y
        for i, (w, h) in enumerate(dims):
            if counts[i] == 0:
                continue
            for rot in (False, True):
                if rot and (not allow_rotation or w == h):
                    continue
                pw, ph = (h, w) if rot else (w, h)
                if pw > run or ph > free_h:
                    continue
                counts[i] -= 1
                for c in range(x, x + pw):
                    skyline[c] = y + ph
                placed.append((i, x, y, rot))
                if rec(remaining - 1):
                    return True
                placed.pop()
                for c in range(x, x + pw):
                    skyline[c] = y
                counts[i] += 1
        return False

    return placed if rec(remaining) else None


def enumerate_layouts(
    ts: TileSet,
    allow_rotation: bool = True,
    cap: int = DEFAULT_TILE_CAP,
) -> List[TilingResult]:
    """All target rectangles the tile set tiles exactly, one witness layout
    each, deduplicated up to the W x H <-> H x W symmetry (with rotation
    allowed the W >= H orientation is reported).  Exact: a target appears
    iff a perfect tiling exists, and every witness passes verify_layout.
    """
    if len(ts) > cap:
        raise UnsupportedInstance(
            f"{len(ts)} tiles exceeds the exhaustive-search cap of {cap}"
        )
    scale = _integer_scale(ts)
    sides = []
    for t in ts:
        sides.append((int(t.width * scale), int(t.height * scale)))
    area = sum(w * h for w, h in sides)

    # Distinct dims with multiplicity; remember which tile ids carry each.
    dim_ids: dict = {}
    for t, (w, h) in zip(ts, sides):
        dim_ids.setdefault((w, h), []).append(t.id)
    dims = sorted(dim_ids)
    id_pools = [list(dim_ids[d]) for d in dims]

    if allow_rotation:
        wsums = hsums = _side_sums([(w, h) for w, h in sides], area)
    else:
        wsums = _side_sums([(w,) for w, _ in sides], area)
        hsums = _side_sums([(h,) for _, h in sides], area)

    # Candidate targets, one per unordered dimension pair.  Without rotation
    # the two orientations of a pair differ, so both may need an attempt.
    candidates: dict = {}
    for W in sorted(wsums):
        if area % W != 0:
            continue
        H = area // W
        if H not in hsums:
            continue
        if allow_rotation and H > W:
            continue
        key = (max(W, H), min(W, H))
        candidates.setdefault(key, []).append((W, H))

    results = []
    for key in sorted(candidates):
        witness = None
        for W, H in sorted(candidates[key], reverse=True):
            counts = [len(pool) for pool in id_pools]
            witness = _search_fill(dims, counts, W, H, allow_rotation)
            if witness is not None:
                break
        if witness is None:
            continue
        pools = [list(pool) for pool in id_pools]
        placements = []
        for i, x, y, rot in witness:
            tid = pools[i].pop(0)
            placements.append(
                Placement(tid, Fraction(x, scale), Fraction(y, scale), rot)
            )
        placements.sort(key=lambda p: p.tile_id)
        results.append(
            TilingResult(
                Fraction(W, scale),
                Fraction(H, scale),
                Layout(Fraction(W, scale), Fraction(H, scale), tuple(placements)),
            )
        )
    return results


def layout_count(ts: TileSet, allow_rotation: bool = True, cap: int = DEFAULT_TILE_CAP) -> int:
    """Number of distinct target rectangles (unordered dimension pairs)."""
    return len(enumerate_layouts(ts, allow_rotation=allow_rotation, cap=cap))
