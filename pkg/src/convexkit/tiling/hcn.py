"""Highly composite numbers and the tile families they generate.

A record-setter (highly composite number) is a positive integer with more
divisors than every smaller positive integer.  When h is such a number and
m = 1 + 2 + ... + i divides h with quotient d, the multiset holding d tiles
of each width 1..i (all of height L) has total width-sum h, and it packs a
strip of width F for every divisor F of h with F >= i.  Counting feasible
strip widths over all divisors links the divisor count of h to the number
of distinct packings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from .tiles import Layout, Placement, Tile, TileSet, split_extension


def divisor_count(v: int) -> int:
    """Exact number of divisors by trial-division factorization."""
    if v <= 0:
        raise ValueError("divisor_count needs a positive integer")
    count = 1
    p = 2
    while p * p <= v:
        if v % p == 0:
            e = 0
            while v % p == 0:
                v //= p
                e += 1
            count *= e + 1
        p += 1 if p == 2 else 2
    if v > 1:
        count *= 2
    return count


def divisors(v: int) -> List[int]:
    small = [d for d in range(1, int(v**0.5) + 1) if v % d == 0]
    large = [v // d for d in reversed(small) if d * d != v]
    return small + large


def divisor_sieve(limit: int) -> np.ndarray:
    """d[v] = number of divisors of v for v in 0..limit (d[0] unused)."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    d = np.zeros(limit + 1, dtype=np.uint16)
    for i in range(1, limit + 1):
        d[i::i] += 1
    return d


def hcn_up_to(limit: int) -> List[int]:
    """All record-setters for the divisor count in 1..limit, ascending."""
    d = divisor_sieve(limit)
    body = d[1:].astype(np.int64)
    prev_best = np.concatenate(([0], np.maximum.accumulate(body)[:-1]))
    return (np.nonzero(body > prev_best)[0] + 1).tolist()


def is_hcn(v: int) -> bool:
    if v < 1:
        return False
    d = divisor_sieve(v)
    target = d[v]
    return bool((d[1:v] < target).all())


def triangular(i: int) -> int:
    if i < 1:
        raise ValueError("triangular index must be >= 1")
    return i * (i + 1) // 2


@dataclass(frozen=True)
class HcnContext:
    """h highly composite, m = triangular(i) dividing h, d = h / m,
    L the common tile height."""

    h: int
    m: int
    i: int
    d: int
    L: Fraction

    def __post_init__(self):
        if self.m != triangular(self.i):
            raise ValueError(f"m = {self.m} is not the {self.i}-th triangular number")
        if self.h % self.m != 0 or self.d != self.h // self.m:
            raise ValueError(f"need d = h/m exactly, got h={self.h} m={self.m} d={self.d}")
        if self.L <= 0:
            raise ValueError("tile height L must be positive")
        if not is_hcn(self.h):
            raise ValueError(f"{self.h} is not a divisor-count record-setter")


def hcn_context(h: int, i: int, L) -> HcnContext:
    m = triangular(i)
    if h % m != 0:
        raise ValueError(f"triangular(i) = {m} does not divide h = {h}")
    return HcnContext(h, m, i, h // m, Fraction(L))


def build_hcn_tileset(ctx: HcnContext) -> TileSet:
    """d tiles of each width 1..i, all of height L, ids 1..(i*d) with
    widths ascending."""
    tiles = []
    next_id = 1
    for w in range(1, ctx.i + 1):
        for _ in range(ctx.d):
            tiles.append(Tile(next_id, Fraction(w), ctx.L))
            next_id += 1
    return TileSet(tiles)


def _partition_widths(counts: List[int], i: int, target: int) -> Optional[List[List[int]]]:
    """Split the width multiset {w: counts[w]} into groups each summing to
    `target`.  Greedy-plus-backtracking: fill one group at a time, widest
    tile first, never leaving a remainder the remaining widths cannot make."""
    total = sum(w * c for w, c in enumerate(counts))
    if total == 0:
        return []
    if any(counts[w] > 0 for w in range(target + 1, len(counts))):
        return None
    groups: List[List[int]] = []

    def fill(group: List[int], room: int, max_w: int) -> bool:
        if room == 0:
            groups.append(group[:])
            rest = fill_next()
            if rest:
                return True
            groups.pop()
            return False
        for w in range(min(max_w, room), 0, -1):
            if counts[w] == 0:
                continue
            counts[w] -= 1
            group.append(w)
            if fill(group, room - w, w):
                return True
            group.pop()
            counts[w] += 1
        return False

    def fill_next() -> bool:
        if all(c == 0 for c in counts):
            return True
        return fill([], target, i)

    return groups if fill_next() else None


def construct_width_layout(ctx: HcnContext, F: int) -> Optional[Layout]:
    """A packing of the full tile family into an F x (h/F)*L rectangle,
    or None when width F is infeasible.  F must divide h; each row is one
    group of tiles whose widths sum to F."""
    if ctx.h % F != 0:
        raise ValueError(f"width {F} does not divide h = {ctx.h}")
    counts = [0] * (ctx.i + 1)
    for w in range(1, ctx.i + 1):
        counts[w] = ctx.d
    groups = _partition_widths(counts, ctx.i, F)
    if groups is None:
        return None

    # Pools of tile ids per width, handed out in id order.
    ts = build_hcn_tileset(ctx)
    pools: Dict[int, List[int]] = {}
    for t in ts:
        pools.setdefault(int(t.width), []).append(t.id)
    placements = []
    y = Fraction(0)
    for group in groups:
        x = Fraction(0)
        for w in sorted(group):
            tid = pools[w].pop(0)
            placements.append(Placement(tid, x, y, False))
            x += w
        y += ctx.L
    return Layout(Fraction(F), y, tuple(placements))


def hcn_layout_census(ctx: HcnContext) -> Dict[int, Optional[Layout]]:
    """Feasibility of every divisor width of h, ascending: width -> witness
    layout or None.  The number of feasible widths is the object of study."""
    return {F: construct_width_layout(ctx, F) for F in divisors(ctx.h)}


def census_count(census: Dict[int, Optional[Layout]]) -> int:
    return sum(1 for v in census.values() if v is not None)


def hcn_split_census(ctx: HcnContext):
    """Census after halving one width-1 tile.

    The split tile set still packs every feasible width of the base census
    (stack the two halves where the original tile stood).  When L = 2(h-1)
    one extra width appears: all unsplit tiles side by side make an
    (h-1) x L block, and the two 1 x L/2 halves, rotated, stack on top as
    full-width rows.  Returns (tileset, {width -> layout}).
    """
    base = hcn_layout_census(ctx)
    ts = build_hcn_tileset(ctx)
    split_id = next(t.id for t in ts if t.width == 1)
    half = ctx.L / 2
    ts2 = split_extension(ts, split_id, "h", half)
    new_id = max(t.id for t in ts2)

    out: Dict[int, Optional[Layout]] = {}
    for F, layout in base.items():
        if layout is None:
            continue
        placements = []
        for p in layout.placements:
            if p.tile_id == split_id:
                placements.append(Placement(split_id, p.x, p.y, False))
                placements.append(Placement(new_id, p.x, p.y + half, False))
            else:
                placements.append(p)
        out[F] = Layout(layout.target_width, layout.target_height, tuple(placements))

    extra = ctx.h - 1
    if ctx.L == 2 * (ctx.h - 1) and extra not in out:
        placements = []
        x = Fraction(0)
        for t in ts2:
            if t.id in (split_id, new_id):
                continue
            placements.append(Placement(t.id, x, Fraction(0), False))
            x += t.width
        # Two rotated halves lie flat across the top, each L/2 = h-1 wide.
        placements.append(Placement(split_id, Fraction(0), ctx.L, True))
        placements.append(Placement(new_id, Fraction(0), ctx.L + 1, True))
        out[extra] = Layout(Fraction(extra), ctx.L + 2, tuple(placements))
    return ts2, dict(sorted(out.items()))
