"""Equal-semiperimeter, distinct-area tilings: impossibility and witnesses."""

import os
from fractions import Fraction

import pytest

from convexkit.tiling import (
    Floorplan,
    load_layout,
    load_tileset,
    search_isoperimetric,
    solve_isoperimetric,
    verify_layout,
)

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.mark.parametrize(
    "n,examined",
    [(1, 1), (2, 2), (3, 6), (4, 22), (5, 92)],
)
def test_small_counts_are_certified_impossible(n, examined):
    result = search_isoperimetric(n)
    assert result.status == "exhausted-no-solution"
    assert result.examined == examined
    assert not result.witnesses
    assert not result.residual


def test_two_rooms_forced_equal_widths():
    result = search_isoperimetric(2)
    assert len(result.forced) == 2
    for fp, pair in result.forced:
        assert (pair.room_i, pair.room_j) == (0, 1)
        assert pair.relation == "w0 = w1"


def test_seven_rooms_has_witness():
    result = search_isoperimetric(7, limit=1)
    assert result.status == "witnesses"
    assert len(result.witnesses) == 1
    w = result.witnesses[0]
    assert (w.layout.target_width, w.layout.target_height) == (
        Fraction(10, 9),
        Fraction(37, 36),
    )
    assert len(set(w.areas)) == 7
    for t in w.tileset:
        assert t.width + t.height == 1
    assert verify_layout(w.tileset, w.layout) is None
    # values dict mirrors the solution point
    assert w.values["x0"] == 0 and w.values["y0"] == 0
    assert w.values["x1"] == w.layout.target_width


def test_witness_search_is_deterministic():
    a = search_isoperimetric(7, limit=1)
    b = search_isoperimetric(7, limit=1)
    assert a.examined == b.examined
    assert a.witnesses[0].values == b.witnesses[0].values


def test_search_bounds():
    with pytest.raises(ValueError):
        search_isoperimetric(0)
    with pytest.raises(ValueError):
        search_isoperimetric(9)


def segment_ids(coords, hi):
    """0 and hi are the walls (ids 0, 1); interior coordinates get 2.. in order."""
    m = {Fraction(0): 0, hi: 1}
    for k, c in enumerate(sorted(c for c in coords if c != 0 and c != hi)):
        m[c] = k + 2
    return m


def test_seven_tile_fixture_solves_after_rescaling():
    """The 24 x 18 spiral layout, rescaled so every semiperimeter is 1,
    must be a point of the exact solution space of its own floorplan."""
    seven = load_tileset(os.path.join(DATA, "seven.tiles"))
    layout = load_layout(os.path.join(DATA, "seven.json"))
    assert verify_layout(seven, layout) is None
    W, H = layout.target_width, layout.target_height

    rects = [layout.placed_rect(seven, p) for p in layout.placements]
    vmap = segment_ids({r[0] for r in rects} | {r[2] for r in rects}, W)
    hmap = segment_ids({r[1] for r in rects} | {r[3] for r in rects}, H)
    rooms = tuple(
        (vmap[x0], vmap[x1], hmap[y0], hmap[y1]) for (x0, y0, x1, y1) in rects
    )
    fp = Floorplan(rooms, len(vmap), len(hmap), ())

    sol = solve_isoperimetric(fp)
    assert sol is not None

    # semiperimeter is 39/2, so scaling by 2/39 normalizes it to 1
    scale = Fraction(2, 39)
    inv_v = {v: c for c, v in vmap.items()}
    inv_h = {v: c for c, v in hmap.items()}
    point = [inv_v[i] * scale for i in range(len(vmap))]
    point += [inv_h[i] * scale for i in range(len(hmap))]
    for x0, y0, x1, y1 in rects:
        point += [(x1 - x0) * scale, (y1 - y0) * scale]
    assert sol.contains(point)
