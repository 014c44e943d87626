import random
from fractions import Fraction

import pytest

from convexkit.kernel.linsolve import (
    MAX_FREE_DIMS,
    ParamSolution,
    positive_point,
    solve_linear_exact,
)

F = Fraction


def test_unique_solution():
    # x + y = 3, x - y = 1  ->  (2, 1)
    sol = solve_linear_exact([[F(1), F(1)], [F(1), F(-1)]], [F(3), F(1)])
    assert sol is not None and sol.dim == 0
    assert sol.point([]) == [F(2), F(1)]


def test_infeasible_returns_none():
    sol = solve_linear_exact([[F(1), F(1)], [F(2), F(2)]], [F(1), F(3)])
    assert sol is None


def test_underdetermined_space_contains_its_points():
    # x + y + z = 6 leaves a 2-parameter family
    sol = solve_linear_exact([[F(1), F(1), F(1)]], [F(6)])
    assert sol.dim == 2
    rng = random.Random(0)
    for _ in range(50):
        params = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(2)]
        pt = sol.point(params)
        assert sum(pt) == 6
        assert sol.contains(pt)
    assert not sol.contains([F(1), F(1), F(1)])


def test_coordinate_form_reconstructs_coordinates():
    sol = solve_linear_exact([[F(1), F(2), F(0)], [F(0), F(0), F(1)]], [F(4), F(5)])
    rng = random.Random(1)
    for _ in range(20):
        params = [F(rng.randint(-20, 20)) for _ in range(sol.dim)]
        pt = sol.point(params)
        for i in range(3):
            const, coeffs = sol.coordinate_form(i)
            assert const + sum(c * p for c, p in zip(coeffs, params)) == pt[i]


def test_random_consistent_systems_solve_exactly():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 5)
        m = rng.randint(1, n + 1)
        target = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
        matrix = [[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(m)]
        rhs = [sum(a * t for a, t in zip(row, target)) for row in matrix]
        sol = solve_linear_exact(matrix, rhs)
        assert sol is not None
        assert sol.contains(target)


def test_positive_point_found_on_open_region():
    # x + y = 1 with both positive: plenty of room
    sol = solve_linear_exact([[F(1), F(1)]], [F(1)])
    res = positive_point(sol, [0, 1])
    assert res.point is not None
    assert all(v > 0 for v in res.point)
    assert sol.contains(res.point)


def test_positive_point_certifies_empty():
    # x + y = 0 forces opposite signs
    sol = solve_linear_exact([[F(1), F(1)]], [F(0)])
    res = positive_point(sol, [0, 1])
    assert res.point is None
    assert res.certified_empty


def test_positive_point_zero_dim():
    sol = solve_linear_exact([[F(1), F(0)], [F(0), F(1)]], [F(2), F(3)])
    res = positive_point(sol, [0, 1])
    assert res.point == [F(2), F(3)]
    bad = solve_linear_exact([[F(1), F(0)], [F(0), F(1)]], [F(2), F(-3)])
    res2 = positive_point(bad, [0, 1])
    assert res2.point is None and res2.certified_empty


def test_dimension_cap_enforced():
    n = MAX_FREE_DIMS + 2
    sol = solve_linear_exact([[F(1)] * n], [F(1)])
    assert sol.dim == n - 1 > MAX_FREE_DIMS
    with pytest.raises(ValueError):
        positive_point(sol, list(range(n)))


def test_param_solution_names_survive():
    sol = solve_linear_exact([[F(1), F(1)]], [F(2)], names=["w0", "h0"])
    assert isinstance(sol, ParamSolution)
    assert sol.names == ["w0", "h0"]
