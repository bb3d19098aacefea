import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from billiards import (
    AsteroidPoint,
    DiagonalSegment,
    GridPoint,
    NormalizedGrid,
    NotCoprimeError,
    Parity,
    PointKind,
    asteroid_point,
    billiard_trajectory,
    classify,
    fold,
    parity,
    reflective_walk,
    visited_point_set,
)

from conftest import coprime_grids

GRIDS = coprime_grids(12)


@st.composite
def coprime_grid(draw, limit=60):
    p = draw(st.integers(1, limit))
    q = draw(st.integers(1, limit).filter(lambda q: math.gcd(p, q) == 1))
    return NormalizedGrid(p, q)


@pytest.mark.parametrize(
    "n, p, q, expected",
    [(0, 4, 3, (0, 0)), (3, 2, 1, (3, 1)), (7, 3, 2, (1, 3)), (-1, 3, 2, (5, 3))],
)
def test_asteroid_point(n, p, q, expected):
    assert asteroid_point(n, NormalizedGrid(p, q)) == AsteroidPoint(*expected)


@pytest.mark.parametrize(
    "point, p, q, expected",
    [((1, 1), 2, 1, (1, 1)), ((3, 1), 2, 1, (1, 1)), ((5, 3), 3, 2, (1, 1)),
     ((2, 3), 3, 2, (2, 1)), ((3, 2), 3, 2, (3, 2))],
)
def test_fold_cases(point, p, q, expected):
    assert fold(point, NormalizedGrid(p, q)) == GridPoint(*expected)


def test_fold_rejects_non_residue():
    with pytest.raises(ValueError):
        fold((6, 0), NormalizedGrid(3, 2))


@pytest.mark.parametrize(
    "p, q, visited",
    [
        (2, 1, [(0, 0), (1, 1), (2, 0)]),
        (1, 1, [(0, 0), (1, 1)]),
        # hand trace of the bouncing ball
        (3, 2, [(0, 0), (1, 1), (2, 2), (3, 1), (2, 0), (1, 1), (0, 2)]),
    ],
)
def test_billiard_trajectory_examples(p, q, visited):
    grid = NormalizedGrid(p, q)
    traj = billiard_trajectory(grid)
    assert list(traj.visited) == visited
    assert len(traj.segments) == p * q
    assert reflective_walk(grid).visited == traj.visited


@pytest.mark.parametrize("build", [billiard_trajectory, reflective_walk])
def test_non_coprime_rejected(build):
    with pytest.raises(NotCoprimeError):
        build(NormalizedGrid(4, 6))


def test_five_by_three_models_agree():
    grid = NormalizedGrid(5, 3)
    assert billiard_trajectory(grid).segments == reflective_walk(grid).segments


def test_five_by_four_visits_checkerboard():
    grid = NormalizedGrid(5, 4)
    traj = reflective_walk(grid)
    even = {pt for pt in grid.points() if parity(pt) is Parity.EVEN}
    assert visited_point_set(traj) == even
    assert len(even) == 15


@pytest.mark.parametrize("p, q, expected", [(1, 1, {(0, 0), (1, 1)})])
def test_visited_point_set_small(p, q, expected):
    assert visited_point_set(billiard_trajectory(NormalizedGrid(p, q))) == expected


def test_visited_point_set_three_by_two():
    assert len(visited_point_set(billiard_trajectory(NormalizedGrid(3, 2)))) == 6


def test_segment_is_canonical():
    seg = DiagonalSegment.between((2, 1), (1, 2))
    assert seg == DiagonalSegment(GridPoint(1, 2), GridPoint(2, 1))
    assert seg.slope == -1
    assert DiagonalSegment.between((0, 0), (1, 1)).slope == 1
    with pytest.raises(ValueError):
        DiagonalSegment.between((0, 0), (2, 2))


@pytest.mark.parametrize("grid", GRIDS, ids=str)
def test_trajectory_invariants(grid):
    billiard_trajectory(grid).check()
    reflective_walk(grid).check()


@given(coprime_grid())
def test_models_agree(grid):
    a, b = billiard_trajectory(grid), reflective_walk(grid)
    assert a.visited == b.visited
    assert a.segments == b.segments


@given(coprime_grid(limit=40))
def test_asteroid_bijection(grid):
    p, q = grid.p, grid.q
    image = {asteroid_point(n, grid) for n in range(2 * p * q)}
    assert len(image) == 2 * p * q
    assert all((x + y) % 2 == 0 for x, y in image)


@given(coprime_grid())
def test_half_coverage(grid):
    traj = billiard_trajectory(grid)
    visited = visited_point_set(traj)
    p, q = grid.p, grid.q
    assert len(visited) == (p + 1) * (q + 1) // 2
    assert all(parity(pt) is Parity.EVEN for pt in visited)
    kinds = [classify(pt, grid) for pt in visited]
    assert sum(k is PointKind.INTERIOR for k in kinds) == (p - 1) * (q - 1) // 2
    assert sum(k is not PointKind.INTERIOR for k in kinds) == p + q


@given(coprime_grid())
def test_corner_reached_exactly_at_pq(grid):
    pq = grid.p * grid.q
    folded = [fold(asteroid_point(k, grid), grid) for k in range(pq + 1)]
    assert classify(folded[-1], grid) is PointKind.CORNER
    assert all(classify(pt, grid) is not PointKind.CORNER for pt in folded[1:-1])


@pytest.mark.parametrize(
    "p, q, corner", [(2, 1, (2, 0)), (3, 2, (0, 2)), (5, 3, (5, 3)), (4, 3, (4, 0))]
)
def test_end_corner(p, q, corner):
    assert billiard_trajectory(NormalizedGrid(p, q)).end_corner == corner
