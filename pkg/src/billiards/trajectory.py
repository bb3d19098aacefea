"""Billiard trajectories on a reduced grid.

Two independent constructions are provided. :func:`billiard_trajectory` runs
the straight slope-1 path on the doubled ``2p x 2q`` torus and folds it back
onto the table; :func:`reflective_walk` simulates the ball bouncing off the
edges. They must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from billiards.grid import GridPoint, NormalizedGrid, Parity, PointKind, classify, parity


class AsteroidPoint(NamedTuple):
    """A residue pair in ``Z_2p x Z_2q``."""

    x: int
    y: int


class DiagonalSegment(NamedTuple):
    """A unit slope-+-1 step, endpoints stored in lexicographic order."""

    start: GridPoint
    end: GridPoint

    @classmethod
    def between(cls, u: tuple[int, int], v: tuple[int, int]) -> DiagonalSegment:
        u, v = GridPoint(*u), GridPoint(*v)
        if abs(u.x - v.x) != 1 or abs(u.y - v.y) != 1:
            raise ValueError(f"{tuple(u)} and {tuple(v)} are not diagonal neighbours")
        return cls(u, v) if u <= v else cls(v, u)

    @property
    def slope(self) -> int:
        return 1 if self.end.y > self.start.y else -1


@dataclass(frozen=True)
class Trajectory:
    grid: NormalizedGrid
    visited: tuple[GridPoint, ...]
    segments: frozenset[DiagonalSegment]

    @classmethod
    def from_points(cls, grid: NormalizedGrid, points: list[GridPoint]) -> Trajectory:
        segments = frozenset(
            DiagonalSegment.between(u, v) for u, v in zip(points, points[1:])
        )
        return cls(grid, tuple(points), segments)

    @property
    def end_corner(self) -> GridPoint:
        return self.visited[-1]

    def check(self) -> None:
        """Raise ``AssertionError`` if any structural invariant is violated."""
        grid = self.grid
        pq = grid.p * grid.q
        assert len(self.visited) == pq + 1, f"expected {pq + 1} points, got {len(self.visited)}"
        assert self.visited[0] == (0, 0)
        kinds = [classify(pt, grid) for pt in self.visited]
        assert kinds[-1] is PointKind.CORNER
        assert PointKind.CORNER not in kinds[1:-1], "path touched a corner early"
        for u, v in zip(self.visited, self.visited[1:]):
            assert abs(u.x - v.x) == 1 and abs(u.y - v.y) == 1, (u, v)
        assert len(self.segments) == pq, "a segment was traversed twice"
        for seg in self.segments:
            assert parity(seg.start) is Parity.EVEN and parity(seg.end) is Parity.EVEN


def asteroid_point(n: int, grid: NormalizedGrid) -> AsteroidPoint:
    return AsteroidPoint(n % (2 * grid.p), n % (2 * grid.q))


def fold(point: tuple[int, int], grid: NormalizedGrid) -> GridPoint:
    """Map a point of the doubled torus onto the ``p x q`` table.

    Each coordinate past the table edge is reflected back: ``x -> 2p - x``
    and ``y -> 2q - y``.
    """
    x, y = point
    p, q = grid.p, grid.q
    if not (0 <= x < 2 * p and 0 <= y < 2 * q):
        raise ValueError(f"{tuple(point)} is not a residue pair mod ({2 * p}, {2 * q})")
    if x > p:
        x = 2 * p - x
    if y > q:
        y = 2 * q - y
    return GridPoint(x, y)


def billiard_trajectory(grid: NormalizedGrid) -> Trajectory:
    grid.require_coprime()
    pq = grid.p * grid.q
    points = [fold(asteroid_point(k, grid), grid) for k in range(pq + 1)]
    return Trajectory.from_points(grid, points)


def reflective_walk(grid: NormalizedGrid) -> Trajectory:
    grid.require_coprime()
    p, q = grid.p, grid.q
    x = y = 0
    dx = dy = 1
    points = [GridPoint(0, 0)]
    limit = 2 * p * q
    for _ in range(limit):
        x += dx
        y += dy
        points.append(GridPoint(x, y))
        on_vertical = x in (0, p)
        on_horizontal = y in (0, q)
        if on_vertical and on_horizontal:
            return Trajectory.from_points(grid, points)
        if on_vertical:
            dx = -dx
        if on_horizontal:
            dy = -dy
    raise RuntimeError(
        f"reflective walk on {p}x{q} did not reach a corner within {limit} steps"
    )


def visited_point_set(traj: Trajectory) -> frozenset[GridPoint]:
    return frozenset(traj.visited)
