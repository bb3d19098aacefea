"""Brute-force counts read straight off the trajectory's segments.

Nothing here uses parity, placement formulas or any closed form: a tilted
rectangle counts when each unit segment of its border is a segment the ball
actually travelled.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from billiards.counting import ClassCount, CountReport, RectClass, formula_report
from billiards.grid import GridPoint, NormalizedGrid, PointKind, classify
from billiards.trajectory import (
    DiagonalSegment,
    Trajectory,
    billiard_trajectory,
    visited_point_set,
)


class TiltedRect(NamedTuple):
    """An ``m x n`` rectangle tilted 45 degrees, keyed by its lowest corner.

    ``m`` runs along slope -1 and ``n`` along slope +1.
    """

    bottom: GridPoint
    m: int
    n: int

    def corners(self) -> tuple[GridPoint, GridPoint, GridPoint, GridPoint]:
        """Bottom, right, top, left."""
        x, y = self.bottom
        m, n = self.m, self.n
        return (
            GridPoint(x, y),
            GridPoint(x + n, y + n),
            GridPoint(x + n - m, y + n + m),
            GridPoint(x - m, y + m),
        )

    @property
    def center2(self) -> tuple[int, int]:
        """Twice the centre, to stay in integers."""
        x, y = self.bottom
        return (2 * x + self.n - self.m, 2 * y + self.n + self.m)

    def within(self, grid: NormalizedGrid) -> bool:
        return all(grid.contains(c) for c in self.corners())

    def border(self) -> Iterator[DiagonalSegment]:
        """The ``2(m+n)`` unit segments along the rectangle's edges."""
        bottom, right, _, left = self.corners()
        edges = ((bottom, self.n, 1), (left, self.n, 1), (bottom, self.m, -1), (right, self.m, -1))
        for (x, y), steps, dx in edges:
            for i in range(steps):
                yield DiagonalSegment.between((x + i * dx, y + i), (x + (i + 1) * dx, y + i + 1))


def rect_on_trajectory(rect: TiltedRect, traj: Trajectory) -> bool:
    if not rect.within(traj.grid):
        raise ValueError(f"{rect} does not fit in the {traj.grid.p}x{traj.grid.q} grid")
    segments = traj.segments
    return all(seg in segments for seg in rect.border())


class _SegmentIndex:
    """Trajectory segments keyed by their lower endpoint, one set per slope.

    Same membership test as :func:`rect_on_trajectory`, with points encoded
    as ``x * stride + y`` so a sweep over many placements stays fast. A step
    along slope +1 adds ``stride + 1`` to a key, along slope -1 ``1 - stride``.
    """

    def __init__(self, traj: Trajectory) -> None:
        self.stride = stride = traj.grid.q + 1
        self.rising: set[int] = set()
        self.falling: set[int] = set()
        for seg in traj.segments:
            if seg.slope == 1:
                self.rising.add(seg.start.x * stride + seg.start.y)
            else:
                self.falling.add(seg.end.x * stride + seg.end.y)

    def border_on_path(self, x: int, y: int, m: int, n: int) -> bool:
        stride = self.stride
        up, down = stride + 1, 1 - stride
        rising, falling = self.rising, self.falling
        bottom = x * stride + y
        left = bottom + m * down
        right = bottom + n * up
        return (
            all(bottom + i * up in rising for i in range(n))
            and all(bottom + i * down in falling for i in range(m))
            and all(left + i * up in rising for i in range(n))
            and all(right + i * down in falling for i in range(m))
        )


def find_rects(
    cls: RectClass, traj: Trajectory, index: _SegmentIndex | None = None
) -> list[TiltedRect]:
    """Every placement of class ``cls`` whose whole border lies on ``traj``.

    Candidates are all bottom corners that keep the rectangle on the table.
    """
    m, n = cls
    p, q = traj.grid.p, traj.grid.q
    if index is None:
        index = _SegmentIndex(traj)
    return [
        TiltedRect(GridPoint(x, y), m, n)
        for x in range(m, p - n + 1)
        for y in range(0, q - m - n + 1)
        if index.border_on_path(x, y, m, n)
    ]


def enumerate_rects(cls: RectClass, traj: Trajectory) -> int:
    return len(find_rects(cls, traj))


def unvisited_interior_points(traj: Trajectory) -> frozenset[GridPoint]:
    visited = visited_point_set(traj)
    return frozenset(
        pt
        for pt in traj.grid.points()
        if pt not in visited and classify(pt, traj.grid) is PointKind.INTERIOR
    )


def oracle_report(grid: NormalizedGrid) -> CountReport:
    """Formula counts for ``grid`` side by side with brute-force counts."""
    report = formula_report(grid)
    traj = billiard_trajectory(grid)
    index = _SegmentIndex(traj)

    per_class = {}
    molecular = 0
    atoms: list[TiltedRect] = []
    for cls, counted in report.per_class.items():
        rects = find_rects(cls, traj, index)
        if cls == (1, 1):
            atoms = rects
        per_class[cls] = ClassCount(counted.formula, len(rects))
        molecular += len(rects)
    report.per_class = per_class

    unvisited = unvisited_interior_points(traj)
    centers = {GridPoint(cx // 2, cy // 2) for cx, cy in (r.center2 for r in atoms)}
    report.atomic_oracle = len(atoms)
    report.unvisited_interior = len(unvisited)
    report.centers_match = centers == unvisited
    report.molecular_oracle = molecular
    return report
