"""Table normalization and lattice-point bookkeeping."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class NotCoprimeError(ValueError):
    """Raised when an operation needs a reduced (coprime) grid."""


class GridPoint(NamedTuple):
    x: int
    y: int


class PointKind(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    CORNER = "corner"


class Parity(Enum):
    EVEN = 0
    ODD = 1


def _check_side(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")


@dataclass(frozen=True)
class TableSpec:
    """A raw ``a x b`` table measured in grid units."""

    a: int
    b: int

    def __post_init__(self) -> None:
        _check_side("a", self.a)
        _check_side("b", self.b)


@dataclass(frozen=True)
class NormalizedGrid:
    """A ``p x q`` table with segment scale ``g``.

    Construction only checks positivity. Use :func:`normalize` to obtain a
    grid with ``gcd(p, q) == 1``; operations that need coprimality call
    :meth:`require_coprime`.
    """

    p: int
    q: int
    g: int = 1

    def __post_init__(self) -> None:
        _check_side("p", self.p)
        _check_side("q", self.q)
        _check_side("g", self.g)

    @property
    def is_coprime(self) -> bool:
        return math.gcd(self.p, self.q) == 1

    def require_coprime(self) -> None:
        if not self.is_coprime:
            raise NotCoprimeError(
                f"grid {self.p}x{self.q} is not reduced (gcd={math.gcd(self.p, self.q)})"
            )

    @property
    def raw(self) -> TableSpec:
        return TableSpec(self.p * self.g, self.q * self.g)

    def contains(self, point: tuple[int, int]) -> bool:
        x, y = point
        return 0 <= x <= self.p and 0 <= y <= self.q

    def points(self) -> list[GridPoint]:
        """All ``(p+1)(q+1)`` lattice points, x-major."""
        return [GridPoint(x, y) for x in range(self.p + 1) for y in range(self.q + 1)]


def normalize(spec: TableSpec | tuple[int, int]) -> NormalizedGrid:
    """Reduce ``a x b`` to the coprime grid ``(a/g) x (b/g)`` with ``g = gcd(a, b)``."""
    if not isinstance(spec, TableSpec):
        spec = TableSpec(*spec)
    g = math.gcd(spec.a, spec.b)
    return NormalizedGrid(spec.a // g, spec.b // g, g)


def classify(point: tuple[int, int], grid: NormalizedGrid) -> PointKind:
    if not grid.contains(point):
        raise ValueError(f"point {tuple(point)} lies outside the {grid.p}x{grid.q} grid")
    x, y = point
    x_edge = x in (0, grid.p)
    y_edge = y in (0, grid.q)
    if x_edge and y_edge:
        return PointKind.CORNER
    if x_edge or y_edge:
        return PointKind.BOUNDARY
    return PointKind.INTERIOR


def parity(point: tuple[int, int]) -> Parity:
    x, y = point
    return Parity((x + y) % 2)


def interior_count(grid: NormalizedGrid) -> int:
    return (grid.p - 1) * (grid.q - 1)
