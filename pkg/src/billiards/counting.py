"""Closed-form counts of atomic squares and molecular rectangles.

A molecular rectangle of class ``m x n`` has its side of length ``m`` along
slope -1 and its side of length ``n`` along slope +1. When both placement
counts ``P = p-m-n+1`` and ``Q = q-m-n+1`` are odd, the number of compatible
placements is ``(P*Q + s) / 2`` with ``s = +1`` for even ``m`` and ``s = -1``
for odd ``m``: the lower-left placement sits at ``(m, 0)`` and is on the path
exactly when that point has even parity. The corrections for ``m x n`` and
``n x m`` cancel, so the grand total is unaffected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from billiards.grid import NormalizedGrid, normalize


class RectClass(NamedTuple):
    m: int
    n: int


class PlacementCounts(NamedTuple):
    horizontal: int
    vertical: int


class ClassCount(NamedTuple):
    formula: int
    oracle: int | None = None


@dataclass
class CountReport:
    """Formula counts for one grid, optionally paired with oracle counts.

    Oracle fields are ``None`` when no brute-force run was made; ``all_match``
    is then ``None`` as well.
    """

    grid: NormalizedGrid
    atomic_formula: int
    atomic_raw: int
    molecular_total_formula: int
    molecular_total_summed: int
    per_class: dict[RectClass, ClassCount] = field(default_factory=dict)
    atomic_oracle: int | None = None
    unvisited_interior: int | None = None
    centers_match: bool | None = None
    molecular_oracle: int | None = None

    @property
    def has_oracle(self) -> bool:
        return self.atomic_oracle is not None

    @property
    def all_match(self) -> bool | None:
        if not self.has_oracle:
            return None
        return (
            self.atomic_formula == self.atomic_oracle == self.unvisited_interior
            and bool(self.centers_match)
            and all(c.formula == c.oracle for c in self.per_class.values())
            and self.molecular_total_formula
            == self.molecular_total_summed
            == self.molecular_oracle
        )

    def to_dict(self) -> dict:
        g = self.grid
        return {
            "schema": 1,
            "grid": {"p": g.p, "q": g.q, "g": g.g},
            "atomic": {
                "formula": self.atomic_formula,
                "raw": self.atomic_raw,
                "oracle": self.atomic_oracle,
                "unvisited_interior": self.unvisited_interior,
            },
            "classes": [
                {"m": cls.m, "n": cls.n, "formula": c.formula, "oracle": c.oracle}
                for cls, c in sorted(self.per_class.items())
            ],
            "molecular": {
                "formula": self.molecular_total_formula,
                "summed": self.molecular_total_summed,
                "oracle": self.molecular_oracle,
            },
            "all_match": self.all_match,
        }


def atomic_count(grid: NormalizedGrid) -> int:
    grid.require_coprime()
    # coprime sides: at least one of p-1, q-1 is even
    return (grid.p - 1) * (grid.q - 1) // 2


def atomic_count_raw(a: int, b: int) -> int:
    """Atomic squares of a raw ``a x b`` table, ``(a-g)(b-g) / (2 g^2)``.

    Evaluated through the reduced grid so no intermediate carries ``g**2``.
    """
    return atomic_count(normalize((a, b)))


def placements(cls: RectClass, grid: NormalizedGrid) -> PlacementCounts:
    m, n = cls
    return PlacementCounts(grid.p - m - n + 1, grid.q - m - n + 1)


def class_count(cls: RectClass, grid: NormalizedGrid) -> int:
    grid.require_coprime()
    big_p, big_q = placements(cls, grid)
    if big_p <= 0 or big_q <= 0:
        return 0
    if big_p % 2 == 1 and big_q % 2 == 1:
        sign = 1 if cls.m % 2 == 0 else -1
        return (big_p * big_q + sign) // 2
    return big_p * big_q // 2


def rect_classes(grid: NormalizedGrid) -> list[RectClass]:
    """Every class ``(m, n)`` with ``m + n <= min(p, q)``, sorted."""
    side = min(grid.p, grid.q)
    return [RectClass(m, n) for m in range(1, side) for n in range(1, side - m + 1)]


def total_molecular(grid: NormalizedGrid) -> int:
    grid.require_coprime()
    long, short = max(grid.p, grid.q), min(grid.p, grid.q)
    numerator = short * (short * short - 1) * (2 * long - short)
    total, rem = divmod(numerator, 24)
    if rem:
        raise ArithmeticError(f"{numerator} is not divisible by 24 for {grid.p}x{grid.q}")
    return total


def total_by_summation(grid: NormalizedGrid) -> int:
    grid.require_coprime()
    return sum(class_count(cls, grid) for cls in rect_classes(grid))


_POWER_SUMS = {
    0: lambda q: q,
    1: lambda q: q * (q + 1) // 2,
    2: lambda q: q * (q + 1) * (2 * q + 1) // 6,
    3: lambda q: (q * (q + 1) // 2) ** 2,
}


def power_sum(k: int, q: int) -> int:
    """``sum(r**k for r in 1..q)`` in closed form, for ``k`` in 0..3."""
    if k not in _POWER_SUMS:
        raise ValueError(f"power_sum supports k in 0..3, got {k}")
    if q < 0:
        raise ValueError(f"q must be non-negative, got {q}")
    return _POWER_SUMS[k](q)


def formula_report(grid: NormalizedGrid) -> CountReport:
    grid.require_coprime()
    per_class = {cls: ClassCount(class_count(cls, grid)) for cls in rect_classes(grid)}
    raw = grid.raw
    return CountReport(
        grid=grid,
        atomic_formula=atomic_count(grid),
        atomic_raw=atomic_count_raw(raw.a, raw.b),
        molecular_total_formula=total_molecular(grid),
        molecular_total_summed=total_by_summation(grid),
        per_class=per_class,
    )
