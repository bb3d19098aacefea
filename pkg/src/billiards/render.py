"""SVG and ASCII pictures of a trajectory."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

from billiards.counting import RectClass
from billiards.oracle import TiltedRect, find_rects
from billiards.trajectory import Trajectory, visited_point_set

GRID_COLOR = "#cccccc"
PATH_COLOR = "#000000"
ATOMIC_FILL = "#2e8b57"
MOLECULAR_COLOR = "#1e60c8"


class Format(Enum):
    SVG = "svg"
    ASCII = "ascii"


@dataclass(frozen=True)
class RenderOptions:
    """How to draw a trajectory.

    ``grid_subdivisions`` draws that many grid cells per reduced unit, so a
    raw ``a x b`` table can be shown with its original ``g``-fold grid.
    ``highlight_rects`` is ignored by the ASCII format.
    """

    cell_size: int = 40
    show_grid: bool = True
    highlight_atomic: bool = False
    highlight_rects: tuple[TiltedRect, ...] = ()
    format: Format = Format.SVG
    grid_subdivisions: int = 1

    def __post_init__(self) -> None:
        if self.format is Format.SVG and self.cell_size < 4:
            raise ValueError(f"cell_size must be at least 4 for SVG, got {self.cell_size}")
        if self.grid_subdivisions < 1:
            raise ValueError("grid_subdivisions must be positive")
        if self.format is Format.SVG and self.cell_size % self.grid_subdivisions:
            raise ValueError("cell_size must be a multiple of grid_subdivisions")


def render(traj: Trajectory, opts: RenderOptions = RenderOptions()) -> str:
    if opts.format is Format.ASCII:
        return render_ascii(traj, highlight_atomic=opts.highlight_atomic)
    return render_svg(traj, opts)


def _atomic_squares(traj: Trajectory) -> list[TiltedRect]:
    return find_rects(RectClass(1, 1), traj)


def render_ascii(traj: Trajectory, highlight_atomic: bool = False) -> str:
    """A ``(2p+1) x (2q+1)`` character raster, row ``y = q`` first.

    Grid points sit on even rows and columns: ``+`` visited, ``o`` atomic
    square centre (when highlighted), ``.`` otherwise. Segments occupy the odd
    cells between them as ``/`` or ``\\``.
    """
    p, q = traj.grid.p, traj.grid.q
    rows = [[" "] * (2 * p + 1) for _ in range(2 * q + 1)]

    def put(x2: int, y2: int, ch: str) -> None:
        rows[2 * q - y2][x2] = ch

    for x in range(p + 1):
        for y in range(q + 1):
            put(2 * x, 2 * y, ".")
    for pt in visited_point_set(traj):
        put(2 * pt.x, 2 * pt.y, "+")
    if highlight_atomic:
        for sq in _atomic_squares(traj):
            cx, cy = sq.center2
            put(cx, cy, "o")
    for seg in traj.segments:
        put(seg.start.x + seg.end.x, seg.start.y + seg.end.y, "/" if seg.slope == 1 else "\\")
    return "\n".join("".join(row).rstrip() for row in rows) + "\n"


def _polygon(points: Sequence[tuple[int, int]], style: str, css_class: str) -> str:
    pts = " ".join(f"{x},{y}" for x, y in points)
    return f'<polygon class="{css_class}" points="{pts}" {style}/>'


def render_svg(traj: Trajectory, opts: RenderOptions = RenderOptions()) -> str:
    p, q = traj.grid.p, traj.grid.q
    cell = opts.cell_size
    margin = cell // 2
    width = p * cell + 2 * margin
    height = q * cell + 2 * margin

    # origin at the bottom-left of the table
    def at(pt: tuple[int, int]) -> tuple[int, int]:
        return margin + pt[0] * cell, margin + (q - pt[1]) * cell

    def corners_at(rect: TiltedRect) -> list[tuple[int, int]]:
        return [at(c) for c in rect.corners()]

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]

    if opts.show_grid:
        step = cell // opts.grid_subdivisions
        x0, y_top = at((0, q))
        x1, y_bottom = at((p, 0))
        out.append(f'<g class="grid" stroke="{GRID_COLOR}" stroke-width="1">')
        for x in range(x0, x1 + 1, step):
            out.append(f'<line x1="{x}" y1="{y_top}" x2="{x}" y2="{y_bottom}"/>')
        for y in range(y_top, y_bottom + 1, step):
            out.append(f'<line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}"/>')
        out.append("</g>")

    if opts.highlight_atomic:
        style = f'fill="{ATOMIC_FILL}" fill-opacity="0.5" stroke="none"'
        for sq in sorted(_atomic_squares(traj)):
            out.append(_polygon(corners_at(sq), style, "atomic"))

    if opts.highlight_rects:
        style = (
            f'fill="{MOLECULAR_COLOR}" fill-opacity="0.25" '
            f'stroke="{MOLECULAR_COLOR}" stroke-width="3"'
        )
        for rect in sorted(opts.highlight_rects):
            out.append(_polygon(corners_at(rect), style, "molecular"))

    table = [at((0, 0)), at((p, 0)), at((p, q)), at((0, q))]
    out.append(_polygon(table, f'fill="none" stroke="{PATH_COLOR}" stroke-width="2"', "table"))

    out.append(f'<g class="trajectory" stroke="{PATH_COLOR}" stroke-width="2">')
    for seg in sorted(traj.segments):
        (x1, y1), (x2, y2) = at(seg.start), at(seg.end)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def scaled_options(opts: RenderOptions, g: int) -> RenderOptions:
    """Options that draw a reduced grid at the raw table's scale ``g``."""
    return replace(
        opts,
        cell_size=opts.cell_size * g,
        grid_subdivisions=opts.grid_subdivisions * g,
    )
