"""Corner-to-corner billiard trajectories on integer rectangles.

Closed-form counts of the atomic squares and molecular rectangles the path
carves out, a brute-force oracle for those counts, and SVG/ASCII rendering.
"""

from billiards.grid import (
    GridPoint,
    NormalizedGrid,
    NotCoprimeError,
    Parity,
    PointKind,
    TableSpec,
    classify,
    interior_count,
    normalize,
    parity,
)
from billiards.trajectory import (
    AsteroidPoint,
    DiagonalSegment,
    Trajectory,
    asteroid_point,
    billiard_trajectory,
    fold,
    reflective_walk,
    visited_point_set,
)
from billiards.counting import (
    ClassCount,
    CountReport,
    PlacementCounts,
    RectClass,
    atomic_count,
    atomic_count_raw,
    class_count,
    formula_report,
    placements,
    power_sum,
    rect_classes,
    total_by_summation,
    total_molecular,
)
from billiards.oracle import (
    TiltedRect,
    enumerate_rects,
    find_rects,
    oracle_report,
    rect_on_trajectory,
    unvisited_interior_points,
)
from billiards.render import Format, RenderOptions, render

__version__ = "0.1.0"

__all__ = [
    "AsteroidPoint",
    "ClassCount",
    "CountReport",
    "DiagonalSegment",
    "Format",
    "GridPoint",
    "NormalizedGrid",
    "NotCoprimeError",
    "Parity",
    "PlacementCounts",
    "PointKind",
    "RectClass",
    "RenderOptions",
    "TableSpec",
    "TiltedRect",
    "Trajectory",
    "asteroid_point",
    "atomic_count",
    "atomic_count_raw",
    "billiard_trajectory",
    "class_count",
    "classify",
    "enumerate_rects",
    "find_rects",
    "fold",
    "formula_report",
    "interior_count",
    "normalize",
    "oracle_report",
    "parity",
    "placements",
    "power_sum",
    "rect_classes",
    "rect_on_trajectory",
    "reflective_walk",
    "render",
    "total_by_summation",
    "total_molecular",
    "unvisited_interior_points",
    "visited_point_set",
]
