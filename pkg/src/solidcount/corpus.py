"""A fixed corpus of test polygons spanning the cases the engine must cover.

Convex and non-convex, lattice and rational vertices, origin strictly
inside, strictly outside, on an edge interior, and at a vertex (including a
reflex vertex).  Every entry is validated at import time by the
RationalPolygon constructor.
"""

from __future__ import annotations

from fractions import Fraction as F

from .polygon import RationalPolygon

__all__ = ["polygon_corpus"]

_RAW: list[tuple[str, list[tuple]]] = [
    ("unit-square-origin-vertex", [(0, 0), (1, 0), (1, 1), (0, 1)]),
    ("shifted-square", [(1, 1), (2, 1), (2, 2), (1, 2)]),
    ("axis-triangle-3-2", [(0, 0), (3, 0), (0, 2)]),
    ("axis-triangle-4-3", [(0, 0), (4, 0), (0, 3)]),
    ("far-triangle", [(1, 1), (5, 3), (3, 5)]),
    ("centered-square", [(-1, -1), (1, -1), (1, 1), (-1, 1)]),
    ("origin-on-edge-rect", [(-1, 0), (3, 0), (3, 2), (-1, 2)]),
    ("hexagon-outside", [(1, 0), (2, 0), (3, 1), (2, 2), (1, 2), (0, 1)]),
    ("skew-triangle-inside", [(-2, -1), (3, -1), (1, 4)]),
    ("pentagon-outside", [(2, 0), (4, 1), (3, 3), (1, 3), (0, 1)]),
    ("ell-origin-vertex", [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]),
    ("ell-origin-reflex", [(-1, -1), (1, -1), (1, 0), (0, 0), (0, 1), (-1, 1)]),
    ("dart-notch-at-origin", [(-2, 0), (0, 1), (2, 0), (0, 3)]),
    ("staircase", [(0, 0), (3, 0), (3, 3), (2, 3), (2, 2), (1, 2), (1, 1), (0, 1)]),
    ("eight-point-star", [(-2, -2), (0, -1), (2, -2), (1, 0), (2, 2), (0, 1), (-2, 2), (-1, 0)]),
    ("half-square", [(0, 0), (F(1, 2), 0), (F(1, 2), F(1, 2)), (0, F(1, 2))]),
    ("rational-triangle", [(F(1, 2), F(1, 2)), (F(5, 2), F(1, 2)), (F(1, 2), F(3, 2))]),
    ("rational-diamond-inside", [(F(1, 2), 0), (0, F(1, 2)), (F(-1, 2), 0), (0, F(-1, 2))]),
    ("rational-pentagon", [(F(1, 3), F(1, 3)), (F(7, 3), F(1, 3)), (F(8, 3), F(4, 3)),
                           (F(4, 3), F(7, 3)), (F(1, 3), F(5, 3))]),
    ("rational-ell", [(0, 0), (F(3, 2), 0), (F(3, 2), F(1, 2)), (F(1, 2), F(1, 2)),
                      (F(1, 2), F(3, 2)), (0, F(3, 2))]),
    ("origin-on-edge-triangle", [(-1, 0), (2, 0), (0, 3)]),
    ("rational-origin-on-edge", [(F(-1, 2), 0), (F(3, 2), 0), (F(1, 2), F(5, 2))]),
    ("big-convex-inside", [(-3, -1), (2, -2), (4, 1), (1, 3), (-2, 2)]),
    ("thin-far-sliver", [(1, 0), (21, 13), (13, 21)]),
    ("sevenths-quad", [(F(1, 7), F(2, 7)), (F(15, 7), F(1, 7)), (F(16, 7), F(12, 7)),
                       (F(2, 7), F(13, 7))]),
]


def polygon_corpus() -> list[tuple[str, RationalPolygon]]:
    """Name/polygon pairs; fresh objects each call."""
    return [(name, RationalPolygon(verts)) for name, verts in _RAW]
