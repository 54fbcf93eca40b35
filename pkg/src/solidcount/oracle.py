"""Brute-force ground truth: classify every lattice point of a dilated polygon.

This module never touches the closed forms.  Points are classified with
exact integer cross-product signs after clearing denominators; the weighted
sum adds 1 per interior point, 1/2 per edge-interior point, and the exact
vertex angle per lattice vertex.  The box scan is vectorized with integer
numpy arrays, with magnitudes guarded so int64 arithmetic stays exact; the
scalar :func:`classify_point` is the one-point reference implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm

import numpy as np

from .angles import AngleValue
from .polygon import RationalPolygon
from .rational import cross

__all__ = [
    "PointClass",
    "classify_point",
    "brute_force_A",
    "brute_force_L",
    "brute_force_popoviciu",
    "scan_dilated",
    "ScanResult",
]

_INT64_GUARD = 1_000_000_000  # coordinate differences stay < 2e9, products < 4e18


@dataclass(frozen=True)
class PointClass:
    """Classification of one lattice point relative to a polygon."""

    kind: str  # "outside" | "interior" | "edge" | "vertex"
    edge: int | None = None  # edge index for kind == "edge"
    angle: AngleValue | None = None  # vertex angle for kind == "vertex"


@dataclass(frozen=True)
class ScanResult:
    """Census of the lattice points of a dilated polygon."""

    n_interior: int
    n_edge_interior: tuple[int, ...]
    vertex_is_lattice: tuple[bool, ...]
    vertex_angles: tuple[AngleValue, ...]  # angles of the lattice vertices only

    @property
    def solid_angle_sum(self) -> AngleValue:
        value = AngleValue(self.n_interior + Fraction(sum(self.n_edge_interior), 2))
        for angle in self.vertex_angles:
            value = value + angle
        return value

    @property
    def lattice_count(self) -> int:
        return self.n_interior + sum(self.n_edge_interior) + len(self.vertex_angles)


def _on_segment(a, b, p) -> bool:
    if cross((b[0] - a[0], b[1] - a[1]), (p[0] - a[0], p[1] - a[1])) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def classify_point(poly: RationalPolygon, point) -> PointClass:
    """Exact classification of one point (vertex / edge interior / inside / out)."""
    p = (Fraction(point[0]), Fraction(point[1]))
    verts = poly.vertices
    n = len(verts)
    for i, v in enumerate(verts):
        if v.x == p[0] and v.y == p[1]:
            return PointClass("vertex", angle=poly.interior_angle(i))
    for i in range(n):
        if _on_segment(verts[i], verts[(i + 1) % n], p):
            return PointClass("edge", edge=i)
    crossings = 0
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if a.y == b.y:
            continue
        lo, hi = (a, b) if a.y < b.y else (b, a)
        if not (lo.y <= p[1] < hi.y):
            continue
        side = cross((b.x - a.x, b.y - a.y), (p[0] - a.x, p[1] - a.y))
        if (b.y > a.y and side > 0) or (b.y < a.y and side < 0):
            crossings += 1
    return PointClass("interior" if crossings % 2 else "outside")


def scan_dilated(poly: RationalPolygon, t, pad: int = 0) -> ScanResult:
    """Classify every lattice point in the bounding box of the dilated polygon."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("dilation t must be nonzero")
    verts = [(t * v.x, t * v.y) for v in poly.vertices]
    n = len(verts)
    den = 1
    for x, y in verts:
        den = lcm(den, lcm(x.denominator, y.denominator))
    ax = np.array([int(x * den) for x, _ in verts], dtype=np.int64)
    ay = np.array([int(y * den) for _, y in verts], dtype=np.int64)

    x_lo = ceil(min(x for x, _ in verts)) - pad
    x_hi = floor(max(x for x, _ in verts)) + pad
    y_lo = ceil(min(y for _, y in verts)) - pad
    y_hi = floor(max(y for _, y in verts)) + pad
    if x_lo > x_hi or y_lo > y_hi:
        return ScanResult(0, (0,) * n, (False,) * n, ())

    bound = max(abs(int(v)) for v in (*ax, *ay, den * x_lo, den * x_hi, den * y_lo, den * y_hi))
    if bound > _INT64_GUARD:
        raise OverflowError("scan coordinates too large for exact int64 arithmetic")

    X, Y = np.meshgrid(
        np.arange(x_lo, x_hi + 1, dtype=np.int64) * den,
        np.arange(y_lo, y_hi + 1, dtype=np.int64) * den,
        indexing="ij",
    )

    on_edge = np.zeros(X.shape, dtype=bool)
    edge_masks = []
    for i in range(n):
        j = (i + 1) % n
        ex, ey = ax[j] - ax[i], ay[j] - ay[i]
        collinear = ex * (Y - ay[i]) - ey * (X - ax[i]) == 0
        in_box = (
            (np.minimum(ax[i], ax[j]) <= X) & (X <= np.maximum(ax[i], ax[j]))
            & (np.minimum(ay[i], ay[j]) <= Y) & (Y <= np.maximum(ay[i], ay[j]))
        )
        mask = collinear & in_box
        edge_masks.append(mask)
        on_edge |= mask

    vertex_mask = np.zeros(X.shape, dtype=bool)
    lattice_flags = []
    vertex_angles = []
    for i, (x, y) in enumerate(verts):
        is_lattice = x.denominator == 1 and y.denominator == 1
        lattice_flags.append(is_lattice)
        if is_lattice:
            inside_box = x_lo <= x <= x_hi and y_lo <= y <= y_hi
            assert inside_box
            vertex_mask |= (X == int(x) * den) & (Y == int(y) * den)
            vertex_angles.append(poly.interior_angle(i))

    crossings = np.zeros(X.shape, dtype=np.int64)
    for i in range(n):
        j = (i + 1) % n
        if ay[i] == ay[j]:
            continue
        upward = ay[j] > ay[i]
        lo_y, hi_y = (ay[i], ay[j]) if upward else (ay[j], ay[i])
        band = (lo_y <= Y) & (Y < hi_y)
        side = (ax[j] - ax[i]) * (Y - ay[i]) - (ay[j] - ay[i]) * (X - ax[i])
        crossings += band & (side > 0 if upward else side < 0)

    interior = ~on_edge & (crossings % 2 == 1)
    edge_interior = tuple(int((m & ~vertex_mask).sum()) for m in edge_masks)
    n_interior = int(interior.sum())
    return ScanResult(n_interior, edge_interior, tuple(lattice_flags), tuple(vertex_angles))


def brute_force_A(poly: RationalPolygon, t) -> AngleValue:
    """Solid-angle weighted lattice sum by full box enumeration."""
    return scan_dilated(poly, t).solid_angle_sum


def brute_force_L(poly: RationalPolygon, t) -> int:
    """Unweighted lattice count by full box enumeration."""
    return scan_dilated(poly, t).lattice_count


def brute_force_popoviciu(a: int, b: int, n: int) -> int:
    """Count solutions of a*x + b*y = n with x, y >= 0 by enumeration."""
    if a < 1 or b < 1:
        raise ValueError("legs must be positive")
    return sum(1 for x in range(n // a + 1) if (n - a * x) % b == 0)
