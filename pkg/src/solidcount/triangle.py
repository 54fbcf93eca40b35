"""Closed forms for the axis-aligned right triangle with legs h, k.

The triangle has vertices (0,0), (h,0), (0,k) with h, k coprime positive
integers.  Edge numbering throughout: edge 1 is the hypotenuse, edge 2 the
vertical leg on the y axis, edge 3 the horizontal leg on the x axis; vertex
1 is the origin, vertex 2 is (h,0), vertex 3 is (0,k).

For any nonzero rational dilation t the weighted lattice sum (1 per interior
point, 1/2 per edge-interior point, vertex angle in turns per lattice vertex)
is the quasi-polynomial

    a2 * t^2 + a1(t) * t + a0(t)

with a2 = hk/2, a1(t) = -sawtooth(hkt), and a0(t) a combination of the second
periodic Bernoulli polynomial, two shifted Dedekind-Rademacher sums, and the
vertex-angle atoms that switch on exactly when (h,0) or (0,k) dilates onto a
lattice point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .angles import AngleValue, turns_of_direction
from .bernoulli import (
    b1_periodic,
    b1_star,
    b2_periodic,
    dedekind_rademacher,
    dedekind_rademacher_star,
)
from .rational import floor_frac, mod_inverse

__all__ = [
    "SimplePointedTriangle",
    "QuasiCoefficients",
    "CTerms",
    "FaceCounts",
    "quasi_coefficients",
    "c_terms",
    "solid_angle_sum_triangle",
    "popoviciu",
    "edge_counts",
    "ehrhart_triangle",
    "ehrhart_triangle_expanded",
    "ehrhart_at_breakpoint",
    "face_counts",
]


@dataclass(frozen=True)
class SimplePointedTriangle:
    """Right triangle with vertices (0,0), (h,0), (0,k), gcd(h,k) = 1."""

    h: int
    k: int

    def __post_init__(self):
        if self.h < 1 or self.k < 1:
            raise ValueError(f"legs must be positive, got ({self.h}, {self.k})")
        if gcd(self.h, self.k) != 1:
            raise ValueError(f"legs must be coprime, got ({self.h}, {self.k})")

    @property
    def x_vertex_angle(self) -> AngleValue:
        """Interior angle at (h,0): atan2(k,h)/2pi."""
        return turns_of_direction((self.h, self.k))

    @property
    def y_vertex_angle(self) -> AngleValue:
        """Interior angle at (0,k): atan2(h,k)/2pi."""
        return turns_of_direction((self.k, self.h))


@dataclass(frozen=True)
class QuasiCoefficients:
    a2: Fraction
    a1: Fraction
    a0: AngleValue


@dataclass(frozen=True)
class CTerms:
    c1: Fraction
    c2: Fraction
    c3: AngleValue
    c4: Fraction
    c5: Fraction
    c6: AngleValue

    def total(self) -> AngleValue:
        return self.c3 + self.c6 + (self.c1 + self.c2 + self.c4 + self.c5)


@dataclass(frozen=True)
class FaceCounts:
    """Lattice census of a dilated triangle, split by face."""

    n_interior: int
    n_edge_interior: tuple[int, int, int]
    vertex_is_lattice: tuple[bool, bool, bool]


def _check_t(t: Fraction) -> Fraction:
    t = Fraction(t)
    if t == 0:
        raise ValueError("dilation t must be nonzero")
    return t


def quasi_coefficients(tri: SimplePointedTriangle, t: Fraction) -> QuasiCoefficients:
    """Quasi-polynomial coefficients of the solid-angle sum at dilation t."""
    t = _check_t(t)
    h, k = tri.h, tri.k
    a2 = Fraction(h * k, 2)
    a1 = -b1_periodic(h * k * t)
    rational = (
        Fraction(1, 2 * h * k) * (b2_periodic(h * k * t) + Fraction(h * h + k * k, 6))
        - dedekind_rademacher(h, k, h * t, 0)
        - dedekind_rademacher(k, h, k * t, 0)
    )
    a0 = AngleValue(rational)
    if (h * t).denominator == 1:
        a0 = a0 - tri.y_vertex_angle  # atan2(h,k)/2pi
    if (k * t).denominator == 1:
        a0 = a0 - tri.x_vertex_angle  # atan2(k,h)/2pi
    return QuasiCoefficients(a2, a1, a0)


def c_terms(tri: SimplePointedTriangle, t: Fraction) -> CTerms:
    """The six-way breakdown of the constant quasi-coefficient a0(t)."""
    t = _check_t(t)
    h, k = tri.h, tri.k
    n2 = h * h + k * k
    beta = b2_periodic(h * k * t)
    c1 = Fraction(h, 12 * k)
    c4 = Fraction(k, 12 * h)
    c2 = Fraction(h, 2 * k * n2) * beta
    c5 = Fraction(k, 2 * h * n2) * beta
    c3 = AngleValue(-dedekind_rademacher(h, k, h * t, 0))
    if (h * t).denominator == 1:
        c3 = c3 - tri.y_vertex_angle
    c6 = AngleValue(-dedekind_rademacher(k, h, k * t, 0))
    if (k * t).denominator == 1:
        c6 = c6 - tri.x_vertex_angle
    return CTerms(c1, c2, c3, c4, c5, c6)


def solid_angle_sum_triangle(tri: SimplePointedTriangle, t: Fraction) -> AngleValue:
    """Exact solid-angle sum of the dilated triangle, any nonzero rational t."""
    t = _check_t(t)
    q = quasi_coefficients(tri, t)
    return q.a0 + (q.a2 * t * t + q.a1 * t)


def popoviciu(a: int, b: int, n: int) -> int:
    """Number of representations n = a*x + b*y with integer x, y >= 0.

    Requires gcd(a, b) = 1; closed form
    n/(ab) - {b^{-1} n / a} - {a^{-1} n / b} + 1 with the inverses taken
    modulo the other leg.
    """
    if a < 1 or b < 1:
        raise ValueError("legs must be positive")
    if gcd(a, b) != 1:
        raise ValueError(f"legs must be coprime, got ({a}, {b})")
    if n < 0:
        raise ValueError("n must be nonnegative")
    a_inv = mod_inverse(a, b)
    b_inv = mod_inverse(b, a)
    _, frac_a = floor_frac(Fraction(b_inv * n, a))
    _, frac_b = floor_frac(Fraction(a_inv * n, b))
    value = Fraction(n, a * b) - frac_a - frac_b + 1
    assert value.denominator == 1 and value >= 0
    return int(value)


def edge_counts(tri: SimplePointedTriangle, t: Fraction) -> tuple[int, int, int]:
    """Closed lattice-point counts of the three edges of the dilated triangle.

    Stated for t > 0; for t < 0 the dilate is the point reflection of the
    |t| dilate, a lattice bijection, so the counts of |t| are returned.
    """
    t = abs(_check_t(t))
    h, k = tri.h, tri.k
    hkt = h * k * t
    if hkt.denominator == 1:
        hyp = popoviciu(h, k, int(hkt))
    else:
        hyp = 0
    vert = (k * t).numerator // (k * t).denominator + 1
    horiz = (h * t).numerator // (h * t).denominator + 1
    return (hyp, vert, horiz)


def face_counts(tri: SimplePointedTriangle, t: Fraction) -> FaceCounts:
    """Per-face lattice census of the dilated triangle (reflection-invariant)."""
    t = abs(_check_t(t))
    h, k = tri.h, tri.k
    x_lattice = (h * t).denominator == 1
    y_lattice = (k * t).denominator == 1
    hyp, vert, horiz = edge_counts(tri, t)
    edge_interior = (
        hyp - int(x_lattice) - int(y_lattice),
        vert - 1 - int(y_lattice),
        horiz - 1 - int(x_lattice),
    )
    total = ehrhart_triangle(tri, t)
    n_vertices = 1 + int(x_lattice) + int(y_lattice)
    n_interior = total - sum(edge_interior) - n_vertices
    assert n_interior >= 0
    return FaceCounts(n_interior, edge_interior, (True, x_lattice, y_lattice))


def ehrhart_triangle(tri: SimplePointedTriangle, t: Fraction) -> int:
    """Number of lattice points in the closed dilated triangle, t > 0.

    Assembled from the solid-angle sum plus half the edge counts minus the
    lattice-vertex angles; the arctan atoms from the solid-angle side pair
    with the vertex-angle atoms through the complementary identity, so the
    result must come out a plain nonnegative integer.
    """
    t = _check_t(t)
    if t < 0:
        raise ValueError("lattice-point count requires t > 0")
    h, k = tri.h, tri.k
    value = solid_angle_sum_triangle(tri, t) + Fraction(sum(edge_counts(tri, t)), 2)
    value = value - Fraction(1, 4)
    if (h * t).denominator == 1:
        value = value - tri.x_vertex_angle  # atan2(k,h)/2pi
    if (k * t).denominator == 1:
        value = value - tri.y_vertex_angle  # atan2(h,k)/2pi
    if value.atoms:
        raise AssertionError(f"vertex-angle atoms failed to cancel: {value!r}")
    count = value.rational_part
    if count.denominator != 1 or count < 0:
        raise AssertionError(f"count is not a nonnegative integer: {count}")
    return int(count)


def ehrhart_triangle_expanded(tri: SimplePointedTriangle, t: Fraction) -> Fraction:
    """Literal evaluation of the expanded floor/Dedekind-star count formula.

    Diagnostic only: on every instance checked this differs from
    :func:`ehrhart_triangle` (which matches direct enumeration) by the
    constant -1/2, consistent with a misprinted additive constant in the
    expanded form.  It is retained verbatim for cross-checking.
    """
    t = _check_t(t)
    h, k = tri.h, tri.k
    floor_hkt, _ = floor_frac(h * k * t)
    floor_ht, frac_ht = floor_frac(h * t)
    floor_kt, frac_kt = floor_frac(k * t)
    return (
        Fraction(floor_hkt * (floor_hkt + 1), 2 * h * k)
        + Fraction(floor_ht + floor_kt, 2)
        + Fraction(3, 4)
        + Fraction(1, 12) * (Fraction(h, k) + Fraction(1, h * k) + Fraction(k, h))
        - dedekind_rademacher_star(h, k, h * t, 0)
        - dedekind_rademacher_star(k, h, k * t, 0)
        - Fraction(1, 2) * (frac_ht + frac_kt)
    )


def ehrhart_at_breakpoint(tri: SimplePointedTriangle, n: int) -> Fraction:
    """Reduced count formula at the breakpoint dilations t = n/(hk), n >= 1."""
    if n < 1:
        raise ValueError("breakpoint index must be positive")
    h, k = tri.h, tri.k
    return (
        Fraction(n * n, 2 * h * k)
        + Fraction(n, 2) * (Fraction(1, h) + Fraction(1, k) + Fraction(1, h * k))
        + Fraction(1, 4)
        + Fraction(1, 12) * (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k))
        - dedekind_rademacher_star(h, k, Fraction(n, k), 0)
        - dedekind_rademacher_star(k, h, Fraction(n, h), 0)
        - b1_star(Fraction(n, h))
        - b1_star(Fraction(n, k))
    )
