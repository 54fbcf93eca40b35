"""Exact scalars and lattice primitives shared by the whole package.

Every quantity downstream is either an arbitrary-precision rational
(``fractions.Fraction``, always in lowest terms with positive denominator)
or exact integer lattice data.  Floating point enters only at explicit
conversion boundaries (angle rendering, the spectral verifier).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import NamedTuple

__all__ = [
    "Rational",
    "LatticeVector",
    "RationalPoint",
    "gcd",
    "mod_inverse",
    "floor_frac",
    "primitive",
    "parse_rational",
    "cross",
    "dot",
]

Rational = Fraction

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


class LatticeVector(NamedTuple):
    """An integer vector in the plane."""

    x: int
    y: int


class RationalPoint(NamedTuple):
    """A point of the plane with rational coordinates."""

    x: Fraction
    y: Fraction


def parse_rational(text: str) -> Fraction:
    """Parse the ``p/q`` (or plain ``p``) rational syntax used everywhere.

    Only an optional leading minus, digits, and a single slash are accepted;
    a zero denominator is rejected.
    """
    text = text.strip()
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in rational literal: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``, in ``[0, m)``; 0 when ``m == 1``.

    Raises ValueError when gcd(a, m) != 1.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {m}") from None


def floor_frac(q: Fraction | int) -> tuple[int, Fraction]:
    """Split ``q`` into (floor, fractional part) with 0 <= frac < 1.

    Uses the mathematical floor, so floor_frac(-1/3) == (-1, 2/3).
    """
    q = Fraction(q)
    n = q.numerator // q.denominator
    return n, q - n


def primitive(v: LatticeVector | tuple[int, int]) -> tuple[LatticeVector, int]:
    """Write a nonzero integer vector as ``m * p`` with ``p`` primitive, m > 0."""
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero vector has no primitive direction")
    m = gcd(x, y)
    return LatticeVector(x // m, y // m), m


def cross(u, v):
    """2-D cross product u.x*v.y - u.y*v.x (exact for int/Fraction input)."""
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    """Inner product (exact for int/Fraction input)."""
    return u[0] * v[0] + u[1] * v[1]
