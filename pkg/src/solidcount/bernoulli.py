"""Periodic Bernoulli polynomials and Dedekind-Rademacher sums, all exact.

Conventions
-----------
* ``b1_periodic`` is the sawtooth: 0 at integers, {x} - 1/2 elsewhere.
* ``b1_star`` is the everywhere-sawtooth variant: {x} - 1/2 for all x,
  so it takes the value -1/2 at integers.
* ``b2_periodic`` is {x}^2 - {x} + 1/6.
* ``dedekind_rademacher(h, k, shift, offset)`` is the correlation sum

      sum over r mod k of  B1(h*(r + offset)/k + shift) * B1((r + offset)/k)

  where B1 is the sawtooth.  ``shift`` is the additive shift inside the
  first factor and ``offset`` shifts the residue; the classical Dedekind
  sum is the case shift = offset = 0.  The starred variant uses the
  everywhere-sawtooth in both factors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "b1_periodic",
    "b1_star",
    "b2_periodic",
    "dedekind_rademacher",
    "dedekind_rademacher_star",
    "dedekind_sum",
    "dedekind_sum_fast",
]


def b1_periodic(x: Fraction | int) -> Fraction:
    """Sawtooth value at x: zero at integers, {x} - 1/2 otherwise."""
    x = Fraction(x)
    frac = x - (x.numerator // x.denominator)
    if frac == 0:
        return Fraction(0)
    return frac - Fraction(1, 2)


def b1_star(x: Fraction | int) -> Fraction:
    """{x} - 1/2 for every x (equals -1/2 at integers)."""
    x = Fraction(x)
    frac = x - (x.numerator // x.denominator)
    return frac - Fraction(1, 2)


def b2_periodic(x: Fraction | int) -> Fraction:
    """{x}^2 - {x} + 1/6."""
    x = Fraction(x)
    frac = x - (x.numerator // x.denominator)
    return frac * frac - frac + Fraction(1, 6)


def _check_coprime(h: int, k: int) -> None:
    if h < 1 or k < 1:
        raise ValueError(f"h and k must be positive, got h={h}, k={k}")
    if gcd(h, k) != 1:
        raise ValueError(f"h and k must be coprime, got h={h}, k={k}")


def dedekind_rademacher(
    h: int, k: int, shift: Fraction | int = 0, offset: Fraction | int = 0
) -> Fraction:
    """Shifted sawtooth correlation sum over residues mod k, by direct summation.

    The inner loop runs in plain integer arithmetic: with shift = yn/yd and
    offset = xn/xd, both sawtooth arguments have the fixed denominators
    q1 = k*xd*yd and q2 = k*xd, so each term is read off from a residue.
    """
    _check_coprime(h, k)
    shift = Fraction(shift)
    offset = Fraction(offset)
    yn, yd = shift.numerator, shift.denominator
    xn, xd = offset.numerator, offset.denominator
    q2 = k * xd
    q1 = q2 * yd
    total = 0
    for r in range(k):
        base = r * xd + xn
        n2 = base % q2
        if n2 == 0:
            continue
        n1 = (h * base * yd + yn * q2) % q1
        if n1 == 0:
            continue
        total += (2 * n1 - q1) * (2 * n2 - q2)
    return Fraction(total, 4 * q1 * q2)


def dedekind_rademacher_star(
    h: int, k: int, shift: Fraction | int = 0, offset: Fraction | int = 0
) -> Fraction:
    """Starred variant: both factors use the everywhere-sawtooth."""
    _check_coprime(h, k)
    shift = Fraction(shift)
    offset = Fraction(offset)
    yn, yd = shift.numerator, shift.denominator
    xn, xd = offset.numerator, offset.denominator
    q2 = k * xd
    q1 = q2 * yd
    total = 0
    for r in range(k):
        base = r * xd + xn
        n2 = base % q2
        n1 = (h * base * yd + yn * q2) % q1
        total += (2 * n1 - q1) * (2 * n2 - q2)
    return Fraction(total, 4 * q1 * q2)


def dedekind_sum(h: int, k: int) -> Fraction:
    """Classical Dedekind sum s(h, k), by direct summation."""
    return dedekind_rademacher(h, k, 0, 0)


def dedekind_sum_fast(h: int, k: int) -> Fraction:
    """Classical Dedekind sum via the reciprocity recursion.

    s(h, k) = (h^2 + k^2 + 1)/(12 h k) - 1/4 - s(k, h), with h reduced
    mod k at each step, so the recursion depth is O(log min(h, k)).
    """
    _check_coprime(h, k)
    return _fast(h, k)


def _fast(h: int, k: int) -> Fraction:
    h %= k
    if k == 1:
        return Fraction(0)
    return Fraction(h * h + k * k + 1, 12 * h * k) - Fraction(1, 4) - _fast(k, h)
