"""Exact angle arithmetic in turns (multiples of a full revolution).

An :class:`AngleValue` is a rational number of turns plus an exact rational
combination of *arctan atoms*.  An atom is a primitive integer direction
``(a, b)`` with ``a > b >= 1`` (strictly inside the first octant, below the
diagonal) and stands for the irrational angle atan2(b, a)/2pi, which lies in
(0, 1/8).  Directions on an axis or a diagonal fold into the rational part;
every other direction is expressed through exactly one atom by the eightfold
dihedral symmetry together with the complementary identity

    atan(y/x) + atan(x/y) = pi/2  (x, y > 0).

No other arctangent identities are applied, so distinct canonical atoms are
treated as independent symbols: two AngleValues are equal iff their rational
parts and atom maps agree.  Numerically equal but symbolically distinct
values (which would require a nontrivial arctangent relation) compare
unequal and must be compared through :meth:`AngleValue.to_float`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

from .rational import LatticeVector, cross, primitive

__all__ = [
    "AngleValue",
    "atom_value",
    "turns_of_direction",
    "angle_between",
]

_TWO_PI = 2.0 * math.pi


def atom_value(atom: tuple[int, int]) -> float:
    """Float value of a canonical atom (a, b): atan2(b, a)/2pi in (0, 1/8)."""
    a, b = atom
    if not (a > b >= 1 and math.gcd(a, b) == 1):
        raise ValueError(f"not a canonical direction atom: {atom}")
    return math.atan2(b, a) / _TWO_PI


class AngleValue:
    """Exact angle: rational turns plus a rational combination of atoms."""

    __slots__ = ("rational_part", "atoms")

    def __init__(
        self,
        rational_part: Fraction | int = 0,
        atoms: Mapping[tuple[int, int], Fraction] | None = None,
    ):
        self.rational_part = Fraction(rational_part)
        clean: dict[tuple[int, int], Fraction] = {}
        if atoms:
            for key, coeff in atoms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                a, b = key
                if not (a > b >= 1 and math.gcd(a, b) == 1):
                    raise ValueError(f"non-canonical atom {key}")
                clean[(a, b)] = coeff
        self.atoms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "AngleValue":
        return AngleValue(0)

    @staticmethod
    def from_atom(a: int, b: int, coeff: Fraction | int = 1) -> "AngleValue":
        return AngleValue(0, {(a, b): Fraction(coeff)})

    # -- algebra -----------------------------------------------------------

    def __add__(self, other) -> "AngleValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        atoms = dict(self.atoms)
        for key, coeff in other.atoms.items():
            atoms[key] = atoms.get(key, Fraction(0)) + coeff
        return AngleValue(self.rational_part + other.rational_part, atoms)

    __radd__ = __add__

    def __neg__(self) -> "AngleValue":
        return AngleValue(-self.rational_part, {k: -c for k, c in self.atoms.items()})

    def __sub__(self, other) -> "AngleValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "AngleValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, scalar) -> "AngleValue":
        if isinstance(scalar, AngleValue):
            return NotImplemented
        c = Fraction(scalar)
        return AngleValue(self.rational_part * c, {k: v * c for k, v in self.atoms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.rational_part == other.rational_part and self.atoms == other.atoms

    def __hash__(self):
        return hash((self.rational_part, frozenset(self.atoms.items())))

    # -- views -------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return not self.atoms

    def to_float(self) -> float:
        return float(self.rational_part) + math.fsum(
            float(c) * atom_value(k) for k, c in sorted(self.atoms.items())
        )

    def render(self) -> str:
        """Exact text form ``r +/- c*atan2(b,a)/2pi ...`` with rational r, c."""
        parts: list[str] = []
        if self.rational_part != 0 or not self.atoms:
            parts.append(str(self.rational_part))
        for (a, b), coeff in sorted(self.atoms.items()):
            mag = -coeff if coeff < 0 else coeff
            body = f"atan2({b},{a})/2pi" if mag == 1 else f"{mag}*atan2({b},{a})/2pi"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"AngleValue({self.render()})"


def _coerce(value) -> "AngleValue":
    if isinstance(value, AngleValue):
        return value
    if isinstance(value, (int, Fraction)):
        return AngleValue(value)
    return NotImplemented


def _primitive_direction(v) -> LatticeVector:
    """Primitive integer direction of a nonzero int or Fraction vector."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if x == 0 and y == 0:
        raise ValueError("zero vector has no direction")
    scale = x.denominator * y.denominator
    p, _ = primitive((int(x * scale), int(y * scale)))
    return p


def turns_of_direction(v) -> AngleValue:
    """Counterclockwise angle of a nonzero vector from the +x axis, in [0, 1).

    The result carries at most one canonical atom; axis and diagonal
    directions are purely rational.
    """
    x, y = _primitive_direction(v)
    if y == 0:
        return AngleValue(0 if x > 0 else Fraction(1, 2))
    if y < 0:
        lower = turns_of_direction((-x, -y))
        return AngleValue(Fraction(1, 2)) + lower
    # now y > 0
    if x == 0:
        return AngleValue(Fraction(1, 4))
    if x > 0:
        if x == y:
            return AngleValue(Fraction(1, 8))
        if x > y:
            return AngleValue.from_atom(x, y)
        return AngleValue(Fraction(1, 4)) - AngleValue.from_atom(y, x)
    a = -x
    if a == y:
        return AngleValue(Fraction(3, 8))
    if y > a:
        return AngleValue(Fraction(1, 4)) + AngleValue.from_atom(y, a)
    return AngleValue(Fraction(1, 2)) - AngleValue.from_atom(a, y)


def _turns_less(u: LatticeVector, v: LatticeVector) -> bool:
    """Exact comparison of the real angles of two primitive directions."""
    hu = 0 if (u.y > 0 or (u.y == 0 and u.x > 0)) else 1
    hv = 0 if (v.y > 0 or (v.y == 0 and v.x > 0)) else 1
    if hu != hv:
        return hu < hv
    return cross(u, v) > 0


def angle_between(u, v) -> AngleValue:
    """Counterclockwise sweep from direction u to direction v, in (0, 1) turns.

    angle_between(u, v) + angle_between(v, u) == 1 for non-parallel u, v;
    opposite directions give exactly 1/2.
    """
    pu = _primitive_direction(u)
    pv = _primitive_direction(v)
    if pu == pv:
        raise ValueError("parallel equal directions subtend no angle")
    delta = turns_of_direction(pv) - turns_of_direction(pu)
    if _turns_less(pv, pu):
        delta = delta + 1
    return delta
