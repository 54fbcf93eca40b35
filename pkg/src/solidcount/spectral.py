"""Floating-point verification of the frequency-space limit formulas.

The closed forms in :mod:`solidcount.triangle` arise as epsilon -> 0 limits
of Gaussian-damped lattice sums over frequency space, with one sum per chain
in the face poset of the axis triangle (triangle -> edge, or triangle ->
edge -> vertex).  This module evaluates those sums truncated to a disc of
radius R = ceil(c / sqrt(eps)), with c large enough that the discarded
Gaussian tail is negligible, and compares them against the exact values:

* ``a1_truncated``   -> the linear quasi-coefficient  -sawtooth(h k t)
* ``b_sums_truncated`` -> the per-edge vertex-chain sums; the two leg sums
  vanish identically at every truncation by a parity symmetry, the
  hypotenuse sum converges to the constant quasi-coefficient a0(t)
* ``c3_truncated``   -> the Dedekind-Rademacher piece of a0(t)
* ``twisted_transform_check`` -> the closed Fourier transform of a
  unimodularly transported product of two compactly supported sawtooths,
  against direct 2-D quadrature

Terms are accumulated in order of increasing frequency norm with exactly
rounded summation (math.fsum), so the parity cancellations hold to roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import fsum

import numpy as np
from scipy.special import roots_legendre

from .bernoulli import b1_periodic
from .triangle import SimplePointedTriangle, c_terms, quasi_coefficients

__all__ = [
    "SpectralConfig",
    "ChainWeightSpec",
    "chain_weight",
    "a1_truncated",
    "b_sums_truncated",
    "c3_truncated",
    "twisted_transform_check",
    "convergence_report",
    "ReportRow",
    "DEFAULT_EPSILONS",
    "DEFAULT_TWIST_CASES",
]

DEFAULT_EPSILONS = (0.2, 0.1, 0.05, 0.02)

TARGETS = ("a1", "b1", "b2", "b3", "c3-sum", "twisted-transform")


@dataclass(frozen=True)
class SpectralConfig:
    """Damping schedule and truncation rule for the verifier."""

    epsilons: tuple[float, ...] = DEFAULT_EPSILONS
    radius_factor: float = 6.0
    target: str = "a1"

    def __post_init__(self):
        if not self.epsilons or any(e <= 0 for e in self.epsilons):
            raise ValueError("epsilons must be positive")
        if any(b >= a for a, b in zip(self.epsilons, self.epsilons[1:])):
            raise ValueError("epsilons must be strictly decreasing")
        if self.radius_factor < 4.0:
            raise ValueError("radius factor below 4 lets the Gaussian tail matter")
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")

    def radius(self, eps: float) -> int:
        return math.ceil(self.radius_factor / math.sqrt(eps))


@dataclass(frozen=True)
class ChainWeightSpec:
    """A chain in the face poset of the axis triangle.

    ``edge`` is 1 (hypotenuse), 2 (vertical leg) or 3 (horizontal leg);
    ``vertex`` is None for the two-node chain (triangle -> edge) or the
    vertex index 1, 2, 3 for the three-node chain (triangle -> edge ->
    vertex).  The weight of a chain at a frequency xi is the product of a
    rational function of xi (one factor per poset arc, times the volume of
    the last face) and the exponential e^{-2 pi i <xi, x>} evaluated at any
    point x of the last face's affine span; the chain is admissible at xi
    when xi is orthogonal to the last face but not the one before it.
    """

    edge: int
    vertex: int | None = None

    def __post_init__(self):
        if self.edge not in (1, 2, 3):
            raise ValueError("edge must be 1, 2 or 3")
        if self.vertex is not None:
            if self.vertex not in (1, 2, 3):
                raise ValueError("vertex must be 1, 2 or 3")
            ends = {1: (2, 3), 2: (1, 3), 3: (1, 2)}[self.edge]
            if self.vertex not in ends:
                raise ValueError(f"vertex {self.vertex} is not an end of edge {self.edge}")

    def admissible(self, tri: SimplePointedTriangle, xi) -> bool:
        x1, x2 = float(xi[0]), float(xi[1])
        if self.vertex is None:
            # nonzero and orthogonal to the edge (on its normal line)
            return (x1, x2) != (0.0, 0.0) and self._perp_edge(tri, x1, x2)
        return not self._perp_edge(tri, x1, x2)

    def _perp_edge(self, tri: SimplePointedTriangle, x1: float, x2: float) -> bool:
        if self.edge == 1:
            return tri.h * x1 - tri.k * x2 == 0
        if self.edge == 2:
            return x2 == 0
        return x1 == 0

    def rational_weight(self, tri: SimplePointedTriangle, xi) -> complex:
        """The rational factor at frequency xi (poles off the admissible set)."""
        h, k = tri.h, tri.k
        x1, x2 = float(xi[0]), float(xi[1])
        n2 = x1 * x1 + x2 * x2
        if self.vertex is None:
            # vol(edge)/||normal|| times <xi, normal> / (-2 pi i ||xi||^2);
            # for the hypotenuse vol(E1) = ||(k,h)|| so the prefactor is 1
            if self.edge == 1:
                num = k * x1 + h * x2
            elif self.edge == 2:
                num = -x1 * k
            else:
                num = -x2 * h
            return num / (-2j * math.pi * n2)
        c = -1.0 / (4.0 * math.pi * math.pi)
        if self.edge == 1:
            base = c * (k * x1 + h * x2) / (n2 * (h * x1 - k * x2))
            return base if self.vertex == 2 else -base
        if self.edge == 2:
            base = c * x1 / (n2 * x2)
            return base if self.vertex == 1 else -base
        base = c * x2 / (n2 * x1)
        return base if self.vertex == 1 else -base

    def exponential_weight(self, tri: SimplePointedTriangle, xi) -> complex:
        """e^{-2 pi i <xi, x>} at a point x of the chain's last face."""
        x1, x2 = float(xi[0]), float(xi[1])
        if self.vertex is None:
            anchor = {1: (tri.h, 0.0), 2: (0.0, 0.0), 3: (0.0, 0.0)}[self.edge]
        else:
            anchor = {1: (0.0, 0.0), 2: (tri.h, 0.0), 3: (0.0, tri.k)}[self.vertex]
        return np.exp(-2j * math.pi * (x1 * anchor[0] + x2 * anchor[1]))


def chain_weight(spec: ChainWeightSpec, xi, tri: SimplePointedTriangle, t) -> complex:
    """Total chain weight W(t*xi): rational factor times exponential factor."""
    if not spec.admissible(tri, xi):
        raise ValueError(f"frequency {xi} is not admissible for chain {spec}")
    t = float(t)
    txi = (t * float(xi[0]), t * float(xi[1]))
    return complex(spec.rational_weight(tri, txi) * spec.exponential_weight(tri, txi))


def _ordered_fsum(terms: np.ndarray, norms: np.ndarray) -> complex:
    order = np.argsort(norms, axis=None, kind="stable")
    flat = terms.reshape(-1)[order]
    return complex(fsum(flat.real.tolist()), fsum(flat.imag.tolist()))


def a1_truncated(tri: SimplePointedTriangle, t, cfg: SpectralConfig) -> list[float]:
    """Damped truncated sums converging to the linear quasi-coefficient.

    One value per epsilon: the three one-dimensional frequency sums along
    the edge normals (the two leg sums cancel pairwise at every truncation).
    """
    t = Fraction(t)
    if t == 0:
        raise ValueError("dilation t must be nonzero")
    h, k = tri.h, tri.k
    tf = float(t)
    # (normal vector, vol(edge)/||normal||, anchor pairing <normal, anchor>)
    edges = [
        ((k, h), 1.0, h * k * tf),
        ((-1, 0), float(k), 0.0),
        ((0, -1), float(h), 0.0),
    ]
    out = []
    for eps in cfg.epsilons:
        radius = cfg.radius(eps)
        terms: list[complex] = []
        norms: list[float] = []
        for (vx, vy), factor, pairing in edges:
            n2 = vx * vx + vy * vy
            eta_max = math.isqrt(radius * radius // n2)
            for eta in range(-eta_max, eta_max + 1):
                if eta == 0:
                    continue
                weight = factor / (-2j * math.pi * eta) * np.exp(-2j * math.pi * eta * pairing)
                terms.append(complex(weight) * math.exp(-eps * math.pi * eta * eta * n2))
                norms.append(eta * eta * n2)
        order = np.argsort(np.array(norms), kind="stable")
        seq = [terms[i] for i in order]
        real = fsum(z.real for z in seq)
        imag = fsum(z.imag for z in seq)
        if abs(imag) > 1e-10:
            raise AssertionError(f"imaginary residue {imag} in a1 sum")
        out.append(real)
    return out


def _disc_grid(radius: int):
    xs = np.arange(-radius, radius + 1, dtype=np.int64)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    N2 = X * X + Y * Y
    return X, Y, N2, (N2 > 0) & (N2 <= radius * radius)


def _vertex_pair_sum(tri, t, eps, radius, edge: int) -> complex:
    """Truncated sum of the two combined vertex chains of one edge."""
    h, k = tri.h, tri.k
    tf = float(t)
    X, Y, N2, disc = _disc_grid(radius)
    c = -1.0 / (4.0 * math.pi * math.pi)
    if edge == 1:
        mask = disc & (h * X != k * Y)
        rational = c * (k * X + h * Y) / np.where(mask, (X * X + Y * Y) * (h * X - k * Y), 1)
        phases = np.exp(-2j * math.pi * h * tf * X) - np.exp(-2j * math.pi * k * tf * Y)
    elif edge == 2:
        mask = disc & (Y != 0)
        rational = c * X / np.where(mask, (X * X + Y * Y) * Y, 1)
        phases = 1.0 - np.exp(-2j * math.pi * k * tf * Y)
    else:
        mask = disc & (X != 0)
        rational = c * Y / np.where(mask, (X * X + Y * Y) * X, 1)
        phases = 1.0 - np.exp(-2j * math.pi * h * tf * X)
    terms = np.where(mask, rational * phases * np.exp(-eps * math.pi * N2), 0.0)
    return _ordered_fsum(terms, N2)


def b_sums_truncated(tri: SimplePointedTriangle, t, cfg: SpectralConfig):
    """Per-edge vertex-chain sums, one sequence per edge.

    The hypotenuse sequence converges to a0(t); the two leg sequences are
    exactly zero at every truncation because their summands are odd in one
    coordinate over a symmetric domain.
    """
    t = Fraction(t)
    if t == 0:
        raise ValueError("dilation t must be nonzero")
    sequences = ([], [], [])
    for eps in cfg.epsilons:
        radius = cfg.radius(eps)
        for idx, edge in enumerate((1, 2, 3)):
            value = _vertex_pair_sum(tri, t, eps, radius, edge)
            if abs(value.imag) > 1e-10:
                raise AssertionError(f"imaginary residue {value.imag} in b{edge} sum")
            sequences[idx].append(value.real)
    return sequences


def c3_truncated(tri: SimplePointedTriangle, t, cfg: SpectralConfig) -> list[float]:
    """Damped truncated sums converging to the hypotenuse Dedekind piece c3."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("dilation t must be nonzero")
    h, k = tri.h, tri.k
    tf = float(t)
    out = []
    for eps in cfg.epsilons:
        radius = cfg.radius(eps)
        X, Y, N2, disc = _disc_grid(radius)
        mask = disc & (X != 0) & (h * X != k * Y)
        rational = (-1.0 / (4 * math.pi * math.pi)) * k / np.where(mask, (h * X - k * Y) * X, 1)
        terms = np.where(
            mask,
            rational * np.exp(-2j * math.pi * h * tf * X) * np.exp(-eps * math.pi * N2),
            0.0,
        )
        value = _ordered_fsum(terms, N2)
        if abs(value.imag) > 1e-10:
            raise AssertionError(f"imaginary residue {value.imag} in c3 sum")
        out.append(value.real)
    return out


DEFAULT_TWIST_CASES = (
    (((1, 0), (0, 1)), (1, 1), (Fraction(0), Fraction(0))),
    (((2, -3), (1, 0)), (1, 0), (Fraction(0), Fraction(0))),
    (((2, 1), (1, 1)), (1, 2), (Fraction(0), Fraction(0))),
    (((3, -1), (1, 2)), (2, 1), (Fraction(1, 2), Fraction(0))),
    (((1, 4), (0, 1)), (1, 1), (Fraction(1, 3), Fraction(1, 2))),
)


@lru_cache(maxsize=4)
def _unit_gauss_nodes(n: int):
    x, w = roots_legendre(n)
    return 0.5 * (x + 1.0), 0.5 * w


def twisted_transform_check(matrix, xi, shift, nodes: int = 2048):
    """Closed Fourier transform of a transported sawtooth product vs quadrature.

    ``matrix`` is an integer 2x2 matrix M with nonzero determinant; the
    function is the product sawtooth on the unit square composed with
    M^{-T} and translated by ``shift``, supported on the parallelogram
    shift + M^T [0,1]^2.  Returns (closed, quadrature) where closed is

        |det M| / (2 pi i)^2 / ((m xi1 + n xi2)(p xi1 + q xi2))
            * e^{-2 pi i <xi, shift>}

    and quadrature is tensor Gauss-Legendre integration of the transported
    function against the Fourier kernel over its support.
    """
    (m, n), (p, q) = ((int(matrix[0][0]), int(matrix[0][1])),
                      (int(matrix[1][0]), int(matrix[1][1])))
    det = m * q - n * p
    if det == 0:
        raise ValueError("matrix must be invertible")
    xi1, xi2 = int(xi[0]), int(xi[1])
    d1 = m * xi1 + n * xi2
    d2 = p * xi1 + q * xi2
    if d1 == 0 or d2 == 0:
        raise ValueError(f"frequency {xi} is outside the admissible set of {matrix}")
    s1, s2 = float(Fraction(shift[0])), float(Fraction(shift[1]))
    closed = abs(det) / ((2j * math.pi) ** 2 * d1 * d2) * np.exp(
        -2j * math.pi * (xi1 * s1 + xi2 * s2)
    )

    u, wu = _unit_gauss_nodes(nodes)
    inv_t = np.array([[q, -p], [-n, m]], dtype=float) / det  # M^{-T}
    total = 0.0 + 0.0j
    block = 256
    for i0 in range(0, nodes, block):
        uu = u[i0:i0 + block][:, None]
        ww = wu[i0:i0 + block][:, None]
        vv = u[None, :]
        wv = wu[None, :]
        x1 = s1 + m * uu + p * vv  # x = shift + M^T (u, v)
        x2 = s2 + n * uu + q * vv
        w1 = inv_t[0, 0] * (x1 - s1) + inv_t[0, 1] * (x2 - s2)
        w2 = inv_t[1, 0] * (x1 - s1) + inv_t[1, 1] * (x2 - s2)
        values = (w1 - 0.5) * (w2 - 0.5)
        kernel = np.exp(-2j * math.pi * (xi1 * x1 + xi2 * x2))
        total += np.sum(ww * wv * values * kernel)
    quadrature = total * abs(det)
    return complex(closed), complex(quadrature)


@dataclass(frozen=True)
class ReportRow:
    epsilon: float
    value: float
    abs_error: float


def closed_form_target(tri: SimplePointedTriangle, t, target: str) -> float:
    """The exact limit a truncated-sum target converges to, as a float."""
    t = Fraction(t)
    if target == "a1":
        return float(-b1_periodic(tri.h * tri.k * t))
    if target == "b1":
        return quasi_coefficients(tri, t).a0.to_float()
    if target in ("b2", "b3"):
        return 0.0
    if target == "c3-sum":
        return c_terms(tri, t).c3.to_float()
    raise ValueError(f"no scalar closed form for target {target!r}")


def convergence_report(tri: SimplePointedTriangle, t, cfg: SpectralConfig) -> list[ReportRow]:
    """Per-epsilon table (epsilon, truncated value, |value - closed form|)."""
    target = cfg.target
    closed = closed_form_target(tri, t, target)
    if target == "a1":
        values = a1_truncated(tri, t, cfg)
    elif target in ("b1", "b2", "b3"):
        values = b_sums_truncated(tri, t, cfg)[int(target[1]) - 1]
    elif target == "c3-sum":
        values = c3_truncated(tri, t, cfg)
    else:
        raise ValueError(f"target {target!r} has no epsilon schedule")
    return [ReportRow(e, v, abs(v - closed)) for e, v in zip(cfg.epsilons, values)]
