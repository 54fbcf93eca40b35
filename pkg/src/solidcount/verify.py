"""Self-contained verification suites behind the command line ``verify``.

Each suite returns (name, passed, detail).  The suites mirror the pytest
acceptance tests at sizes chosen so that ``verify --suite all`` completes in
well under a minute; the full-size grids live in the test suite.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .bernoulli import (
    dedekind_rademacher_star,
    dedekind_sum,
    dedekind_sum_fast,
)
from .corpus import polygon_corpus
from .oracle import brute_force_A, brute_force_L
from .polygon import RationalPolygon, ehrhart_polygon, solid_angle_sum_polygon
from .spectral import (
    DEFAULT_TWIST_CASES,
    SpectralConfig,
    a1_truncated,
    b_sums_truncated,
    closed_form_target,
    twisted_transform_check,
)
from .triangle import SimplePointedTriangle, ehrhart_triangle, solid_angle_sum_triangle

__all__ = ["run_suite", "SUITES"]


def _coprime_pairs(limit: int):
    for k in range(1, limit + 1):
        for h in range(1, limit + 1):
            if math.gcd(h, k) == 1:
                yield h, k


def suite_reciprocity():
    for k in range(2, 101):
        for h in range(1, k):
            if math.gcd(h, k) != 1:
                continue
            lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
            rhs = Fraction(h * h + k * k + 1, 12 * h * k) - Fraction(1, 4)
            if lhs != rhs:
                return False, f"reciprocity fails at ({h},{k})"
    for k in range(2, 201):
        for h in range(1, k):
            if math.gcd(h, k) != 1:
                continue
            if dedekind_sum_fast(h, k) != dedekind_sum(h, k):
                return False, f"fast path disagrees at ({h},{k})"
    return True, "exact for all coprime pairs <= 100; fast path matches <= 200"


def suite_pick():
    for h, k in _coprime_pairs(30):
        tri = SimplePointedTriangle(h, k)
        for t in range(1, 11):
            if solid_angle_sum_triangle(tri, t) != Fraction(h * k * t * t, 2):
                return False, f"volume identity fails at ({h},{k},{t})"
    for name, poly in polygon_corpus():
        if any(v.x.denominator != 1 or v.y.denominator != 1 for v in poly.vertices):
            continue
        for t in (1, 2, 3):
            if solid_angle_sum_polygon(poly, t) != poly.area() * t * t:
                return False, f"area law fails for {name} at t={t}"
    return True, "triangle volume identity and lattice-polygon area law hold exactly"


def suite_oracle():
    pairs = [(h, k) for h, k in _coprime_pairs(5)]
    dils = sorted({Fraction(p, q) for p in range(1, 13) for q in range(1, 5)})
    for h, k in pairs:
        tri = SimplePointedTriangle(h, k)
        poly = RationalPolygon([(0, 0), (h, 0), (0, k)])
        for t in dils:
            for tt in (t, -t):
                engine = solid_angle_sum_triangle(tri, tt)
                truth = brute_force_A(poly, tt)
                if engine.rational_part != truth.rational_part:
                    return False, f"A rational part differs at ({h},{k},{tt})"
                if abs(engine.to_float() - truth.to_float()) > 1e-9:
                    return False, f"A float differs at ({h},{k},{tt})"
            if ehrhart_triangle(tri, t) != brute_force_L(poly, t):
                return False, f"L differs at ({h},{k},{t})"
    for name, poly in polygon_corpus():
        for t in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
            engine = solid_angle_sum_polygon(poly, t)
            truth = brute_force_A(poly, t)
            if engine.rational_part != truth.rational_part or abs(
                engine.to_float() - truth.to_float()
            ) > 1e-9:
                return False, f"polygon A differs for {name} at t={t}"
            if ehrhart_polygon(poly, t) != brute_force_L(poly, t):
                return False, f"polygon L differs for {name} at t={t}"
    return True, "engine matches brute force on triangles and the polygon corpus"


def _frac(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


def suite_knuth():
    """Step relation: s*(h,k; (n+nu)/k, 0) + {(n+nu)/k}/2 is independent of nu."""
    rng = random.Random(20240)
    nus = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 7), Fraction(5, 6)]
    checked = 0
    while checked < 150:
        k = rng.randrange(1, 25)
        h = rng.randrange(1, 25)
        if math.gcd(h, k) != 1:
            continue
        n = rng.randrange(-6, 12)
        nu = rng.choice(nus)
        lhs = dedekind_rademacher_star(h, k, Fraction(n + nu, k), 0) + Fraction(1, 2) * _frac(
            Fraction(n + nu, k)
        )
        rhs = dedekind_rademacher_star(h, k, Fraction(n, k), 0) + Fraction(1, 2) * _frac(
            Fraction(n, k)
        )
        if lhs != rhs:
            return False, f"step relation fails at h={h} k={k} n={n} nu={nu}"
        checked += 1
    return True, "sawtooth-star step relation holds on 150 random samples"


def suite_spectral():
    cfg = SpectralConfig(epsilons=(0.1, 0.02))
    triples = [(1, 2, Fraction(1, 3)), (2, 3, Fraction(1, 12))]
    for h, k, t in triples:
        tri = SimplePointedTriangle(h, k)
        target = closed_form_target(tri, t, "a1")
        if abs(a1_truncated(tri, t, cfg)[-1] - target) > 5e-2:
            return False, f"a1 sum misses closed form at ({h},{k},{t})"
        b1_seq, b2_seq, b3_seq = b_sums_truncated(tri, t, cfg)
        if abs(b1_seq[-1] - closed_form_target(tri, t, "b1")) > 5e-2:
            return False, f"b1 sum misses closed form at ({h},{k},{t})"
        if any(abs(v) > 1e-10 for v in b2_seq + b3_seq):
            return False, f"leg sums fail to cancel at ({h},{k},{t})"
    for matrix, xi, shift in DEFAULT_TWIST_CASES[:2]:
        closed, quad = twisted_transform_check(matrix, xi, shift)
        if abs(closed - quad) > 1e-6:
            return False, f"twisted transform mismatch for {matrix}, {xi}"
    return True, "damped sums and twisted transform agree with the closed forms"


SUITES = {
    "reciprocity": suite_reciprocity,
    "pick": suite_pick,
    "oracle": suite_oracle,
    "knuth": suite_knuth,
    "spectral": suite_spectral,
}


def run_suite(name: str) -> list[tuple[str, bool, str]]:
    """Run one suite (or 'all'); returns (name, passed, detail) rows."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}")
    results = []
    for suite_name in names:
        passed, detail = SUITES[suite_name]()
        results.append((suite_name, passed, detail))
    return results
