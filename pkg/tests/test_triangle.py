import math
import random
from fractions import Fraction

import pytest

from solidcount import (
    AngleValue,
    RationalPolygon,
    SimplePointedTriangle,
    brute_force_popoviciu,
    c_terms,
    edge_counts,
    ehrhart_at_breakpoint,
    ehrhart_triangle,
    ehrhart_triangle_expanded,
    face_counts,
    popoviciu,
    quasi_coefficients,
    scan_dilated,
    solid_angle_sum_triangle,
)


def tri_polygon(h, k):
    return RationalPolygon([(0, 0), (h, 0), (0, k)])


def test_triangle_validation():
    with pytest.raises(ValueError):
        SimplePointedTriangle(2, 4)
    with pytest.raises(ValueError):
        SimplePointedTriangle(0, 1)


def test_quasi_coefficients_examples():
    q = quasi_coefficients(SimplePointedTriangle(1, 1), Fraction(1, 2))
    assert (q.a2, q.a1) == (Fraction(1, 2), 0)
    assert q.a0 == AngleValue(Fraction(1, 8))

    q = quasi_coefficients(SimplePointedTriangle(2, 3), Fraction(1, 2))
    assert q.a0 == AngleValue(Fraction(1, 4)) - AngleValue.from_atom(3, 2)

    # integer dilations kill both periodic coefficients
    for h, k in ((2, 3), (5, 4), (1, 7)):
        for t in (1, 2, 3):
            q = quasi_coefficients(SimplePointedTriangle(h, k), t)
            assert q.a1 == 0 and q.a0 == AngleValue.zero()


def test_quasi_rejects_zero_dilation():
    with pytest.raises(ValueError):
        quasi_coefficients(SimplePointedTriangle(1, 2), 0)


def test_c_terms_examples():
    c = c_terms(SimplePointedTriangle(1, 1), Fraction(2, 7))
    assert c.c1 == Fraction(1, 12) and c.c4 == Fraction(1, 12)

    c = c_terms(SimplePointedTriangle(2, 3), Fraction(1, 2))
    assert c.c2 == Fraction(1, 234)
    assert c.c3 == AngleValue(Fraction(1, 18)) - AngleValue.from_atom(3, 2)
    assert c.c6 == AngleValue.zero()


def test_c_terms_sum_to_a0():
    rng = random.Random(5)
    for _ in range(100):
        h, k = rng.randint(1, 20), rng.randint(1, 20)
        if math.gcd(h, k) != 1:
            continue
        t = Fraction(rng.randint(-40, 40) or 1, rng.randint(1, 10))
        tri = SimplePointedTriangle(h, k)
        assert c_terms(tri, t).total() == quasi_coefficients(tri, t).a0


def test_solid_angle_examples():
    assert solid_angle_sum_triangle(SimplePointedTriangle(3, 2), 1) == Fraction(3)
    assert solid_angle_sum_triangle(SimplePointedTriangle(1, 1), Fraction(1, 2)) == Fraction(1, 4)
    value = solid_angle_sum_triangle(SimplePointedTriangle(2, 3), Fraction(1, 2))
    assert value == AngleValue(1) - AngleValue.from_atom(3, 2)
    assert math.isclose(value.to_float(), 0.906416, abs_tol=1e-6)


def test_volume_identity_small():
    for h, k in ((1, 1), (2, 3), (4, 9), (7, 5)):
        tri = SimplePointedTriangle(h, k)
        for t in range(1, 6):
            assert solid_angle_sum_triangle(tri, t) == Fraction(h * k * t * t, 2)


def test_periodicity_small():
    rng = random.Random(11)
    for _ in range(50):
        h, k = rng.randint(1, 15), rng.randint(1, 15)
        if math.gcd(h, k) != 1:
            continue
        t = Fraction(rng.randint(-30, 30) or 3, rng.randint(1, 8))
        if t == -1:
            continue
        tri = SimplePointedTriangle(h, k)
        q0, q1 = quasi_coefficients(tri, t), quasi_coefficients(tri, t + 1)
        assert q0.a1 == q1.a1 and q0.a0 == q1.a0


def test_popoviciu_examples():
    assert popoviciu(2, 3, 7) == 1
    assert popoviciu(2, 3, 1) == 0
    for n in range(0, 12):
        assert popoviciu(1, 1, n) == n + 1


def test_popoviciu_matches_enumeration():
    for a, b in ((2, 3), (3, 5), (4, 7), (1, 6)):
        for n in range(0, 60):
            assert popoviciu(a, b, n) == brute_force_popoviciu(a, b, n)


def test_popoviciu_rejects():
    with pytest.raises(ValueError):
        popoviciu(2, 4, 5)
    with pytest.raises(ValueError):
        popoviciu(2, 3, -1)


def test_edge_counts_examples():
    assert edge_counts(SimplePointedTriangle(2, 3), Fraction(1, 2)) == (1, 2, 2)
    assert edge_counts(SimplePointedTriangle(3, 2), 1) == (2, 3, 4)
    assert edge_counts(SimplePointedTriangle(1, 1), Fraction(1, 3)) == (0, 1, 1)


def test_edge_counts_match_oracle():
    rng = random.Random(3)
    for _ in range(60):
        h, k = rng.randint(1, 7), rng.randint(1, 7)
        if math.gcd(h, k) != 1:
            continue
        t = Fraction(rng.randint(1, 25), rng.randint(1, 6))
        scan = scan_dilated(tri_polygon(h, k), t)
        hyp, vert, horiz = edge_counts(SimplePointedTriangle(h, k), t)
        # scan's edges are (bottom, hypotenuse, vertical); counts are interiors
        lattice = scan.vertex_is_lattice
        assert horiz == scan.n_edge_interior[0] + 1 + lattice[1]
        assert hyp == scan.n_edge_interior[1] + lattice[1] + lattice[2]
        assert vert == scan.n_edge_interior[2] + 1 + lattice[2]


def test_ehrhart_examples():
    assert ehrhart_triangle(SimplePointedTriangle(1, 1), 1) == 3
    assert ehrhart_triangle(SimplePointedTriangle(2, 3), Fraction(1, 2)) == 3
    # Pick's theorem: area 12, boundary 12
    assert ehrhart_triangle(SimplePointedTriangle(3, 2), 2) == 19


def test_ehrhart_requires_positive_dilation():
    with pytest.raises(ValueError):
        ehrhart_triangle(SimplePointedTriangle(1, 2), Fraction(-1, 2))


def test_expanded_diagnostic_examples():
    assert ehrhart_triangle_expanded(SimplePointedTriangle(1, 1), 1) == Fraction(5, 2)
    assert ehrhart_triangle_expanded(SimplePointedTriangle(1, 1), Fraction(1, 2)) == Fraction(1, 2)


def test_expanded_offset_is_constant_half():
    rng = random.Random(17)
    for _ in range(80):
        h, k = rng.randint(1, 9), rng.randint(1, 9)
        if math.gcd(h, k) != 1:
            continue
        t = Fraction(rng.randint(1, 30), rng.randint(1, 8))
        tri = SimplePointedTriangle(h, k)
        assert ehrhart_triangle_expanded(tri, t) - ehrhart_triangle(tri, t) == Fraction(-1, 2)


def test_breakpoint_formula_examples():
    assert ehrhart_at_breakpoint(SimplePointedTriangle(1, 1), 1) == 3
    tri = SimplePointedTriangle(2, 3)
    assert ehrhart_at_breakpoint(tri, 3) == ehrhart_triangle(tri, Fraction(1, 2))


def test_face_counts_examples():
    fc = face_counts(SimplePointedTriangle(2, 3), Fraction(1, 2))
    assert fc.n_interior == 0
    # the horizontal-leg lattice point (1,0) is the dilated x vertex, so the
    # leg has no interior points; only the vertical leg holds one
    assert fc.n_edge_interior == (0, 1, 0)
    assert fc.vertex_is_lattice == (True, True, False)

    fc = face_counts(SimplePointedTriangle(1, 1), 1)
    assert fc == type(fc)(0, (0, 0, 0), (True, True, True))

    fc = face_counts(SimplePointedTriangle(3, 2), 1)
    assert fc.n_interior == 1
    assert fc.n_edge_interior == (0, 1, 2)
    assert fc.vertex_is_lattice == (True, True, True)


def test_face_counts_total_consistency():
    rng = random.Random(23)
    for _ in range(60):
        h, k = rng.randint(1, 8), rng.randint(1, 8)
        if math.gcd(h, k) != 1:
            continue
        t = Fraction(rng.randint(1, 20), rng.randint(1, 6))
        tri = SimplePointedTriangle(h, k)
        fc = face_counts(tri, t)
        total = fc.n_interior + sum(fc.n_edge_interior) + sum(fc.vertex_is_lattice)
        assert total == ehrhart_triangle(tri, t)


def test_staircase_spot():
    tri = SimplePointedTriangle(2, 3)
    # constant on [n/6, (n+1)/6), jump of popoviciu(2,3,n) at n/6
    for n in range(1, 20):
        left = ehrhart_triangle(tri, Fraction(6 * n - 1, 36))
        at = ehrhart_triangle(tri, Fraction(n, 6))
        inside = ehrhart_triangle(tri, Fraction(6 * n + 5, 36))
        assert at == inside
        assert at - left == popoviciu(2, 3, n)
