import math
import random
from fractions import Fraction

import pytest

from solidcount import (
    AngleValue,
    PointedTriangle,
    RationalPoint,
    RationalPolygon,
    SimplePointedTriangle,
    brute_force_A,
    brute_force_L,
    ehrhart_polygon,
    fan_decompose,
    parse_polygon,
    segment_lattice_count,
    solid_angle_sum_polygon,
    transport,
    unimodularize_cone,
)
from solidcount.corpus import polygon_corpus
from solidcount.rational import cross


def test_polygon_validation():
    with pytest.raises(ValueError):
        RationalPolygon([(0, 0), (1, 0)])  # too few
    with pytest.raises(ValueError):
        RationalPolygon([(0, 0), (1, 1), (0, 1)][::-1])  # clockwise
    with pytest.raises(ValueError):
        RationalPolygon([(0, 0), (1, 0), (2, 0), (0, 1)])  # collinear triple
    with pytest.raises(ValueError):
        RationalPolygon([(0, 0), (1, 0), (1, 1), (0, 0), (0, 1), (-1, 1)])  # repeat
    with pytest.raises(ValueError):
        RationalPolygon([(0, 0), (2, 2), (2, 0), (0, 2)])  # bowtie


def test_area_and_angles():
    square = RationalPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert square.area() == 1
    assert all(square.interior_angle(i) == AngleValue(Fraction(1, 4)) for i in range(4))
    # reflex vertex of an L: interior angle 3/4 turn
    ell = RationalPolygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
    assert ell.interior_angle(3) == AngleValue(Fraction(3, 4))


def test_fan_decompose_square_at_origin():
    square = RationalPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    pieces = fan_decompose(square)
    assert len(pieces) == 2
    assert all(p.sign == 1 for p in pieces)


def test_fan_decompose_shifted_square():
    square = RationalPolygon([(1, 1), (2, 1), (2, 2), (1, 2)])
    pieces = fan_decompose(square)
    assert sorted(p.sign for p in pieces) == [-1, -1, 1, 1]
    signed_area = sum(p.sign * abs(cross(p.a, p.b)) for p in pieces) / 2
    assert signed_area == square.area() == 1


def test_fan_decompose_far_triangle():
    # origin outside: the fan must mix signs, with signed areas adding up
    tri = RationalPolygon([(1, 1), (5, 3), (3, 5)])
    pieces = fan_decompose(tri)
    assert len(pieces) == 3
    assert sorted(p.sign for p in pieces) == [-1, -1, 1]
    signed_area = sum(p.sign * abs(cross(p.a, p.b)) for p in pieces) / 2
    assert signed_area == tri.area() == 6


def test_fan_signed_area_over_corpus():
    for name, poly in polygon_corpus():
        signed = sum(p.sign * abs(cross(p.a, p.b)) for p in fan_decompose(poly)) / 2
        assert signed == poly.area(), name


def test_pointed_triangle_validation():
    with pytest.raises(ValueError):
        PointedTriangle(RationalPoint(Fraction(1), Fraction(1)),
                        RationalPoint(Fraction(2), Fraction(2)), 1)
    with pytest.raises(ValueError):
        PointedTriangle(RationalPoint(Fraction(1), Fraction(0)),
                        RationalPoint(Fraction(0), Fraction(1)), -1)


def test_unimodularize_examples():
    assert unimodularize_cone((1, 0), (0, 1)) == [(1, 0), (0, 1)]
    assert unimodularize_cone((1, 0), (1, 2)) == [(1, 0), (1, 1), (1, 2)]
    assert unimodularize_cone((1, 0), (2, 3)) == [(1, 0), (1, 1), (2, 3)]


def test_unimodularize_rejects():
    with pytest.raises(ValueError):
        unimodularize_cone((1, 0), (2, 0))  # dependent
    with pytest.raises(ValueError):
        unimodularize_cone((0, 1), (1, 0))  # clockwise
    with pytest.raises(ValueError):
        unimodularize_cone((2, 4), (0, 1))  # not primitive


def _check_fan(u, v):
    fan = unimodularize_cone(u, v)
    assert fan[0] == u and fan[-1] == v
    for w, wp in zip(fan, fan[1:]):
        assert cross(w, wp) == 1
        assert math.gcd(w[0], w[1]) == 1
    # every ray stays inside the original cone
    for w in fan:
        assert cross(u, w) >= 0 and cross(w, v) >= 0


def test_unimodularize_exhaustive_small():
    prims = [
        (x, y)
        for x in range(-8, 9)
        for y in range(-8, 9)
        if (x, y) != (0, 0) and math.gcd(x, y) == 1
    ]
    for u in prims:
        for v in prims:
            if cross(u, v) > 0:
                _check_fan(u, v)


def test_unimodularize_random_up_to_50():
    rng = random.Random(99)
    checked = 0
    while checked < 1500:
        u = (rng.randint(-50, 50), rng.randint(-50, 50))
        v = (rng.randint(-50, 50), rng.randint(-50, 50))
        if u == (0, 0) or v == (0, 0):
            continue
        if math.gcd(*u) != 1 or math.gcd(*v) != 1 or cross(u, v) <= 0:
            continue
        _check_fan(u, v)
        checked += 1


def _pt(a, b):
    return PointedTriangle(RationalPoint(Fraction(a[0]), Fraction(a[1])),
                           RationalPoint(Fraction(b[0]), Fraction(b[1])), 1)


def test_transport_identity_cone():
    piece = transport(_pt((2, 0), (0, 3)), ((1, 0), (0, 1)))
    assert piece.matrix == ((1, 0), (0, 1))
    assert piece.base == SimplePointedTriangle(2, 3)
    assert piece.scale == 1


def test_transport_interior_ray():
    tri = _pt((1, 0), (1, 2))
    piece = transport(tri, ((1, 0), (1, 1)))
    assert piece.base == SimplePointedTriangle(1, 1)
    assert piece.scale == 1
    piece = transport(tri, ((1, 1), (1, 2)))
    assert piece.base == SimplePointedTriangle(1, 1)
    assert piece.scale == 1


def test_transport_rational_scale():
    # rays hit the chord at 3/2 and 9/4: legs 3/4 * (2, 3)
    piece = transport(_pt((Fraction(3, 2), 0), (0, Fraction(9, 4))), ((1, 0), (0, 1)))
    assert piece.base == SimplePointedTriangle(2, 3)
    assert piece.scale == Fraction(3, 4)


def test_transport_rejects_outside_cone():
    with pytest.raises(ValueError):
        transport(_pt((1, 0), (1, 2)), ((0, 1), (-1, 0)))


def test_solid_angle_polygon_examples():
    tri = RationalPolygon([(0, 0), (3, 0), (0, 2)])
    assert solid_angle_sum_polygon(tri, 1) == Fraction(3)
    square = RationalPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert solid_angle_sum_polygon(square, 1) == Fraction(1)
    far = RationalPolygon([(1, 1), (2, 1), (2, 2), (1, 2)])
    assert solid_angle_sum_polygon(far, Fraction(1, 2)) == brute_force_A(far, Fraction(1, 2))
    assert solid_angle_sum_polygon(far, Fraction(1, 2)) == AngleValue(Fraction(1, 4))


def test_solid_angle_polygon_negative_dilation():
    for name, poly in polygon_corpus():
        for t in (Fraction(-1, 2), Fraction(-4, 3)):
            engine = solid_angle_sum_polygon(poly, t)
            truth = brute_force_A(poly, t)
            assert engine.rational_part == truth.rational_part, (name, t)
            assert abs(engine.to_float() - truth.to_float()) < 1e-9, (name, t)


def test_segment_lattice_count_examples():
    assert segment_lattice_count((0, 0), (3, 2), 1) == 2
    assert segment_lattice_count((0, 0), (1, 0), 5) == 6
    assert segment_lattice_count((Fraction(1, 2), 0), (0, Fraction(1, 2)), 1) == 0


def test_segment_lattice_count_matches_enumeration():
    rng = random.Random(31)
    for _ in range(300):
        p1 = (Fraction(rng.randint(-12, 12), rng.randint(1, 4)),
              Fraction(rng.randint(-12, 12), rng.randint(1, 4)))
        p2 = (Fraction(rng.randint(-12, 12), rng.randint(1, 4)),
              Fraction(rng.randint(-12, 12), rng.randint(1, 4)))
        if p1 == p2:
            continue
        t = Fraction(rng.randint(-8, 8) or 1, rng.randint(1, 4))
        a = (t * p1[0], t * p1[1])
        b = (t * p2[0], t * p2[1])
        xs = range(math.ceil(min(a[0], b[0])), math.floor(max(a[0], b[0])) + 1)
        ys = range(math.ceil(min(a[1], b[1])), math.floor(max(a[1], b[1])) + 1)
        naive = sum(
            1
            for x in xs
            for y in ys
            if cross((b[0] - a[0], b[1] - a[1]), (x - a[0], y - a[1])) == 0
        )
        assert segment_lattice_count(p1, p2, t) == naive


def test_segment_rejects_degenerate():
    with pytest.raises(ValueError):
        segment_lattice_count((1, 1), (1, 1), 2)
    with pytest.raises(ValueError):
        segment_lattice_count((0, 0), (1, 0), 0)


def test_ehrhart_polygon_examples():
    square = RationalPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert ehrhart_polygon(square, 3) == 16
    tri = RationalPolygon([(0, 0), (3, 0), (0, 2)])
    assert ehrhart_polygon(tri, 1) == 7
    far = RationalPolygon([(1, 1), (2, 1), (2, 2), (1, 2)])
    assert ehrhart_polygon(far, Fraction(1, 2)) == 1 == brute_force_L(far, Fraction(1, 2))


def test_ehrhart_polygon_requires_positive_t():
    square = RationalPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    with pytest.raises(ValueError):
        ehrhart_polygon(square, Fraction(-1, 2))


def test_pick_consistency_on_lattice_corpus():
    for name, poly in polygon_corpus():
        if any(v.x.denominator != 1 or v.y.denominator != 1 for v in poly.vertices):
            continue
        for t in range(1, 6):
            assert solid_angle_sum_polygon(poly, t) == poly.area() * t * t, name


def test_translation_invariance():
    for name, poly in polygon_corpus()[:10]:
        for shift in ((1, 0), (-2, 3)):
            moved = poly.translate(*shift)
            for t in (1, 2):
                assert solid_angle_sum_polygon(moved, t) == solid_angle_sum_polygon(poly, t), name
                assert ehrhart_polygon(moved, t) == ehrhart_polygon(poly, t), name


def test_parse_polygon():
    text = """# a comment
    4
    0 0
    1 0
    1 1
    0 1
    """
    poly = parse_polygon(text)
    assert poly.area() == 1
    rational = parse_polygon("3\n1/2 0\n0 1/2\n-1/2 0\n")
    assert rational.vertices[0].x == Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_polygon("2\n0 0\n1 1\n")
    with pytest.raises(ValueError):
        parse_polygon("4\n0 0\n1 0\n1 1\n")
    with pytest.raises(ValueError):
        parse_polygon("3\n0 0\n1/0 0\n0 1\n")
