"""Rational polygons and their reduction to axis right triangles.

Pipeline for a simple polygon P with rational vertices and nonzero rational
dilation t:

1. Fan P from the origin into signed pointed triangles (0, V_i, V_{i+1}),
   one per edge, the sign being the orientation of the triple; triangles
   collinear with the origin carry no weight and are dropped.
2. Split each pointed triangle's cone at the origin into unimodular
   subcones by repeatedly inserting the lattice vector that closes a
   determinant-1 pair (the boundary polyline of the convex hull of the
   cone's lattice points, i.e. the continued-fraction subdivision).
3. Map each unimodular subcone to the first quadrant.  The clipped piece
   becomes an axis right triangle with rational legs lambda*(h, k),
   gcd(h,k) = 1, evaluated exactly by the closed forms at dilation
   lambda*t.  The lattice census transfers through the unimodular map;
   only the vertex angles are re-read from the piece's true geometry.
4. Sum the signed piece values.  Because the angle weight of a point is
   additive over tangent-cone decompositions, the signed sum reproduces
   the polygon's weighted count exactly, atoms included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .angles import AngleValue, angle_between
from .rational import (
    LatticeVector,
    RationalPoint,
    cross,
    mod_inverse,
    parse_rational,
    primitive,
)
from .triangle import SimplePointedTriangle, face_counts

__all__ = [
    "RationalPolygon",
    "PointedTriangle",
    "UnimodularPiece",
    "fan_decompose",
    "unimodularize_cone",
    "transport",
    "solid_angle_sum_polygon",
    "segment_lattice_count",
    "ehrhart_polygon",
    "parse_polygon",
    "load_polygon",
]


def _point(p) -> RationalPoint:
    return RationalPoint(Fraction(p[0]), Fraction(p[1]))


def _segments_intersect(a, b, c, d) -> bool:
    """Exact test: do closed segments [a,b] and [c,d] share a point?"""
    d1 = cross((b[0] - a[0], b[1] - a[1]), (c[0] - a[0], c[1] - a[1]))
    d2 = cross((b[0] - a[0], b[1] - a[1]), (d[0] - a[0], d[1] - a[1]))
    d3 = cross((d[0] - c[0], d[1] - c[1]), (a[0] - c[0], a[1] - c[1]))
    d4 = cross((d[0] - c[0], d[1] - c[1]), (b[0] - c[0], b[1] - c[1]))
    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0
            and (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0):
        return True

    def on_segment(p, q, r):
        if cross((q[0] - p[0], q[1] - p[1]), (r[0] - p[0], r[1] - p[1])) != 0:
            return False
        return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
                and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))

    return (on_segment(a, b, c) or on_segment(a, b, d)
            or on_segment(c, d, a) or on_segment(c, d, b))


class RationalPolygon:
    """Simple polygon with rational vertices in counterclockwise order.

    Validation rejects repeated vertices, three consecutive collinear
    vertices, clockwise orientation, and self-intersection.
    """

    def __init__(self, vertices):
        pts = tuple(_point(p) for p in vertices)
        n = len(pts)
        if n < 3:
            raise ValueError("polygon needs at least 3 vertices")
        if len(set(pts)) != n:
            raise ValueError("repeated vertex")
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            if cross((b.x - a.x, b.y - a.y), (c.x - b.x, c.y - b.y)) == 0:
                raise ValueError(f"three consecutive collinear vertices at {b}")
        area2 = sum(cross(pts[i], pts[(i + 1) % n]) for i in range(n))
        if area2 <= 0:
            raise ValueError("vertices must be in counterclockwise order")
        for i in range(n):
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue  # adjacent edges share only their vertex
                if _segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]):
                    raise ValueError("polygon is self-intersecting")
        self.vertices = pts

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, RationalPolygon) and self.vertices == other.vertices

    def __repr__(self):
        inner = ", ".join(f"({v.x},{v.y})" for v in self.vertices)
        return f"RationalPolygon([{inner}])"

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def area(self) -> Fraction:
        n = len(self.vertices)
        return sum(cross(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)) / 2

    def interior_angle(self, i: int) -> AngleValue:
        """Interior angle at vertex i, in (0, 1) turns (reflex angles allowed)."""
        n = len(self.vertices)
        v = self.vertices[i % n]
        nxt = self.vertices[(i + 1) % n]
        prv = self.vertices[(i - 1) % n]
        return angle_between((nxt.x - v.x, nxt.y - v.y), (prv.x - v.x, prv.y - v.y))

    def dilate(self, t) -> "RationalPolygon":
        t = Fraction(t)
        if t == 0:
            raise ValueError("dilation t must be nonzero")
        return RationalPolygon([(t * v.x, t * v.y) for v in self.vertices])

    def translate(self, dx, dy) -> "RationalPolygon":
        return RationalPolygon([(v.x + Fraction(dx), v.y + Fraction(dy)) for v in self.vertices])


@dataclass(frozen=True)
class PointedTriangle:
    """Signed triangle (0, a, b); sign is the orientation of that triple."""

    a: RationalPoint
    b: RationalPoint
    sign: int

    def __post_init__(self):
        orient = cross(self.a, self.b)
        if orient == 0:
            raise ValueError("pointed triangle is degenerate")
        if self.sign != (1 if orient > 0 else -1):
            raise ValueError("sign does not match orientation")


@dataclass(frozen=True)
class UnimodularPiece:
    """One unimodular subcone's clip of a pointed triangle.

    ``matrix`` maps the cone generators to the standard basis; the clipped
    triangle maps to the axis triangle with legs scale*(base.h, base.k).
    """

    matrix: tuple[tuple[int, int], tuple[int, int]]
    base: SimplePointedTriangle
    scale: Fraction
    sign: int

    @property
    def generators(self) -> tuple[LatticeVector, LatticeVector]:
        """The subcone generators (columns of matrix^{-1}; det(matrix) = 1)."""
        (a, b), (c, d) = self.matrix
        return LatticeVector(d, -c), LatticeVector(-b, a)


def fan_decompose(poly: RationalPolygon) -> list[PointedTriangle]:
    """Signed fan of a polygon from the origin, one triangle per edge.

    Edges collinear with the origin give degenerate triangles that carry no
    angle weight; they are omitted.  The signed areas sum to area(P).
    """
    pieces = []
    for a, b in poly.edges():
        orient = cross(a, b)
        if orient == 0:
            continue
        pieces.append(PointedTriangle(a, b, 1 if orient > 0 else -1))
    return pieces


def unimodularize_cone(u, v) -> list[LatticeVector]:
    """Partition the cone from u counterclockwise to v into unimodular subcones.

    u and v must be primitive, independent, with 0 < angle < 1/2 turn
    (det(u, v) > 0).  Returns the fan u = w_0, w_1, ..., w_m = v with
    det(w_i, w_{i+1}) = 1 for every adjacent pair.
    """
    u = LatticeVector(*u)
    v = LatticeVector(*v)
    for w in (u, v):
        if gcd(w.x, w.y) != 1:
            raise ValueError(f"generator {w} is not primitive")
    d = cross(u, v)
    if d == 0:
        raise ValueError("cone generators are dependent")
    if d < 0:
        raise ValueError("generators must be in counterclockwise order (angle < 1/2 turn)")
    fan = [u]
    while cross(u, v) > 1:
        # solve det(u, w0) = 1, then push w0 into the cone: the least s with
        # det(w0 + s*u, v) >= 0 gives the hull edge next to u
        g, px, py = _extended_gcd(u.x, u.y)
        assert g == 1
        w0 = LatticeVector(-py, px)  # det(u, w0) = u.x*px + u.y*py = 1
        num = -cross(w0, v)
        den = cross(u, v)
        s = -(-num // den)  # ceil(num/den)
        w = LatticeVector(w0.x + s * u.x, w0.y + s * u.y)
        assert cross(u, w) == 1 and cross(w, v) >= 0
        fan.append(w)
        u = w
    fan.append(v)
    return fan


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _ray_segment_parameter(w: LatticeVector, a: RationalPoint, b: RationalPoint) -> Fraction:
    """rho > 0 such that rho*w lies on segment [a, b]."""
    den = cross(w, (b.x - a.x, b.y - a.y))
    if den == 0:
        raise ValueError("ray is parallel to the segment; no intersection")
    rho = Fraction(cross(a, b), den)
    # the segment parameter, for the precondition check
    s = Fraction(cross(a, w), den)
    if rho <= 0 or s < 0 or s > 1:
        raise ValueError("cone ray misses the triangle's far segment")
    return rho


def transport(tri: PointedTriangle, generators) -> UnimodularPiece:
    """Clip a counterclockwise pointed triangle by one unimodular subcone.

    ``generators`` is an adjacent pair (w, w') from the cone fan, with
    det(w, w') = 1.  The unimodular map sending w, w' to the standard basis
    carries the clipped triangle to the axis triangle with legs
    (rho_w, rho_w') = scale * (h, k) in coprime integers.
    """
    if tri.sign != 1:
        raise ValueError("transport expects a counterclockwise pointed triangle")
    w, wp = (LatticeVector(*g) for g in generators)
    if cross(w, wp) != 1:
        raise ValueError("generator pair is not unimodular")
    rho_w = _ray_segment_parameter(w, tri.a, tri.b)
    rho_wp = _ray_segment_parameter(wp, tri.a, tri.b)
    matrix = ((wp.y, -wp.x), (-w.y, w.x))  # inverse of the column matrix [w  w']
    num = gcd(rho_w.numerator * rho_wp.denominator, rho_wp.numerator * rho_w.denominator)
    den = rho_w.denominator * rho_wp.denominator
    scale = Fraction(num, den)
    h = int(rho_w / scale)
    k = int(rho_wp / scale)
    return UnimodularPiece(matrix, SimplePointedTriangle(h, k), scale, tri.sign)


def _piece_value(piece: UnimodularPiece, t: Fraction) -> AngleValue:
    """Exact weighted lattice count of one dilated piece (without its sign).

    For t < 0 the dilate equals |t| times the point reflection of the piece;
    reflected generators keep the counterclockwise order, so both branches
    share one code path.
    """
    w, wp = piece.generators
    if t < 0:
        w = LatticeVector(-w.x, -w.y)
        wp = LatticeVector(-wp.x, -wp.y)
    tt = abs(t)
    counts = face_counts(piece.base, piece.scale * tt)
    value = AngleValue(counts.n_interior + Fraction(sum(counts.n_edge_interior), 2))
    origin_lattice, far_w_lattice, far_wp_lattice = counts.vertex_is_lattice
    assert origin_lattice
    value = value + angle_between(w, wp)
    if far_w_lattice or far_wp_lattice:
        # chord direction from the w-ray vertex to the w'-ray vertex
        rho_w = piece.scale * piece.base.h
        rho_wp = piece.scale * piece.base.k
        chord = (rho_wp * wp.x - rho_w * w.x, rho_wp * wp.y - rho_w * w.y)
        if far_w_lattice:
            value = value + angle_between(chord, (-w.x, -w.y))
        if far_wp_lattice:
            value = value + angle_between((-wp.x, -wp.y), (-chord[0], -chord[1]))
    return value


def _pointed_triangle_value(a: RationalPoint, b: RationalPoint, t: Fraction) -> AngleValue:
    """Weighted lattice count of t * conv(0, a, b) for a ccw triple (0, a, b)."""
    u, _ = primitive((_clear(a)))
    v, _ = primitive((_clear(b)))
    total = AngleValue.zero()
    fan = unimodularize_cone(u, v)
    tri = PointedTriangle(a, b, 1)
    for w, wp in zip(fan, fan[1:]):
        total = total + _piece_value(transport(tri, (w, wp)), t)
    return total


def _clear(p: RationalPoint) -> tuple[int, int]:
    scale = lcm(p.x.denominator, p.y.denominator)
    return (int(p.x * scale), int(p.y * scale))


def solid_angle_sum_polygon(poly: RationalPolygon, t) -> AngleValue:
    """Exact solid-angle weighted lattice sum of the dilated polygon, t != 0."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("dilation t must be nonzero")
    total = AngleValue.zero()
    for tri in fan_decompose(poly):
        if tri.sign == 1:
            total = total + _pointed_triangle_value(tri.a, tri.b, t)
        else:
            total = total - _pointed_triangle_value(tri.b, tri.a, t)
    return total


def segment_lattice_count(p1, p2, t) -> int:
    """Number of lattice points on the closed dilated segment t*[p1, p2]."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("dilation t must be nonzero")
    a = _point(p1)
    b = _point(p2)
    if a == b:
        raise ValueError("degenerate segment")
    qa = RationalPoint(t * a.x, t * a.y)
    qb = RationalPoint(t * b.x, t * b.y)
    den = lcm(lcm(qa.x.denominator, qa.y.denominator),
              lcm(qb.x.denominator, qb.y.denominator))
    ax, ay = int(qa.x * den), int(qa.y * den)
    bx, by = int(qb.x * den), int(qb.y * den)
    step, span = primitive((bx - ax, by - ay))
    # lattice points are (a + j*step)/den for 0 <= j <= span with den | both coords
    sol_x = _solve_congruence(step.x, -ax, den)
    sol_y = _solve_congruence(step.y, -ay, den)
    if sol_x is None or sol_y is None:
        return 0
    merged = _merge_progressions(sol_x, sol_y)
    if merged is None:
        return 0
    j0, period = merged
    j0 %= period
    if j0 > span:
        return 0
    return (span - j0) // period + 1


def _solve_congruence(c: int, r: int, mod: int):
    """Solutions j of c*j = r (mod mod) as (j0, period), or None."""
    c %= mod
    r %= mod
    g = gcd(c, mod)
    if r % g:
        return None
    if mod == g:
        return (0, 1)
    m = mod // g
    j0 = (r // g) * mod_inverse(c // g, m) % m
    return (j0, m)


def _merge_progressions(p, q):
    """Intersect arithmetic progressions j=p0 (mod pm), j=q0 (mod qm)."""
    p0, pm = p
    q0, qm = q
    g = gcd(pm, qm)
    if (q0 - p0) % g:
        return None
    period = pm // g * qm
    m = qm // g
    k = ((q0 - p0) // g * mod_inverse(pm // g % m, m)) % m if m > 1 else 0
    return ((p0 + pm * k) % period, period)


def ehrhart_polygon(poly: RationalPolygon, t) -> int:
    """Number of lattice points in the closed dilated polygon, t > 0."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("lattice-point count requires t > 0")
    value = solid_angle_sum_polygon(poly, t)
    for a, b in poly.edges():
        value = value + Fraction(segment_lattice_count(a, b, t), 2)
    for i, v in enumerate(poly.vertices):
        if (t * v.x).denominator == 1 and (t * v.y).denominator == 1:
            value = value - poly.interior_angle(i)
    if value.atoms:
        raise AssertionError(f"vertex-angle atoms failed to cancel: {value!r}")
    count = value.rational_part
    if count.denominator != 1 or count < 0:
        raise AssertionError(f"count is not a nonnegative integer: {count}")
    return int(count)


def parse_polygon(text: str) -> RationalPolygon:
    """Parse the polygon text format.

    First non-comment line: vertex count n; then n lines "X Y" with rational
    coordinates, counterclockwise.  '#' starts a comment line.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty polygon file")
    n = int(lines[0])
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} vertex lines, found {len(lines) - 1}")
    vertices = []
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise ValueError(f"bad vertex line: {ln!r}")
        vertices.append((parse_rational(fields[0]), parse_rational(fields[1])))
    return RationalPolygon(vertices)


def load_polygon(path) -> RationalPolygon:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polygon(fh.read())
