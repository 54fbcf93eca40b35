# The decomposition pipeline on a non-convex polygon with rational dilation.
#
# A polygon is fanned from the origin into signed pointed triangles, each
# cone at the origin is split into unimodular subcones, and every piece maps
# to an axis right triangle with rational legs evaluated by the closed form.
# The signed reassembly reproduces the weighted count exactly because the
# angle weight of a point is additive over tangent-cone decompositions.

from fractions import Fraction

from solidcount import (
    RationalPolygon,
    brute_force_A,
    brute_force_L,
    ehrhart_polygon,
    fan_decompose,
    solid_angle_sum_polygon,
    transport,
    unimodularize_cone,
)
from solidcount.rational import primitive

# an L-shaped hexagon whose reflex corner sits at the origin
poly = RationalPolygon([(-1, -1), (1, -1), (1, 0), (0, 0), (0, 1), (-1, 1)])
print("polygon:", poly)
print("area:", poly.area())

print("\nsigned fan from the origin (degenerate edges through 0 are dropped):")
for piece in fan_decompose(poly):
    print(f"  sign {piece.sign:+d}  triangle 0, ({piece.a.x},{piece.a.y}), ({piece.b.x},{piece.b.y})")

# one cone, unimodularized: the fan inserts lattice vectors until every
# adjacent pair spans a determinant-1 cell
u, v = (1, 2), (-3, 1)
print(f"\nunimodular fan of the cone from {u} to {v}:")
print(" ", " -> ".join(str(tuple(w)) for w in unimodularize_cone(u, v)))

tri = fan_decompose(poly)[0]
u0, _ = primitive((int(tri.a.x), int(tri.a.y)))
v0, _ = primitive((int(tri.b.x), int(tri.b.y)))
gens = unimodularize_cone(u0, v0)
print("\nfirst fan triangle transported piece by piece:")
for w, wp in zip(gens, gens[1:]):
    piece = transport(tri, (w, wp))
    print(f"  cone {tuple(w)},{tuple(wp)} -> base legs ({piece.base.h},{piece.base.k})"
          f" at scale {piece.scale}")

print("\nengine vs. brute force across dilations (including negative):")
print("t        A engine                          A oracle match   L engine  L oracle")
for t in [Fraction(1, 3), Fraction(1, 2), 1, Fraction(3, 2), Fraction(-2, 3)]:
    a = solid_angle_sum_polygon(poly, t)
    ok = a == brute_force_A(poly, t)
    if t > 0:
        l_engine = ehrhart_polygon(poly, t)
        l_oracle = brute_force_L(poly, t)
        print(f"{str(t):8} {a.render():32} {str(ok):14} {l_engine:8}  {l_oracle}")
    else:
        print(f"{str(t):8} {a.render():32} {str(ok):14} {'-':8}  -")
