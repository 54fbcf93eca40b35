# Closed form vs. brute force for the axis right triangle.
#
# The solid-angle sum of a polygon weights every lattice point of the dilate
# by the fraction of a small disk around it that lies inside: 1 for interior
# points, 1/2 on open edges, the vertex angle in turns at lattice vertices.
# For the triangle with vertices (0,0), (h,0), (0,k) that sum has an exact
# closed form for every nonzero rational dilation t, and this script checks
# it against direct enumeration.

from fractions import Fraction

from solidcount import (
    RationalPolygon,
    SimplePointedTriangle,
    brute_force_A,
    brute_force_L,
    c_terms,
    ehrhart_triangle,
    quasi_coefficients,
    solid_angle_sum_triangle,
)

h, k = 2, 3
tri = SimplePointedTriangle(h, k)
poly = RationalPolygon([(0, 0), (h, 0), (0, k)])

print(f"triangle with legs h={h}, k={k}\n")

# The quasi-polynomial structure: A(t) = a2 t^2 + a1(t) t + a0(t), where a2
# is the area and a1, a0 are 1-periodic in t.
print("t        a1(t)    a0(t)")
for t in [Fraction(1, 5), Fraction(1, 2), Fraction(6, 5), Fraction(3, 2), Fraction(11, 5), 2]:
    q = quasi_coefficients(tri, t)
    print(f"{str(t):8} {str(q.a1):8} {q.a0.render()}")

print("\nnote the period: the rows at t = 1/5, 6/5, 11/5 repeat, and integer t")
print("kills both periodic terms.\n")

# Exact values against the brute-force oracle.
print("t        closed form                      float         oracle agrees")
for t in [Fraction(1, 2), Fraction(2, 3), 1, Fraction(5, 4), Fraction(-1, 2)]:
    closed = solid_angle_sum_triangle(tri, t)
    oracle = brute_force_A(poly, t)
    print(f"{str(t):8} {closed.render():32} {closed.to_float():.10f}  {closed == oracle}")

# Lattice-point counts assemble from the solid-angle sum plus boundary terms;
# all arctangent atoms cancel and an integer comes out.
print("\nt        count  oracle")
for t in [Fraction(1, 2), 1, Fraction(3, 2), 2, Fraction(7, 3)]:
    print(f"{str(t):8} {ehrhart_triangle(tri, t):5}  {brute_force_L(poly, t)}")

# The constant coefficient splits into six pieces (axis sums, second
# Bernoulli terms, and two shifted Dedekind-Rademacher pieces with their
# vertex-angle atoms); the pieces always re-sum to a0.
t = Fraction(1, 2)
c = c_terms(tri, t)
print(f"\nsix-way split of a0 at t = {t}:")
for name, value in [("c1", c.c1), ("c2", c.c2), ("c3", c.c3.render()),
                    ("c4", c.c4), ("c5", c.c5), ("c6", c.c6.render())]:
    print(f"  {name} = {value}")
print(f"  total = {c.total().render()} = a0: {c.total() == quasi_coefficients(tri, t).a0}")
