# Dedekind sums: direct summation, the reciprocity fast path, and the
# geometric identity that forces reciprocity.
#
# The classical sum s(h,k) correlates two sawtooth waves over the residues
# mod k.  Direct summation costs O(k); the reciprocity law turns it into a
# Euclidean recursion costing O(log k).  Geometrically, reciprocity is
# equivalent to the fact that the solid-angle sum of a lattice triangle at
# integer dilations is exactly the dilated area.

import time
from fractions import Fraction

from solidcount import (
    SimplePointedTriangle,
    dedekind_rademacher,
    dedekind_sum,
    dedekind_sum_fast,
    solid_angle_sum_triangle,
)

print("classical sums, direct vs. fast path:")
for h, k in [(2, 3), (3, 5), (89, 144), (355, 113)]:
    direct = dedekind_sum(h, k)
    fast = dedekind_sum_fast(h, k)
    print(f"  s({h},{k}) = {direct}   fast path agrees: {direct == fast}")

big_h, big_k = 514229, 832040  # adjacent Fibonacci numbers: worst-case recursion
start = time.perf_counter()
value = dedekind_sum_fast(big_h, big_k)
elapsed = time.perf_counter() - start
print(f"\n  s({big_h},{big_k}) = {value}")
print(f"  via reciprocity in {elapsed * 1000:.2f} ms (direct summation would need {big_k} terms)")

print("\nreciprocity, checked exactly:")
for h, k in [(5, 7), (12, 25), (99, 100)]:
    lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
    rhs = Fraction(h * h + k * k + 1, 12 * h * k) - Fraction(1, 4)
    print(f"  s({h},{k}) + s({k},{h}) = {lhs} = (h^2+k^2+1)/12hk - 1/4: {lhs == rhs}")

print("\nthe same fact as geometry: at integer t the solid-angle sum is the area,")
print("and the constant quasi-coefficient (built from two Dedekind sums) vanishes:")
for h, k in [(3, 4), (7, 5)]:
    tri = SimplePointedTriangle(h, k)
    for t in (1, 2):
        value = solid_angle_sum_triangle(tri, t)
        print(f"  legs ({h},{k}), t={t}: A = {value.render()} == hk t^2/2:"
              f" {value == Fraction(h * k * t * t, 2)}")

print("\nshifted sums (the rational shift enters the first sawtooth factor):")
for shift in (Fraction(1, 2), Fraction(2, 3), 1):
    print(f"  s(2,3; shift={shift}) = {dedekind_rademacher(2, 3, shift)}")
