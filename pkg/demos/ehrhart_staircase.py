# The lattice-point count as a staircase in the dilation.
#
# For the axis triangle with legs h, k the count L(t) is right-continuous
# and constant on every interval [n/(hk), (n+1)/(hk)); at t = n/(hk) it
# jumps by the number of lattice points landing on the dilated hypotenuse,
# which is the number of ways to write n as a nonnegative combination of
# h and k.

from fractions import Fraction

from solidcount import SimplePointedTriangle, ehrhart_at_breakpoint, ehrhart_triangle, popoviciu

h, k = 2, 3
tri = SimplePointedTriangle(h, k)
hk = h * k

print(f"staircase of the lattice count for legs h={h}, k={k} (breakpoints at n/{hk})\n")
print("  n   t=n/hk     L(t)   jump   representations of n by {h,k}")
previous = None
for n in range(1, 19):
    t = Fraction(n, hk)
    value = ehrhart_triangle(tri, t)
    jump = None if previous is None else value - previous
    reps = popoviciu(h, k, n)
    marker = "" if jump is None else f"{jump:5}"
    print(f"{n:3}   {str(t):8} {value:5}  {marker:>5}   {reps}")
    # inside the interval the count does not move
    for j in (1, 3, 5):
        assert ehrhart_triangle(tri, t + Fraction(j, 6 * hk)) == value
    previous = value

print("\nevery jump equals the representation count, and the value at each")
print("breakpoint also comes out of a closed star-Dedekind expression:")
for n in (1, 5, 12):
    closed = ehrhart_at_breakpoint(tri, n)
    print(f"  n={n:2}: closed form {closed} == direct {ehrhart_triangle(tri, Fraction(n, hk))}")
