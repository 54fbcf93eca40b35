# Where the closed forms come from: damped frequency-space lattice sums.
#
# Each quasi-coefficient of the triangle's solid-angle sum is the limit of a
# Gaussian-damped lattice sum over frequency space, one term per chain in
# the triangle's face poset.  This script truncates those sums at radius
# R = ceil(c/sqrt(eps)) and watches them converge to the exact values as
# the damping is relaxed; two of the three vertex-chain sums vanish at every
# truncation by a parity symmetry of their summation domains.

from fractions import Fraction

from solidcount import (
    SimplePointedTriangle,
    SpectralConfig,
    a1_truncated,
    b_sums_truncated,
    twisted_transform_check,
)
from solidcount.spectral import DEFAULT_TWIST_CASES, closed_form_target

tri = SimplePointedTriangle(1, 2)
t = Fraction(1, 3)
cfg = SpectralConfig()  # eps 0.2 -> 0.02, radius factor 6

print(f"legs ({tri.h},{tri.k}), t = {t}\n")

target = closed_form_target(tri, t, "a1")
print(f"linear coefficient: damped one-dimensional sums -> {target:+.6f}")
print("  eps     R    value        |error|")
for eps, value in zip(cfg.epsilons, a1_truncated(tri, t, cfg)):
    print(f"  {eps:4}  {cfg.radius(eps):3}   {value:+.6f}    {abs(value - target):.2e}")

b1_seq, b2_seq, b3_seq = b_sums_truncated(tri, t, cfg)
target = closed_form_target(tri, t, "b1")
print(f"\nconstant coefficient: hypotenuse vertex-chain sums -> {target:+.6f}")
print("  eps     value        |error|     leg sums (exact cancellation)")
for eps, b1, b2, b3 in zip(cfg.epsilons, b1_seq, b2_seq, b3_seq):
    print(f"  {eps:4}  {b1:+.6f}    {abs(b1 - target):.2e}    {abs(b2):.1e}, {abs(b3):.1e}")

print("\ntwisted-transform identity: closed Fourier transform of a transported")
print("sawtooth product vs. 2048^2 tensor quadrature over its support:")
for matrix, xi, shift in DEFAULT_TWIST_CASES:
    closed, quad = twisted_transform_check(matrix, xi, shift)
    print(f"  M={matrix} xi={xi}: closed {closed:+.8f}, |closed - quadrature|"
          f" = {abs(closed - quad):.1e}")
