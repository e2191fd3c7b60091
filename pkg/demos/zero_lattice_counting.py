"""
Counting zeros on the dyadic circle lattice
===========================================

The zero set puts 2^k equally spaced points on the circle |z| = 2^k.  This
script walks the counting function n(r), checks the exact dyadic law
n(2^k) = 2^(k+1) - 2, and shows the two density facts that drive everything
downstream: n(r)/r climbs to 2 along powers of two but never exceeds 4/3 on
the outer half of each ring gap, and the zeros on each circle cancel exactly
in reciprocal sum.
"""
from fractions import Fraction

import numpy as np

from expgrowth import ZeroLattice, verify_counting_bounds

lat = ZeroLattice(k_max=16)

print("dyadic counting law")
print("  k   n(2^k)   n(2^k)/2^k")
for k in range(1, 11):
    n = lat.counting(2.0 ** k)
    ratio = Fraction(n, 2 ** k)
    print("  %2d  %6d   %s = %.6f" % (k, n, ratio, float(ratio)))
print("  the ratio increases toward 2 and never reaches it")
print()

# between 1.5 * 2^(k-1) and 2^k the count is frozen while r keeps growing,
# so the ratio dips; sampling the band shows the 4/3 ceiling
print("upper band ratio, k = 6")
for r in np.linspace(1.5 * 32, 64, 6, endpoint=False):
    n = lat.counting(float(r))
    print("  r = %7.3f   n = %3d   n/r = %.4f" % (r, n, n / r))
print()

print("reciprocal sums vanish circle by circle")
for r in (2.0, 5.0, 16.0, 100.0, 1000.0):
    s = lat.reciprocal_sum(r)
    print("  |sum 1/a over |a| <= %6.0f| = %.3e" % (r, abs(s)))
print()

report = verify_counting_bounds(lat)
print("scan of all dyadic radii and band midpoints up to 2^%d:" % lat.k_max)
print("  sup n(r)/r   = %s (reached at k = %d)"
      % (report.sup_normalized, report.sup_at_k))
print("  bounded by 2 = %s" % report.density_bounded_by_two)
print("  max |recip|  = %.3e" % report.max_reciprocal)
