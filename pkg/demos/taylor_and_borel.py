"""
Taylor coefficients and the Borel transform
===========================================

Multiplying out the product form of f gives Taylor coefficients with a rigid
combinatorial shape: a_m is nonzero only when m decomposes as a sum of
distinct values 2^k, and then a_m = (-1)^(#parts) * 2^(-sum of k * 2^k over
the parts).  Odd m never decomposes.  The coefficients are
tiny and exactly representable in (sign, log2|a_m|) form.  The Borel sum
g(s) = sum a_m s^m / m! converges everywhere and decays, which is what makes
the contour inversion in the next demo stable.
"""
import math

from expgrowth import BorelEvaluator, CoefficientStream, term_envelope

stream = CoefficientStream()

print("low order Taylor data of f")
print("   m   sign   log2|a_m|      a_m")
for m in range(0, 13):
    sign, log2a = stream.taylor_coefficient(m)
    a = 0.0 if sign == 0 else sign * 2.0 ** log2a
    print("  %2d   %+d     %8s   %.8g" % (m, sign, "%g" % log2a, a))
print()
print("  m = 2, 4, 6 come from the subsets {1}, {2}, {1, 2} of circle")
print("  indices; odd m never decomposes, so every odd coefficient is 0")
print()

# derivative form: c_m = m! * a_m, still in log form to dodge overflow
sign, log_c = stream.derivative_at_zero(64)
print("64th derivative of f at 0: sign %+d, log|c| = %.4f" % (sign, log_c))
print()

# the evaluator only serves |s| >= 2.5: that is where the inversion
# contours live, and the refusal disc keeps misuse loud
g = BorelEvaluator()
print("the Borel sum g(s) on the positive axis")
print("   s      g(s)")
for s in (2.5, 3.0, 4.0, 5.0, 6.0, 8.0):
    print("  %5.1f   %+.12f" % (s, g(complex(s, 0.0)).real))
print()

print("term size envelope at |s| = 8 (log of m-th term magnitude)")
for m in (2, 6, 16, 64, 256):
    print("  m = %3d   envelope = %9.2f" % (m, term_envelope(m, math.log(8.0))))
print("  the envelope peaks early and then collapses factorially, so a")
print("  few hundred terms give full double precision at any useful |s|")
