"""
Regular or irregular growth, decided from dyadic window statistics
==================================================================

Sampling log|f(r e^(i theta))| / r over dyadic windows [2^k, 2^(k+1)) and
trimming each window to its (q, 1-q) quantile band gives a robust picture of
the growth rate.  For well behaved functions the bands shrink onto a single
limit; for f they stay wide forever because every window contains both the
near-zero dips and the 4/e crest.  The classifier turns that into a verdict.
"""
import json
import math

from expgrowth import (
    ProductEvaluator,
    ZeroLattice,
    classify,
    dyadic_radii,
    exp2_profile,
    sin2_profile,
    window_stats,
)

ev = ProductEvaluator(ZeroLattice(k_max=14))
radii = dyadic_radii(8, 14, 256)

prof = ev.profile_on(0.0, radii)
print("window quantile bands for f along theta = 0, q = 0.1")
print("   k     q_low     q_high    width")
for s in window_stats(prof, 0.1):
    print("  %2d   %8.4f   %8.4f   %6.4f" % (s.k, s.q_low, s.q_high, s.width))
print()

vf = classify(prof, q=0.1, gap_tol=0.02)
print("verdict for f:        %s (every trailing band at least %.3f wide)"
      % (vf.verdict, vf.limit_or_gap))

# controls: e^(2z) is exactly flat, sin(2z) flattens fast
vexp = classify(exp2_profile(0.0, radii))
vsin = classify(sin2_profile(math.pi / 2.0, radii))
print("verdict for e^(2z):   %s (limit %.6f)" % (vexp.verdict, vexp.limit_or_gap))
print("verdict for sin(2z):  %s (limit %.6f)" % (vsin.verdict, vsin.limit_or_gap))
print()

print("f along other directions is irregular too")
for theta in (0.3, 1.0, 2.2):
    v = classify(ev.profile_on(theta, radii), q=0.1, gap_tol=0.02)
    print("  theta = %.1f: %s, gap %.4f" % (theta, v.verdict, v.limit_or_gap))
print()

print("a verdict serializes to a small JSON document:")
doc = {
    "function_id": vf.function_id,
    "theta": vf.theta,
    "verdict": vf.verdict,
    "limit_or_gap": vf.limit_or_gap,
    "windows": [s.k for s in vf.windows],
}
print(json.dumps(doc, indent=2))
