"""Evaluation of the canonical product with zeros on the dyadic lattice.

The product collapses circle by circle: the 2^k-th roots of unity scaled by
2^k contribute jointly the single factor 1 - (z/2^k)^{2^k}, so the closed
form needs only O(log|z|) factors.  A per-zero product over materialized
lattice circles is kept as an independent cross-check oracle.  All factor
arithmetic happens in the log domain because (z/2^k)^{2^k} overflows binary64
already at moderate |z|.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .lattice import ZeroLattice
from .lognum import TAU, LogComplex, cis, lc_add, lc_mul, wrap_angle


@dataclass(frozen=True)
class GrowthProfile:
    """Samples of log|f(r e^{i theta})|/r along one ray.

    values may contain -inf where the ray hits an exact zero; consumers are
    expected to treat those samples as an exceptional set.
    """

    function_id: str
    theta: float
    radii: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        radii = np.asarray(self.radii, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "values", values)
        if radii.ndim != 1 or radii.shape != values.shape:
            raise ValueError("radii and values must be 1-d and equally long")
        if radii.size and (radii[0] <= 0.0 or np.any(np.diff(radii) <= 0.0)):
            raise ValueError("radii must be positive and strictly increasing")


def _ceil_log2(m: float) -> int:
    """Exact ceil(log2 m) for m >= 1, immune to log rounding."""
    frac, e = math.frexp(m)
    return e - 1 if frac == 0.5 else e


def dyadic_radii(k_lo: int, k_hi: int, per_window: int = 256) -> np.ndarray:
    """Geometric grid over [2^k_lo, 2^k_hi] hitting every dyadic radius exactly.

    Each window [2^k, 2^(k+1)) receives per_window samples including its left
    endpoint.  per_window must be a power of two so the log2 steps, and hence
    the window boundaries, are exact in binary64.
    """
    if k_hi <= k_lo:
        raise ValueError("need k_lo < k_hi")
    if per_window < 1 or per_window & (per_window - 1):
        raise ValueError("per_window must be a power of two")
    exps = np.linspace(k_lo, k_hi, (k_hi - k_lo) * per_window + 1)
    return np.exp2(exps)


@dataclass(frozen=True)
class ProductEvaluator:
    """Evaluates f(z) = prod_k (1 - (z/2^k)^{2^k}) for a given lattice."""

    lattice: ZeroLattice
    tail_margin: int = 6

    def __post_init__(self) -> None:
        if self.tail_margin < 0:
            raise ValueError("tail_margin must be >= 0")

    def cutoff(self, z: complex) -> int:
        """Number of closed-form factors; guarantees 2^K >= 4*max(|z|, 1).

        Every omitted factor k > K satisfies |(z/2^k)^{2^k}| <= 4^{-2^k}, so
        the truncated tail is negligible relative to machine precision.
        """
        return _ceil_log2(max(abs(z), 1.0)) + 2 + self.tail_margin

    def _is_lattice_zero(self, z: complex) -> bool:
        """Bit-exact membership test against the (possibly rotated) lattice."""
        r = abs(z)
        if not 2.0 <= r < math.inf:
            return False
        _, e = math.frexp(r)
        for k in (e - 1, e):
            if k < 1 or k > 1023:
                continue
            rk = math.ldexp(1.0, k)
            if abs(r - rk) > 4.0 * math.ulp(rk):
                continue
            n = 1 << k
            phi = cmath.phase(z) - self.lattice.rotation
            j = round(phi * n / TAU)
            # the rounded angle index can be off by one near cell boundaries
            for jj in (j - 1, j, j + 1):
                if z == self.lattice.zero(k, jj % n):
                    return True
        return False

    def eval_log_f(self, z: complex) -> LogComplex:
        """Closed-form f(z) in log form; exact -inf at lattice zeros.

        The cutoff depends only on |z|, never on lattice.k_max: the closed
        form stands in for the full infinite product.
        """
        z = complex(z)
        if z == 0:
            return LogComplex.one()
        if self._is_lattice_zero(z):
            return LogComplex.zero()
        if self.lattice.rotation != 0.0:
            z = z * cis(-self.lattice.rotation)
        out = LogComplex.one()
        for k in range(1, self.cutoff(z) + 1):
            # dividing the components by 2^k is exact, so the huge power
            # 2^k * log|w| loses no accuracy to the base
            w = complex(math.ldexp(z.real, -k), math.ldexp(z.imag, -k))
            n = 1 << k
            power = LogComplex(n * math.log(abs(w)), wrap_angle(n * cmath.phase(w)))
            out = lc_mul(out, lc_add(LogComplex.one(), power.neg()))
        return out

    def eval_log_f_direct(self, z: complex, k_cut: int) -> LogComplex:
        """Genus-0 per-zero product over circles 1..k_cut (cross-check oracle).

        No exponential convergence factors are needed: the reciprocal sum
        over each circle vanishes identically.
        """
        z = complex(z)
        mag_parts = []
        arg_parts = []
        for k in range(1, k_cut + 1):
            w = 1.0 - z / self.lattice.circle(k)
            if np.any(w == 0):
                return LogComplex.zero()
            mag_parts.append(math.fsum(np.log(np.abs(w))))
            arg_parts.append(math.fsum(np.angle(w)))
        return LogComplex(math.fsum(mag_parts), wrap_angle(math.fsum(arg_parts)))

    def growth_profile(
        self,
        theta: float,
        r_min: float,
        r_max: float,
        samples: int,
        *,
        function_id: str = "f",
    ) -> GrowthProfile:
        """log|f(r e^{i theta})|/r on a geometric radius grid."""
        if not 0.0 < r_min < r_max:
            raise ValueError("need 0 < r_min < r_max")
        if samples < 2:
            raise ValueError("need samples >= 2")
        radii = np.geomspace(r_min, r_max, samples)
        return self.profile_on(theta, radii, function_id=function_id)

    def profile_on(
        self, theta: float, radii: np.ndarray, *, function_id: str = "f"
    ) -> GrowthProfile:
        """Profile on a caller-supplied radius grid (e.g. dyadic_radii)."""
        direction = cis(theta)
        values = np.array(
            [self.eval_log_f(r * direction).log_mag / r for r in radii]
        )
        return GrowthProfile(function_id, theta, np.asarray(radii, float), values)

    def max_modulus(self, r: float, n_theta: int) -> float:
        """log M_f(r)/r estimated over n_theta equally spaced angles.

        A lower bound of the true maximum.  The fixed 0.5 rad offset keeps
        every sample angle off the lattice directions 2*pi*j/2^k (equality
        would force 1/(4*pi) to be rational), and angle sets nest whenever
        n_theta divides the finer count, making the estimate nondecreasing
        under such refinement.
        """
        if r <= 0.0:
            raise ValueError("r must be positive")
        if n_theta < 8:
            raise ValueError("need n_theta >= 8")
        best = -math.inf
        for m in range(n_theta):
            v = self.eval_log_f(r * cis(0.5 + TAU * m / n_theta)).log_mag
            if v > best:
                best = v
        return best / r


def write_profile_csv(profiles, path) -> None:
    """Export profiles as columns function_id, theta, r, value."""
    from .csvio import fmt, write_rows

    rows = []
    for p in profiles:
        for r, v in zip(p.radii, p.values):
            rows.append((p.function_id, fmt(p.theta), fmt(r), fmt(v)))
    write_rows(path, ("function_id", "theta", "r", "value"), rows)
