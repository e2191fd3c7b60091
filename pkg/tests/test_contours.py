"""Tests for contour geometry, adaptive quadrature, and the three transforms."""
import cmath
import math

import numpy as np
import pytest

from expgrowth.borel import BorelEvaluator
from expgrowth.contours import (
    CancellationCapError,
    CirclePath,
    Contour,
    F_eval,
    IntegralResult,
    LineSegment,
    NonConvergenceError,
    QuadratureSpec,
    SpiralArc,
    _refinement_value,
    borel_inversion,
    closed_loop,
    closing_segment,
    integrate,
    spiral_arc,
    splitting_profile,
    u_decay_bound,
    u_eval,
    write_borel_check_csv,
    write_identity_csv,
)
from expgrowth.lattice import ZeroLattice
from expgrowth.product import ProductEvaluator

# magnitude of the bounded piece at the origin, frozen from a 50-digit
# quadrature of the transform over the axis segment
ABS_U_AT_0 = 0.04384139741316833


@pytest.fixture(scope="module")
def ev():
    return ProductEvaluator(ZeroLattice(k_max=14))


@pytest.fixture(scope="module")
def g():
    return BorelEvaluator()


class TestSegments:
    def test_arc_endpoints_exact(self):
        arc = spiral_arc()
        assert arc.point(0.0) == -4.0 + 0.0j
        assert arc.point(1.0) == -3.0 + 0.0j
        assert arc.point(0.5) == 3.5 + 0.0j  # halfway: angle 0, radius 3.5

    def test_segment_endpoints(self):
        seg = closing_segment()
        assert seg.point(0.0) == -3.0 + 0.0j
        assert seg.point(1.0) == -4.0 + 0.0j
        assert seg.dpoint(0.3) == -1.0 + 0.0j

    def test_circle_geometry(self):
        c = CirclePath(0.0j, 4.0)
        assert c.point(0.0) == 4.0 + 0.0j
        assert c.point(0.25) == pytest.approx(4.0j, abs=1e-15)
        assert c.modulus_range() == (4.0, 4.0)

    def test_paths_too_close_to_origin_rejected(self):
        with pytest.raises(ValueError):
            CirclePath(0.0j, 2.0)
        with pytest.raises(ValueError):
            SpiralArc(4.0, 2.0, -math.pi, math.pi)
        with pytest.raises(ValueError):
            LineSegment(-3.0 - 1.0j, 3.0 - 1.0j)  # passes at distance 1

    def test_degenerate(self):
        with pytest.raises(ValueError):
            LineSegment(-3.0 + 0.0j, -3.0 + 0.0j)
        with pytest.raises(ValueError):
            CirclePath(0.0j, 4.0, turns=0)

    def test_segment_modulus_range_interior_minimum(self):
        seg = LineSegment(-4.0 + 3.0j, 4.0 + 3.0j)
        lo, hi = seg.modulus_range()
        assert lo == pytest.approx(3.0)
        assert hi == pytest.approx(5.0)


class TestContour:
    def test_loop_closes_and_winds_once(self):
        loop = closed_loop()
        assert loop.winding_number() == 1
        assert len(loop.segments) == 2

    def test_seam_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Contour((spiral_arc(), LineSegment(-3.5 + 0.0j, -4.0 + 0.0j)))

    def test_clockwise_rejected(self):
        with pytest.raises(ValueError):
            Contour((CirclePath(0.0j, 4.0, turns=-1),), closed=True)

    def test_open_chain_allowed(self):
        c = Contour((spiral_arc(),), closed=False)
        assert c.winding_number() == 1


class TestQuadratureSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(rule="simpson")
        with pytest.raises(ValueError):
            QuadratureSpec(target_rel_tol=1e-14)
        with pytest.raises(ValueError):
            QuadratureSpec(initial_panels=0)
        with pytest.raises(ValueError):
            QuadratureSpec(cancellation_cap=0.0)


class TestResidues:
    def test_simple_pole(self):
        out = integrate(lambda s: 1.0 / s, CirclePath(0.0j, 4.0), 0.0)
        assert isinstance(out, IntegralResult)
        assert abs(out.value - 1.0) <= 1e-12

    def test_double_pole_picks_linear_term(self):
        out = integrate(lambda s: 1.0 / s**2, CirclePath(0.0j, 4.0), 3.0)
        assert abs(out.value - 3.0) <= 1e-9

    def test_entire_integrand_vanishes(self):
        out = integrate(lambda s: 1.0, CirclePath(0.0j, 4.0), 2.0)
        assert abs(out.value) <= 1e-12


class TestInversion:
    def test_at_origin(self):
        assert abs(borel_inversion(0.0) - 1.0) <= 1e-10

    def test_at_first_zero(self):
        assert abs(borel_inversion(2.0)) <= 1e-8

    def test_matches_product(self, ev):
        for z in (1.0, 1.0 + 1.0j, -2.5j, 3.0 - 1.0j):
            want = ev.eval_log_f(z).to_complex()
            got = borel_inversion(z)
            assert abs(got - want) <= 1e-8 * (1.0 + abs(want))

    def test_deformation_invariance(self):
        for z in (1.0 + 1.0j, 2.5, 3.0j):
            base = borel_inversion(z, 4.0)
            for radius in (3.0, 5.0, 6.0):
                other = borel_inversion(z, radius)
                assert abs(other - base) <= 1e-8 * max(abs(base), 1e-3)

    def test_radius_validation(self):
        with pytest.raises(ValueError):
            borel_inversion(1.0, 2.4)
        with pytest.raises(ValueError):
            borel_inversion(1.0, 8.5)


class TestBoundedPiece:
    def test_origin_value(self):
        u0 = u_eval(0.0)
        assert u0.real == 0.0  # real integrand on a real path
        assert u0.imag == pytest.approx(-ABS_U_AT_0, abs=1e-12)
        assert abs(u0) == pytest.approx(ABS_U_AT_0, abs=1e-12)

    def test_decay_bound(self):
        for x in range(1, 11):
            assert abs(u_eval(float(x))) <= u_decay_bound(x) * (1.0 + 1e-6)

    def test_anti_conjugation(self):
        # the segment integral T satisfies T(conj z) = conj(T(z)), but the
        # 1/(2 pi i) normalization flips it: u(conj z) = -conj(u(z)).  Every
        # step commutes with negation bit-for-bit, so assert exact equality.
        for z in (1.0 + 2.0j, -0.5 + 4.0j, 3.0 - 1.0j, -6.0 + 1.0j):
            assert u_eval(z.conjugate()) == (-u_eval(z)).conjugate()


class TestArcTransform:
    def test_cap_refusal(self):
        with pytest.raises(CancellationCapError):
            F_eval(41.0)
        with pytest.raises(CancellationCapError):
            F_eval(30.0, QuadratureSpec(cancellation_cap=20.0))

    def test_anchor_values(self, ev):
        f1 = ev.eval_log_f(1.0).to_complex()
        assert abs(F_eval(1.0) - (f1 - u_eval(1.0))) <= 1e-8
        assert abs(F_eval(0.0) - (1.0 - u_eval(0.0))) <= 1e-9
        assert abs(F_eval(2.0) + u_eval(2.0)) <= 1e-8

    def test_splitting_identity(self, ev):
        # the identity needs absolute accuracy pinned to |f|, while F and u
        # individually reach ~2e11 near |z| = 8; drive the quadrature to its
        # floor instead of the default relative target
        spec = QuadratureSpec(target_rel_tol=1e-13)
        rng = np.random.default_rng(21)
        for _ in range(12):
            r = rng.uniform(0.0, 8.0)
            phi = rng.uniform(-math.pi, math.pi)
            z = r * complex(math.cos(phi), math.sin(phi))
            fv = ev.eval_log_f(z).to_complex()
            resid = abs(F_eval(z, spec) + u_eval(z, spec) - fv)
            assert resid <= 1e-7 * (1.0 + abs(fv))


class TestClosedLoop:
    def test_matches_circle_inversion(self, g):
        for z in (0.0, 1.5 + 0.5j, -2.0 + 1.0j):
            via_loop = integrate(g, closed_loop(), z).value
            via_circle = borel_inversion(z)
            assert abs(via_loop - via_circle) <= 1e-8 * (1.0 + abs(via_circle))


class TestRefinement:
    def test_trapezoid_geometric_decay(self, g):
        z = 1.5
        circ = CirclePath(0.0j, 3.0)
        spec = QuadratureSpec(initial_panels=1, points_per_panel=8)

        def h(s):
            return g(s) * cmath.exp(z * s)

        ref, _ = _refinement_value(h, (circ,), spec, 6)
        errs = [
            abs(_refinement_value(h, (circ,), spec, level)[0] - ref)
            for level in range(4)
        ]
        for a, b in zip(errs, errs[1:]):
            if b <= 1e-12:
                break  # roundoff floor reached
            assert b <= a / 4.0

    def test_non_convergence_carries_last_values(self):
        spec = QuadratureSpec(
            initial_panels=1,
            points_per_panel=4,
            max_refinements=1,
            target_rel_tol=1e-13,
        )
        with pytest.raises(NonConvergenceError) as info:
            integrate(lambda s: 1.0 / s, CirclePath(0.0j, 4.0), 30.0, spec)
        err = info.value
        assert err.value is not None and err.previous is not None
        assert err.value != err.previous
        assert math.isfinite(err.error)


class TestSplittingProfile:
    def test_tracks_product_away_from_zeros(self, ev):
        radii = np.array([5.0, 6.0, 10.0])
        prof = splitting_profile(ev, 0.0, radii)
        assert prof.function_id == "F"
        for r, v in zip(prof.radii, prof.values):
            f_v = ev.eval_log_f(r).log_mag / r
            assert v == pytest.approx(f_v, abs=1e-9)


class TestCsvExports:
    def test_identity_schema(self, tmp_path):
        path = tmp_path / "identity.csv"
        write_identity_csv(
            [(1.0 + 0.0j, 0.747 + 0.0j, 0.001 + 0.0j, 0.746 + 0.0j)], path
        )
        lines = path.read_text().splitlines()
        assert lines[0] == (
            "z_re,z_im,f_re,f_im,u_re,u_im,F_re,F_im,residual_abs"
        )
        assert len(lines) == 2

    def test_borel_check_schema_and_zero_direct(self, tmp_path):
        path = tmp_path / "borel_check.csv"
        write_borel_check_csv(
            [
                (1.0 + 0.0j, 0.747 + 0.0j, 0.747 + 1e-12j),
                (2.0 + 0.0j, 0.0 + 0.0j, 1e-13 + 0.0j),
            ],
            path,
        )
        lines = path.read_text().splitlines()
        assert lines[0] == (
            "z_re,z_im,direct_re,direct_im,contour_re,contour_im,abs_err,rel_err"
        )
        assert lines[2].endswith(",inf")
