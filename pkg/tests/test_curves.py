"""Curve constructors, finite-difference jets, admissibility, homothety."""

from __future__ import annotations

import math

import pytest

from pg_curvelab.algebra import PGVector
from pg_curvelab.curves import (
    CurveJet,
    JetKind,
    apply_homothety,
    check_admissibility,
    make_analytic_curve,
    make_sampled_curve,
)
from pg_curvelab.errors import (
    EmptyDomainError,
    EmptyGridError,
    JetOrderError,
    NarrowDomainError,
    StepTooSmallError,
)


def cubic_jets():
    """Jets of (s, s^3/6, s^2/2) as analytic derivative functions."""
    return (
        lambda s: PGVector(s, s ** 3 / 6.0, 0.5 * s * s),
        lambda s: PGVector(1.0, 0.5 * s * s, s),
        lambda s: PGVector(0.0, s, 1.0),
        lambda s: PGVector(0.0, 1.0, 0.0),
        lambda s: PGVector(0.0, 0.0, 0.0),
    )


class TestCurveJet:
    def test_basic_evaluation_and_span(self):
        c = make_analytic_curve(*cubic_jets(), domain=(0.0, 2.0))
        assert c.kind is JetKind.ANALYTIC
        assert c.max_order == 4
        assert c.span == 2.0
        assert c.jet(1.0, 2).as_tuple() == (0.0, 1.0, 1.0)
        assert c.position(0.5).as_tuple() == (0.5, 0.5 ** 3 / 6.0, 0.125)

    def test_order_out_of_range(self):
        c = make_analytic_curve(*cubic_jets(), domain=(0.0, 2.0))
        with pytest.raises(JetOrderError, match="orders 0..4"):
            c.jet(1.0, 5)
        with pytest.raises(JetOrderError):
            c.jet(1.0, -1)

    def test_domain_check_has_small_slack(self):
        c = make_analytic_curve(*cubic_jets(), domain=(0.0, 2.0))
        # 1e-9-scale slack absorbs endpoint rounding from grid arithmetic
        assert c.jet(2.0 + 5e-10, 0).x1 == pytest.approx(2.0)
        with pytest.raises(ValueError, match="outside domain"):
            c.jet(2.0 + 1e-7, 0)
        with pytest.raises(ValueError, match="outside domain"):
            c.jet(-1.0, 0)

    def test_immutable(self):
        c = make_analytic_curve(*cubic_jets(), domain=(0.0, 2.0))
        with pytest.raises(AttributeError, match="immutable"):
            c.max_order = 7

    def test_empty_domain_rejected(self):
        with pytest.raises(EmptyDomainError):
            CurveJet(lambda s, k: PGVector(s, 0.0, 0.0), (1.0, 1.0),
                     JetKind.ANALYTIC)


class TestAnalyticConstructor:
    def test_x_offset_is_normalized_away(self):
        fns = list(cubic_jets())
        shifted = lambda s: PGVector(s + 5.0, s ** 3 / 6.0, 0.5 * s * s)
        c = make_analytic_curve(shifted, *fns[1:], domain=(0.0, 2.0))
        assert c.position(0.75).x1 == 0.75
        assert c.warnings == ()

    def test_consistent_jets_produce_no_warnings(self):
        c = make_analytic_curve(*cubic_jets(), domain=(0.0, 2.0))
        assert c.warnings == ()

    def test_non_arclength_position_warns(self):
        fns = list(cubic_jets())
        stretched = lambda s: PGVector(2.0 * s, s ** 3 / 6.0, 0.5 * s * s)
        c = make_analytic_curve(stretched, *fns[1:], domain=(0.0, 2.0))
        assert any("differs from s" in w for w in c.warnings)

    def test_inconsistent_derivative_warns_but_builds(self):
        fns = list(cubic_jets())
        fns[2] = lambda s: PGVector(0.0, -s, 1.0)       # wrong sign
        c = make_analytic_curve(*fns, domain=(0.0, 2.0))
        assert any("order-2" in w for w in c.warnings)
        # warnings are diagnostics, not errors: evaluation still works
        assert c.jet(1.0, 2).x2 == -1.0

    def test_higher_order_jets_extend_max_order(self):
        fns = list(cubic_jets())
        c = make_analytic_curve(*fns, domain=(0.0, 2.0),
                                higher=[lambda s: PGVector(0.0, 0.0, 0.0)])
        assert c.max_order == 5
        assert c.jet(1.0, 5).as_tuple() == (0.0, 0.0, 0.0)


class TestSampledConstructor:
    def test_degree_five_polynomial_jets_are_exact(self):
        # the Richardson-combined stencils annihilate polynomials up to
        # degree 5, so only round-off is left at a dyadic step
        def position(s):
            return PGVector(s, s ** 5 / 40.0 + s ** 3 / 6.0, 0.5 * s * s)

        c = make_sampled_curve(position, (-1.0, 1.0), h=0.25)
        s = 0.25
        expected = [
            (1.0, s ** 4 / 8.0 + 0.5 * s * s, s),
            (0.0, 0.5 * s ** 3 + s, 1.0),
            (0.0, 1.5 * s * s + 1.0, 0.0),
            (0.0, 3.0 * s, 0.0),
        ]
        for order, exp in enumerate(expected, start=1):
            got = c.jet(s, order)
            assert got.as_tuple() == pytest.approx(exp, abs=1e-9)

    def test_default_step_tracks_analytic_invariants(self, general_helix):
        from pg_curvelab.frenet import frenet_data

        samp = make_sampled_curve(lambda s: general_helix.curve.jet(s, 0),
                                  (0.2, 1.8))
        assert samp.kind is JetKind.FINITE_DIFFERENCE
        for i in range(9):
            s = 0.3 + 0.15 * i
            f = frenet_data(samp, s)
            assert f.kappa == pytest.approx(general_helix.oracle.kappa(s),
                                            abs=1e-7)
            assert f.tau == pytest.approx(general_helix.oracle.tau(s),
                                          abs=1e-7)

    def test_probes_only_the_left_endpoint_during_construction(self):
        calls: list[float] = []

        def position(s):
            calls.append(s)
            return PGVector(s + 3.0, 0.5 * s * s, 0.0)

        c = make_sampled_curve(position, (0.0, 1.0), h=0.1)
        assert calls == [0.0]
        assert c.position(0.5).x1 == 0.5      # the x-offset was removed

    def test_step_below_roundoff_guard(self):
        with pytest.raises(StepTooSmallError):
            make_sampled_curve(lambda s: PGVector(s, 0.0, 0.0), (0.0, 1.0),
                               h=1e-15)

    def test_domain_too_short_for_stencils(self):
        with pytest.raises(NarrowDomainError):
            make_sampled_curve(lambda s: PGVector(s, 0.0, 0.0), (0.0, 0.1),
                               h=0.05)

    def test_max_order_bounds(self):
        for bad in (0, 5):
            with pytest.raises(JetOrderError):
                make_sampled_curve(lambda s: PGVector(s, 0.0, 0.0),
                                   (0.0, 1.0), max_order=bad)

    def test_reduced_max_order_is_enforced(self):
        c = make_sampled_curve(lambda s: PGVector(s, 0.5 * s * s, 0.0),
                               (0.0, 1.0), h=0.05, max_order=2)
        assert c.max_order == 2
        with pytest.raises(JetOrderError):
            c.jet(0.5, 3)


class TestAdmissibility:
    def test_catalogue_curve_is_admissible(self, general_helix, uniform):
        lo, hi = general_helix.domain
        report = check_admissibility(general_helix.curve, uniform(lo, hi, 50))
        assert report.admissible
        assert report.failing_params == ()
        assert report.worst_inflection_margin > 1e-3
        assert report.worst_lightlike_margin > 1e-5

    def test_lightlike_acceleration_fails(self):
        # y'' = z'' everywhere puts the normal direction on the light cone
        c = make_analytic_curve(
            lambda s: PGVector(s, math.exp(s), math.exp(s)),
            lambda s: PGVector(1.0, math.exp(s), math.exp(s)),
            lambda s: PGVector(0.0, math.exp(s), math.exp(s)),
            lambda s: PGVector(0.0, math.exp(s), math.exp(s)),
            lambda s: PGVector(0.0, math.exp(s), math.exp(s)),
            domain=(0.0, 1.0))
        report = check_admissibility(c, [0.25, 0.5, 0.75])
        assert not report.admissible
        assert report.worst_lightlike_margin == 0.0
        assert report.failing_params == (0.25, 0.5, 0.75)

    def test_straight_line_fails_inflection(self):
        c = CurveJet(
            lambda s, k: PGVector(s, 0.0, 0.0) if k == 0 else
            PGVector(1.0 if k == 1 else 0.0, 0.0, 0.0),
            (0.0, 1.0), JetKind.ANALYTIC)
        report = check_admissibility(c, [0.5])
        assert not report.admissible
        assert report.worst_inflection_margin == 0.0

    def test_empty_grid_rejected(self, general_helix):
        with pytest.raises(EmptyGridError):
            check_admissibility(general_helix.curve, [])


class TestHomothety:
    def test_factor_must_be_positive(self, parabola):
        for mu in (0.0, -2.0):
            with pytest.raises(ValueError, match="positive"):
                apply_homothety(parabola.curve, mu)

    def test_domain_and_metadata_scale(self, parabola):
        big = apply_homothety(parabola.curve, 2.0)
        lo, hi = parabola.curve.domain
        assert big.domain == (2.0 * lo, 2.0 * hi)
        assert big.kind is parabola.curve.kind
        assert big.max_order == parabola.curve.max_order

    def test_curvature_scales_inversely(self, parabola):
        from pg_curvelab.frenet import frenet_data

        # with mu = 2 every float in the jet rescaling is a power of two,
        # so the scaled curvature is exact
        big = apply_homothety(parabola.curve, 2.0)
        assert frenet_data(big, 1.0).kappa == 0.5

    def test_position_scales(self, helix_fixture):
        big = apply_homothety(helix_fixture.curve, 2.0)
        p = helix_fixture.curve.position(0.5)
        q = big.position(1.0)
        assert q.as_tuple() == (2.0 * p.x1, 2.0 * p.x2, 2.0 * p.x3)
