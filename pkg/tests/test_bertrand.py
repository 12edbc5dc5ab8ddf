"""Normal-offset mates: construction, verification, failure modes."""

from __future__ import annotations

import pytest

from pg_curvelab.algebra import pg_dot
from pg_curvelab.bertrand import (
    BertrandNature,
    bertrand_mate,
    bertrand_nature,
    verify_bertrand_pair,
)
from pg_curvelab.curves import JetKind, make_sampled_curve
from pg_curvelab.equiform import equiform_data
from pg_curvelab.errors import MateInadmissibleError
from pg_curvelab.frenet import frenet_data


class TestExactMate:
    def test_mate_metadata(self, helix_fixture):
        mate = bertrand_mate(helix_fixture.curve, 1.0)
        assert mate.kind is JetKind.ANALYTIC
        assert mate.max_order == 6
        assert mate.domain == helix_fixture.curve.domain

    def test_mate_stays_in_arclength_form(self, helix_fixture):
        mate = bertrand_mate(helix_fixture.curve, 2.0)
        for s in (-0.7, 0.0, 0.4):
            assert mate.jet(s, 0).x1 == s
            assert mate.jet(s, 1).x1 == 1.0
            assert mate.jet(s, 2).x1 == 0.0

    def test_mate_invariants(self, helix_fixture):
        # offset 1 against curvature 1, torsion 1 doubles the curvature
        # radius direction: the mate has kappa 2, tau 1
        mate = bertrand_mate(helix_fixture.curve, 1.0)
        f = frenet_data(mate, 0.3)
        assert f.kappa == pytest.approx(2.0, rel=1e-13)
        assert f.tau == pytest.approx(1.0, rel=1e-13)

    def test_tangent_scalar_product_is_constant(self, helix_fixture):
        base = helix_fixture.curve
        mate = bertrand_mate(base, 1.0)
        values = [pg_dot(equiform_data(mate, s).tangent,
                         equiform_data(base, s).tangent)
                  for s in (-0.8, -0.2, 0.1, 0.6)]
        assert values == pytest.approx([0.5] * 4, rel=1e-13)

    def test_mate_of_mate_returns_to_base(self, helix_fixture):
        base = helix_fixture.curve
        mate = bertrand_mate(base, 1.0)
        back = bertrand_mate(mate, -2.0)
        for s in (-0.6, 0.0, 0.5):
            defect = (back.position(s) - base.position(s)).max_abs()
            assert defect <= 1e-13

    def test_flattening_offset_is_rejected(self, helix_fixture):
        with pytest.raises(MateInadmissibleError, match="inadmissible mate"):
            bertrand_mate(helix_fixture.curve, -1.0)


class TestVerification:
    @pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
    def test_helix_offsets_verify(self, helix_fixture, uniform, lam):
        base = helix_fixture.curve
        mate = bertrand_mate(base, lam)
        pair = verify_bertrand_pair(base, mate, lam, uniform(-0.9, 0.9, 11))
        assert pair.is_pair
        assert pair.failures == ()
        assert pair.nature is BertrandNature.CIRCULAR_HELIX
        assert pair.offset == pytest.approx(lam, rel=1e-12)
        assert pair.offset_spread <= 1e-10
        assert pair.normal_parallel_sup <= 1e-10
        assert pair.tangent_product_spread <= 1e-12

    def test_parabola_offsets_verify(self, parabola, uniform):
        base = parabola.curve
        mate = bertrand_mate(base, 0.7)
        pair = verify_bertrand_pair(base, mate, 0.7, uniform(-0.9, 0.9, 11))
        assert pair.is_pair
        assert pair.nature is BertrandNature.ISOTROPIC_CIRCLE
        assert pair.offset == 0.7
        assert pair.offset_spread == 0.0

    def test_non_constant_claim_fails(self, helix_fixture, uniform):
        base = helix_fixture.curve
        mate = bertrand_mate(base, 1.0)
        pair = verify_bertrand_pair(base, mate, lambda s: s,
                                    uniform(-0.9, 0.9, 11))
        assert not pair.is_pair
        assert any("not constant" in f for f in pair.failures)
        assert any("differs from the recovered" in f for f in pair.failures)

    def test_wrong_constant_claim_fails(self, helix_fixture, uniform):
        base = helix_fixture.curve
        mate = bertrand_mate(base, 1.0)
        pair = verify_bertrand_pair(base, mate, 2.0, uniform(-0.9, 0.9, 11))
        assert not pair.is_pair
        assert pair.failures == (
            "claimed offset differs from the recovered 1",)

    def test_varying_curvature_admits_no_mates(self, general_helix, uniform):
        base = general_helix.curve
        mate = bertrand_mate(base, 1.0)
        pair = verify_bertrand_pair(base, mate, 1.0, uniform(0.2, 1.8, 11))
        assert not pair.is_pair
        assert "equiform curvature reaches" in pair.failures[0]
        assert pair.nature is BertrandNature.NOT_BERTRAND

    def test_short_grid_rejected(self, helix_fixture):
        base = helix_fixture.curve
        mate = bertrand_mate(base, 1.0)
        with pytest.raises(ValueError, match="at least 5"):
            verify_bertrand_pair(base, mate, 1.0, [0.0, 0.1, 0.2, 0.3])


class TestNature:
    def test_catalogue_natures(self, helix_fixture, parabola, general_helix,
                               uniform):
        assert bertrand_nature(helix_fixture.curve, uniform(-0.9, 0.9, 11)) \
            is BertrandNature.CIRCULAR_HELIX
        assert bertrand_nature(parabola.curve, uniform(-0.9, 0.9, 11)) \
            is BertrandNature.ISOTROPIC_CIRCLE
        assert bertrand_nature(general_helix.curve, uniform(0.2, 1.8, 11)) \
            is BertrandNature.NOT_BERTRAND


class TestFiniteDifferenceFallback:
    def test_low_order_base_gets_difference_jets(self, helix_fixture, uniform):
        base = make_sampled_curve(lambda s: helix_fixture.curve.jet(s, 0),
                                  (-0.9, 0.9))
        mate = bertrand_mate(base, 1.0)
        assert mate.kind is JetKind.FINITE_DIFFERENCE
        assert mate.max_order == 4
        assert any("finite differences" in w for w in mate.warnings)
        lo, hi = mate.domain
        assert -0.9 < lo < hi < 0.9

        pair = verify_bertrand_pair(base, mate, 1.0, uniform(-0.85, 0.85, 11),
                                    tol=1e-4)
        assert pair.is_pair
        assert pair.offset == pytest.approx(1.0, rel=1e-4)

        strict = verify_bertrand_pair(base, mate, 1.0,
                                      uniform(-0.85, 0.85, 11))
        assert not strict.is_pair
        assert any("equiform curvature" in f for f in strict.failures)
