"""Signatures, signature profiles, branched covers, satellite identities."""

import random
from fractions import Fraction

import pytest

from satgenus.errors import MultiComponent, NotRegular, OmegaIsOne
from satgenus.exactalg import UnitCirclePoint
from satgenus.invariants import (
    branched_cover_homology,
    homology_order_oracle,
    litherland_homology_check,
    litherland_signature_check,
    signature_at,
    signature_profile,
)
from satgenus.randomgen import (
    random_certified_companion,
    random_certified_pattern,
    random_knot_matrix,
)
from satgenus.satellite import Pattern, satellite_matrix
from satgenus.seifert import AbelianGroup, SeifertMatrix, TrivialBlockCertificate

F = Fraction

TREFOIL = SeifertMatrix([[-1, 1], [0, -1]], name="trefoil")
FIGURE8 = SeifertMatrix([[1, 1], [0, -1]], name="figure8")
T25 = SeifertMatrix(
    [[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]], name="torus_2_5"
)
UNKNOT = SeifertMatrix([])


class TestSignatureAt:
    def test_trefoil_at_minus_one(self):
        assert signature_at(TREFOIL, UnitCirclePoint.minus_one()) == -2

    def test_figure8_at_i(self):
        assert signature_at(FIGURE8, UnitCirclePoint.from_param(1)) == 0

    def test_empty_matrix(self):
        assert signature_at(UNKNOT, UnitCirclePoint.from_param(2)) == 0

    def test_omega_one_rejected(self):
        with pytest.raises(OmegaIsOne):
            signature_at(TREFOIL, UnitCirclePoint.one())

    def test_rational_parameters_always_regular(self):
        # Delta(1) = +-1 for knots, while the primitive integer quadratic
        # with root omega(p/q) takes the value 4p^2 or 2p^2 at t = 1, so no
        # rational parameter point is ever an Alexander root of a valid
        # knot matrix; the exact regularity guard must therefore pass on
        # every rational sample.
        rng = random.Random(211)
        from satgenus.seifert import alexander

        for _ in range(20):
            v = random_knot_matrix(rng, rng.randint(1, 3))
            d = alexander(v)
            for s in (1, 2, F(1, 2), F(3, 5), 7):
                assert d.eval_gaussian(UnitCirclePoint.from_param(s)) != (F(0), F(0))
        assert issubclass(NotRegular, Exception)

    def test_multicomponent_rejected(self):
        with pytest.raises(MultiComponent):
            signature_at(SeifertMatrix([[0]], components=2), UnitCirclePoint.minus_one())

    def test_signatures_are_even(self):
        rng = random.Random(97)
        samples = [UnitCirclePoint.from_param(s) for s in (1, 2, F(1, 2), 3)]
        samples.append(UnitCirclePoint.minus_one())
        for _ in range(30):
            v = random_knot_matrix(rng, rng.randint(0, 3))
            from satgenus.seifert import alexander

            d = alexander(v)
            for omega in samples:
                if d.eval_gaussian(omega) == (F(0), F(0)):
                    continue
                assert signature_at(v, omega) % 2 == 0


class TestSignatureProfile:
    def test_trefoil(self):
        prof = signature_profile(TREFOIL)
        assert [a.value for a in prof.arcs] == [0, -2]
        assert prof.max_abs == 2
        assert len(prof.jumps) == 1
        # jump at z = 1 (theta = pi/3)
        lo, hi = prof.jumps[0].z_low, prof.jumps[0].z_high
        assert lo < 1 <= hi

    def test_figure8_single_arc(self):
        prof = signature_profile(FIGURE8)
        assert [a.value for a in prof.arcs] == [0]
        assert prof.max_abs == 0

    def test_torus_2_5(self):
        prof = signature_profile(T25)
        assert [a.value for a in prof.arcs] == [0, -2, -4]
        assert prof.max_abs == 4

    def test_first_arc_value_is_zero(self):
        rng = random.Random(101)
        for _ in range(25):
            v = random_knot_matrix(rng, rng.randint(0, 3))
            prof = signature_profile(v)
            assert prof.arcs[0].value == 0

    def test_arc_constancy_resampled(self):
        # three fresh samples inside each arc must reproduce the arc value
        from satgenus.invariants import _param_for_z_gap

        rng = random.Random(103)
        for _ in range(10):
            v = random_knot_matrix(rng, rng.randint(1, 2))
            prof = signature_profile(v)
            for arc in prof.arcs:
                z_lo = arc.upper.z_high if arc.upper else F(-2)
                z_hi = arc.lower.z_low if arc.lower else F(2)
                assert z_lo < z_hi
                width = z_hi - z_lo
                for k in range(3):
                    a = z_lo + width * k / 3
                    b = z_lo + width * (k + 1) / 3
                    s = _param_for_z_gap(a, b)
                    assert signature_at(v, UnitCirclePoint.from_param(s)) == arc.value


class TestBranchedCovers:
    def test_named_groups(self):
        assert branched_cover_homology(TREFOIL, 2) == AbelianGroup((3,))
        assert branched_cover_homology(FIGURE8, 2) == AbelianGroup((5,))
        assert branched_cover_homology(TREFOIL, 3) == AbelianGroup((2, 2))

    def test_oracle_examples(self):
        assert homology_order_oracle(TREFOIL, 2) == 3
        assert homology_order_oracle(FIGURE8, 2) == 5
        assert homology_order_oracle(UNKNOT, 5) == 1

    def test_infinite_homology_detected(self):
        # Delta(trefoil) vanishes at the primitive sixth roots of unity
        assert homology_order_oracle(TREFOIL, 6) == 0
        group = branched_cover_homology(TREFOIL, 6)
        assert group.free_rank > 0 and group.order() == 0

    def test_order_matches_oracle_random(self):
        rng = random.Random(107)
        for _ in range(25):
            v = random_knot_matrix(rng, rng.randint(0, 2))
            for n in (2, 3, 5):
                assert branched_cover_homology(v, n).order() == homology_order_oracle(v, n)

    def test_requires_knot(self):
        with pytest.raises(MultiComponent):
            branched_cover_homology(SeifertMatrix([[0]], components=2), 2)


class TestLitherlandSignature:
    SAMPLES = tuple(
        [UnitCirclePoint.from_param(s) for s in (1, 2, F(1, 2), 3, F(2, 3))]
        + [UnitCirclePoint.minus_one()]
    )

    def test_c21_trefoil(self):
        p = Pattern(SeifertMatrix([]), 2, TrivialBlockCertificate.identity(0, 0))
        rep = litherland_signature_check(p, TREFOIL, self.SAMPLES)
        assert rep.passed and rep.checked >= 5

    def test_w0_reduces_to_pattern(self):
        p = Pattern(TREFOIL, 0)
        rep = litherland_signature_check(p, FIGURE8, self.SAMPLES)
        assert rep.passed
        for s in rep.samples:
            if s.status == "ok":
                assert s.companion_value == 0

    def test_w1_unknot_pattern(self):
        p = Pattern(SeifertMatrix([]), 1)
        rep = litherland_signature_check(p, TREFOIL, self.SAMPLES)
        assert rep.passed
        for s in rep.samples:
            if s.status == "ok":
                assert s.satellite_value == s.companion_value

    def test_random_pairs(self):
        rng = random.Random(109)
        for _ in range(10):
            pattern = random_certified_pattern(rng, max_half=2, max_winding=4,
                                               allow_multicomponent=False)
            companion, _ = random_certified_companion(rng, max_half=2)
            rep = litherland_signature_check(pattern, companion, self.SAMPLES)
            assert rep.passed


class TestLitherlandHomology:
    def test_c21_trefoil_covers(self):
        p = Pattern(SeifertMatrix([]), 2, TrivialBlockCertificate.identity(0, 0))
        for n, expect in ((2, AbelianGroup.trivial()), (3, AbelianGroup((2, 2)))):
            rep = litherland_homology_check(p, TREFOIL, n)
            assert rep.passed
            assert rep.satellite_group == expect

    def test_w1_direct_sum(self):
        p = Pattern(TREFOIL, 1)
        rep = litherland_homology_check(p, FIGURE8, 2)
        assert rep.passed
        assert rep.satellite_group == AbelianGroup((15,))

    def test_generator_counts_match(self):
        rng = random.Random(113)
        for _ in range(10):
            pattern = random_certified_pattern(rng, max_half=2, max_winding=4,
                                               allow_multicomponent=False)
            companion, _ = random_certified_companion(rng, max_half=2)
            n = rng.choice((2, 3, 4))
            rep = litherland_homology_check(pattern, companion, n)
            assert rep.passed
            assert rep.satellite_group.min_generators == rep.combined.min_generators


class TestProfileCertificateConsistency:
    def test_signature_bound_below_certificate_bound(self):
        rng = random.Random(127)
        from satgenus.bounds import galg_upper
        from satgenus.satellite import satellite_certificate

        for _ in range(15):
            pattern = random_certified_pattern(rng, max_half=2, max_winding=3,
                                               allow_multicomponent=False)
            companion, kc = random_certified_companion(rng, max_half=2)
            sat = satellite_matrix(pattern, companion)
            cert = satellite_certificate(pattern, companion, kc)
            prof = signature_profile(sat)
            assert Fraction(prof.max_abs, 2) <= galg_upper(sat, cert)
