"""Certificate search, bound aggregation, and the closed-form tables."""

import random
from fractions import Fraction

import pytest

from satgenus.bounds import (
    bounds_report,
    cable2q_table,
    galg_upper,
    iterated_cable_arithmetic,
    satellite_bounds,
    schubert_g3,
    search_trivial_block,
)
from satgenus.errors import CertificateInvalid, EvenParameter
from satgenus.randomgen import random_unimodular_ops
from satgenus.satellite import Pattern
from satgenus.seifert import SeifertMatrix, TrivialBlockCertificate, congruence, stabilize

F = Fraction

TREFOIL = SeifertMatrix([[-1, 1], [0, -1]], name="trefoil")
FIGURE8 = SeifertMatrix([[1, 1], [0, -1]], name="figure8")
STAB_UNKNOT = SeifertMatrix([[0, 1], [0, 0]])


class TestGalgUpper:
    def test_trefoil_empty_certificate(self):
        assert galg_upper(TREFOIL, TrivialBlockCertificate.identity(2, 0)) == 1

    def test_stabilized_unknot_full(self):
        assert galg_upper(STAB_UNKNOT, TrivialBlockCertificate.identity(2, 2)) == 0

    def test_invalid_certificate(self):
        with pytest.raises(CertificateInvalid):
            galg_upper(TREFOIL, TrivialBlockCertificate.identity(2, 2))


class TestSearch:
    def test_stabilized_unknot_full_block(self):
        cert = search_trivial_block(STAB_UNKNOT)
        assert cert.block_size == 2

    def test_trefoil_no_block(self):
        cert = search_trivial_block(TREFOIL)
        assert cert.block_size == 0

    def test_recovers_scrambled_stabilization(self):
        rng = random.Random(131)
        base = stabilize(FIGURE8, [0, 0], 1, "upper")
        # reorder so the stabilization block leads, then scramble lightly
        perm = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
        led = congruence(base, perm)
        scramble = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]]
        v = congruence(led, scramble)
        cert = search_trivial_block(v, max_depth=2, max_coeff=1)
        assert cert.block_size >= 2
        cert.verify(v)

    def test_monotone_in_depth(self):
        rng = random.Random(137)
        for _ in range(6):
            v = congruence(
                stabilize(TREFOIL, [1, -1], 0, "lower"),
                random_unimodular_ops(rng, 4, ops=2, max_coeff=1)[0],
            )
            sizes = [search_trivial_block(v, max_depth=d, max_coeff=1).block_size for d in (0, 1, 2)]
            assert sizes == sorted(sizes)

    def test_always_verifies(self):
        rng = random.Random(139)
        from satgenus.randomgen import random_knot_matrix

        for _ in range(10):
            v = random_knot_matrix(rng, rng.randint(1, 2))
            cert = search_trivial_block(v, max_depth=1)
            cert.verify(v)


class TestBoundsReport:
    def test_trefoil(self):
        rep = bounds_report(TREFOIL, g3_hint=1)
        assert rep.interval("g4top") == (1, 1)
        assert rep.interval("gZ") == (1, 1)

    def test_figure8(self):
        rep = bounds_report(FIGURE8, g3_hint=1)
        assert rep.interval("g4top") == (0, 1)
        assert rep.interval("gZ") == (1, 1)

    def test_unknot(self):
        rep = bounds_report(SeifertMatrix([]), g3_hint=0)
        for target in ("g4top", "gZ", "galg", "g3"):
            assert rep.interval(target) == (0, 0)

    def test_trivial_alexander_forces_zero(self):
        rep = bounds_report(STAB_UNKNOT)
        assert rep.interval("gZ") == (0, 0)
        assert rep.interval("g4top") == (0, 0)

    def test_provenance_every_bound_recorded(self):
        rep = bounds_report(TREFOIL, g3_hint=1)
        sources = {r.source for r in rep.provenance}
        assert {"signature-profile", "double-cover-generators",
                "determinant-degree", "trivial-block-certificate"} <= sources

    def test_soundness_sandwich_catalog(self):
        from satgenus import catalog

        for kf in catalog.all_knots():
            rep = bounds_report(kf.seifert_matrix, certificate=kf.certificate(),
                                g3_hint=kf.g3_hint)
            rep.check_consistency()
            lows = [r.value for r in rep.provenance if r.side == "lower"]
            highs = [r.value for r in rep.provenance if r.side == "upper" and r.target != "g3"]
            assert all(lo <= hi for lo in lows for hi in highs)


class TestSatelliteBounds:
    def test_cable_trefoil_family(self):
        cert_t = TrivialBlockCertificate.identity(2, 0)
        for n in (2, 4):
            p = Pattern(SeifertMatrix([]), n, TrivialBlockCertificate.identity(0, 0))
            rep, _, _ = satellite_bounds(p, TREFOIL, cert_t, g3_hint_companion=1)
            assert rep.interval("g4top") == (1, 1)

    def test_c21_figure8(self):
        p = Pattern(SeifertMatrix([]), 2, TrivialBlockCertificate.identity(0, 0))
        rep, sat, cert = satellite_bounds(p, FIGURE8, TrivialBlockCertificate.identity(2, 0))
        assert rep.interval("g4top") == (0, 1)
        assert rep.interval("gZ") == (1, 1)

    def test_combination_bound_recorded(self):
        p = Pattern(TREFOIL, 1, TrivialBlockCertificate.identity(2, 0))
        rep, _, _ = satellite_bounds(p, TREFOIL, TrivialBlockCertificate.identity(2, 0))
        combo = [r for r in rep.provenance if r.source == "satellite-combination"]
        assert combo and combo[0].value == 2

    def test_lower_never_exceeds_combination(self):
        rng = random.Random(149)
        from satgenus.randomgen import random_certified_companion, random_certified_pattern

        for _ in range(10):
            pattern = random_certified_pattern(rng, max_half=2, max_winding=3,
                                               allow_multicomponent=False)
            companion, kc = random_certified_companion(rng, max_half=2)
            rep, _, _ = satellite_bounds(pattern, companion, kc)
            g1 = pattern.certificate.implied_bound(pattern.matrix)
            g2 = kc.implied_bound(companion)
            assert rep.lower("gZ") <= g1 + g2


class TestCableTable:
    def test_named_rows(self):
        rows = {(r.p, r.q): r for r in cable2q_table([3, 5, 7, 9], [5, 7])}
        assert rows[(3, 5)].g4sm == 4 and rows[(3, 5)].gz_upper == 3 and rows[(3, 5)].sig_lower == 3
        assert rows[(3, 5)].tight
        assert rows[(3, 7)].gz_upper == 4 and rows[(3, 7)].sig_lower == 4 and rows[(3, 7)].tight
        assert rows[(5, 7)].gz_upper == 5 and rows[(5, 7)].sig_lower == 4 and not rows[(5, 7)].tight

    def test_q_one_rows(self):
        rows = cable2q_table([3, 5], [1])
        for r in rows:
            assert r.tight and r.sig_lower == r.gz_upper == F(r.p - 1, 2)
            assert r.g3 == r.p - 1

    def test_tightness_equivalence_range(self):
        for r in cable2q_table(range(3, 16, 2), range(3, 16, 2)):
            crit = F(1, 2) < F(1, r.p) + F(2, r.q)
            assert r.tight == crit

    def test_even_rejected(self):
        with pytest.raises(EvenParameter):
            cable2q_table([2], [3])


class TestIteratedCables:
    def test_p3_n1(self):
        rep = iterated_cable_arithmetic(3, 1)
        assert rep.c_sequence[:2] == (3, 13)
        assert rep.g3 == 5 and rep.gz_upper == 4

    def test_p3_n2(self):
        rep = iterated_cable_arithmetic(3, 2)
        assert rep.c_sequence == (3, 13, 53)
        assert rep.g3 == 23 and rep.gz_upper == 17

    def test_closed_forms_agree_up_to_n6(self):
        for p in (3, 5, 7, 9):
            rep = iterated_cable_arithmetic(p, 6)  # raises on any mismatch
            assert all(F(2, 3) < r < 1 for r in rep.ratios)
            assert rep.ratios[-1] <= F(7, 10)

    def test_even_p_rejected(self):
        with pytest.raises(EvenParameter):
            iterated_cable_arithmetic(4, 2)


class TestSchubert:
    def test_two_cable_of_trefoil(self):
        assert schubert_g3(2, 2, 1) == 4

    def test_winding_zero(self):
        assert schubert_g3(3, 0, 5) == 3

    def test_unknotted_pattern(self):
        assert schubert_g3(0, 1, 7) == 7

    def test_negative_winding_uses_abs(self):
        assert schubert_g3(1, -2, 1) == 3
