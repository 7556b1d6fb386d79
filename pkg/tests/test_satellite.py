"""Cable and satellite constructions and the certificate pipeline."""

import random

import pytest

from satgenus.errors import (
    MissingCertificate,
    MultiComponentCompanion,
    NegativeWinding,
)
from satgenus.exactalg import LaurentPoly, normalize_alexander
from satgenus.randomgen import (
    random_certified_companion,
    random_certified_pattern,
    random_certified_matrix,
)
from satgenus.satellite import (
    Pattern,
    cable_matrix,
    connected_sum,
    satellite_certificate,
    satellite_matrix,
)
from satgenus.seifert import (
    SeifertMatrix,
    TrivialBlockCertificate,
    alexander,
    is_alexander_trivial,
    validate,
)

TREFOIL = SeifertMatrix([[-1, 1], [0, -1]], name="trefoil")
FIGURE8 = SeifertMatrix([[1, 1], [0, -1]], name="figure8")


def empty_pattern(w):
    return Pattern(SeifertMatrix([]), w, TrivialBlockCertificate.identity(0, 0))


def zero_cert(v):
    return TrivialBlockCertificate.identity(v.size, 0)


class TestCable:
    def test_single_copy(self):
        assert cable_matrix(1, TREFOIL).entries == TREFOIL.entries

    def test_zero_copies(self):
        assert cable_matrix(0, TREFOIL).size == 0

    def test_alexander_power_identity(self):
        assert alexander(cable_matrix(2, FIGURE8)) == LaurentPoly({4: 1, 2: -3, 0: 1})

    def test_negative_rejected(self):
        with pytest.raises(NegativeWinding):
            cable_matrix(-2, TREFOIL)

    def test_multicomponent_rejected(self):
        with pytest.raises(MultiComponentCompanion):
            cable_matrix(2, SeifertMatrix([[0]], components=2))

    def test_cable_of_trivial_is_trivial(self):
        rng = random.Random(61)
        for w in range(1, 5):
            from satgenus.randomgen import random_alexander_trivial

            b = random_alexander_trivial(rng, 2)
            cab = cable_matrix(w, SeifertMatrix(b))
            assert is_alexander_trivial(cab.rows())

    def test_cable_is_valid_seifert_matrix(self):
        for w in range(0, 5):
            assert validate(cable_matrix(w, TREFOIL))


class TestSatelliteMatrix:
    def test_two_cable_of_trefoil(self):
        sat = satellite_matrix(empty_pattern(2), TREFOIL)
        assert sat.size == 4
        assert alexander(sat) == LaurentPoly({4: 1, 2: -1, 0: 1})

    def test_winding_zero_returns_pattern(self):
        p = Pattern(TREFOIL, 0)
        assert satellite_matrix(p, FIGURE8) == TREFOIL

    def test_winding_one_is_connected_sum(self):
        p = Pattern(TREFOIL, 1)
        sat = satellite_matrix(p, FIGURE8)
        expected = alexander(TREFOIL) * alexander(FIGURE8)
        assert alexander(sat) == normalize_alexander(expected)

    def test_alexander_factorization_100_random(self):
        rng = random.Random(67)
        for _ in range(100):
            pattern = random_certified_pattern(rng, max_half=3, max_winding=5)
            companion, _ = random_certified_companion(rng, max_half=3)
            w = pattern.winding
            sat = satellite_matrix(pattern, companion)
            lhs = alexander(sat)
            rhs = alexander(pattern.matrix) * alexander(companion).power_substitute(w)
            assert lhs == normalize_alexander(rhs)

    def test_components_follow_pattern(self):
        v = SeifertMatrix([[0]], components=2)
        p = Pattern(v, 2)
        assert satellite_matrix(p, TREFOIL).components == 2


class TestSatelliteCertificate:
    def test_c21_trefoil(self):
        p = empty_pattern(2)
        cert = satellite_certificate(p, TREFOIL, zero_cert(TREFOIL))
        sat = satellite_matrix(p, TREFOIL)
        assert cert.block_size == 2
        cert.verify(sat)
        assert cert.implied_bound(sat) == 1

    def test_c31_trefoil(self):
        p = empty_pattern(3)
        cert = satellite_certificate(p, TREFOIL, zero_cert(TREFOIL))
        sat = satellite_matrix(p, TREFOIL)
        assert cert.block_size == 4
        assert cert.implied_bound(sat) == 1

    def test_full_certificates_combine_to_full(self):
        rng = random.Random(71)
        pv, pc = random_certified_matrix(rng, 2, 0)  # fully trivial 4x4
        kv, kc = random_certified_matrix(rng, 1, 0)  # fully trivial 2x2
        p = Pattern(pv, 1, pc)
        cert = satellite_certificate(p, kv, kc)
        sat = satellite_matrix(p, kv)
        assert cert.block_size == sat.size
        assert cert.implied_bound(sat) == 0

    def test_missing_certificate(self):
        p = Pattern(SeifertMatrix([]), 2)
        with pytest.raises(MissingCertificate):
            satellite_certificate(p, TREFOIL, zero_cert(TREFOIL))
        with pytest.raises(MissingCertificate):
            satellite_certificate(empty_pattern(2), TREFOIL, None)

    def test_winding_zero_passthrough(self):
        p = Pattern(TREFOIL, 0, zero_cert(TREFOIL))
        cert = satellite_certificate(p, FIGURE8, zero_cert(FIGURE8))
        assert cert is p.certificate

    def test_unknot_companion(self):
        p = Pattern(TREFOIL, 3, zero_cert(TREFOIL))
        unknot = SeifertMatrix([])
        cert = satellite_certificate(p, unknot, TrivialBlockCertificate.identity(0, 0))
        cert.verify(satellite_matrix(p, unknot))

    def test_block_size_arithmetic_random(self):
        rng = random.Random(73)
        for _ in range(60):
            pattern = random_certified_pattern(rng, max_half=3, max_winding=4)
            companion, kc = random_certified_companion(rng, max_half=2)
            cert = satellite_certificate(pattern, companion, kc)
            sat = satellite_matrix(pattern, companion)
            cert.verify(sat)
            w = pattern.winding
            expected = pattern.certificate.block_size + (w - 1) * companion.size + kc.block_size
            assert cert.block_size == expected
            g1 = pattern.certificate.implied_bound(pattern.matrix)
            g2 = kc.implied_bound(companion)
            assert cert.implied_bound(sat) == g1 + g2

    def test_multicomponent_pattern(self):
        rng = random.Random(79)
        pattern = None
        while pattern is None or pattern.components != 2:
            v, c = random_certified_matrix(rng, 1, 1, components=2)
            pattern = Pattern(v, 2, c)
        companion, kc = random_certified_companion(rng, max_half=2)
        cert = satellite_certificate(pattern, companion, kc)
        sat = satellite_matrix(pattern, companion)
        cert.verify(sat)


class TestConnectedSum:
    def test_with_unknot(self):
        total, _ = connected_sum(SeifertMatrix([]), TREFOIL)
        assert alexander(total) == alexander(TREFOIL)

    def test_alexander_multiplies(self):
        total, _ = connected_sum(TREFOIL, FIGURE8)
        assert alexander(total) == normalize_alexander(alexander(TREFOIL) * alexander(FIGURE8))

    def test_certificates_combine(self):
        rng = random.Random(83)
        v1, c1 = random_certified_matrix(rng, 1, 0)
        v2, c2 = random_certified_matrix(rng, 2, 0)
        total, cert = connected_sum(v1, v2, c1, c2)
        assert cert.block_size == v1.size + v2.size
        cert.verify(total)

    def test_partial_certificates_combine(self):
        rng = random.Random(89)
        v1, c1 = random_certified_matrix(rng, 1, 1)
        v2, c2 = random_certified_matrix(rng, 0, 2)
        total, cert = connected_sum(v1, v2, c1, c2)
        assert cert.block_size == c1.block_size + c2.block_size
        cert.verify(total)
