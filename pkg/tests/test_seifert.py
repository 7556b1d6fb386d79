"""Seifert matrix validation, Alexander polynomials, moves, normal forms."""

import random

import pytest

from satgenus import matrixops as mo
from satgenus.errors import (
    CorankMismatch,
    NonSquare,
    NotSkew,
    NotUnimodular,
    NotUnimodularSkew,
    OddSize,
    SizeMismatch,
)
from satgenus.exactalg import LaurentPoly
from satgenus.kernels import det_int
from satgenus.randomgen import random_knot_matrix, random_unimodular_ops
from satgenus.seifert import (
    AbelianGroup,
    SeifertMatrix,
    TrivialBlockCertificate,
    alexander,
    congruence,
    is_alexander_trivial,
    skew_normalize,
    smith_normal_form,
    stabilize,
    validate,
)

TREFOIL = SeifertMatrix([[-1, 1], [0, -1]], name="trefoil")
FIGURE8 = SeifertMatrix([[1, 1], [0, -1]], name="figure8")
UNKNOT = SeifertMatrix([], name="unknot")


class TestValidate:
    def test_trefoil_ok(self):
        assert validate(TREFOIL)

    def test_unknot_ok(self):
        assert validate(UNKNOT)

    def test_not_unimodular_skew(self):
        with pytest.raises(NotUnimodularSkew):
            validate(SeifertMatrix([[0, 2], [0, 0]]))

    def test_corank_mismatch(self):
        with pytest.raises(CorankMismatch):
            validate(SeifertMatrix([[-1, 1], [0, -1]], components=2))

    def test_non_square(self):
        with pytest.raises(NonSquare):
            SeifertMatrix([[1, 2, 3], [4, 5, 6]])

    def test_two_component_ok(self):
        assert validate(SeifertMatrix([[0]], components=2))


class TestAlexander:
    def test_trefoil(self):
        assert alexander(TREFOIL) == LaurentPoly({2: 1, 1: -1, 0: 1})

    def test_figure8(self):
        assert alexander(FIGURE8) == LaurentPoly({2: 1, 1: -3, 0: 1})

    def test_unknot(self):
        assert alexander(UNKNOT) == LaurentPoly.one()

    def test_symmetry_and_determinant(self):
        rng = random.Random(31)
        for _ in range(60):
            v = random_knot_matrix(rng, rng.randint(0, 3))
            d = alexander(v)
            mirrored = d.reciprocal()
            from satgenus.exactalg import normalize_alexander

            assert normalize_alexander(mirrored) == d
            assert d.eval_rational(1) in (1, -1)


class TestTriviality:
    def test_examples(self):
        assert is_alexander_trivial([[0, 1], [0, 0]])
        assert not is_alexander_trivial([[-1, 1], [0, -1]])
        assert is_alexander_trivial([])

    def test_odd_size(self):
        with pytest.raises(OddSize):
            is_alexander_trivial([[1]])

    def test_congruence_invariance(self):
        rng = random.Random(37)
        block = [[0, 1], [0, 2]]
        for _ in range(40):
            u, _ = random_unimodular_ops(rng, 2)
            assert is_alexander_trivial(mo.congruence_rows(u, block))


class TestCongruence:
    def test_identity(self):
        assert congruence(TREFOIL, [[1, 0], [0, 1]]) == TREFOIL

    def test_example(self):
        out = congruence(TREFOIL, [[1, 1], [0, 1]])
        assert out.entries == ((-1, 0), (-1, -1))
        assert alexander(out) == alexander(TREFOIL)

    def test_permutation(self):
        out = congruence(TREFOIL, [[0, 1], [1, 0]])
        assert out.entries == ((-1, 0), (1, -1))

    def test_not_unimodular(self):
        with pytest.raises(NotUnimodular):
            congruence(TREFOIL, [[2, 0], [0, 1]])

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            congruence(TREFOIL, [[1]])

    def test_alexander_invariance_200_random(self):
        rng = random.Random(41)
        for _ in range(200):
            genus = rng.randint(0, 4)  # sizes up to 8
            v = random_knot_matrix(rng, genus)
            u, _ = random_unimodular_ops(rng, v.size)
            assert alexander(congruence(v, u)) == alexander(v)


class TestStabilize:
    def test_unknot_stabilization(self):
        assert stabilize(UNKNOT, [], 0, "upper").entries == ((0, 1), (0, 0))

    def test_alexander_preserved_example(self):
        assert alexander(stabilize(TREFOIL, (1, 0), 2, "lower")) == alexander(TREFOIL)

    def test_alexander_preserved_random(self):
        rng = random.Random(43)
        for _ in range(50):
            v = random_knot_matrix(rng, rng.randint(0, 2))
            row = [rng.randint(-2, 2) for _ in range(v.size)]
            kind = rng.choice(("upper", "lower"))
            w = stabilize(v, row, rng.randint(-2, 2), kind)
            assert alexander(w) == alexander(v)
            assert w.components == v.components
            assert validate(w)

    def test_double_stabilization_block_is_trivial(self):
        v = stabilize(stabilize(UNKNOT, [], 1, "upper"), [0, 0], -2, "lower")
        assert is_alexander_trivial(v.rows())

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            stabilize(TREFOIL, [1], 0, "upper")


class TestSkewNormalize:
    def test_standard_block(self):
        u, blocks = skew_normalize([[0, 1], [-1, 0]])
        assert blocks == [1]
        assert u == mo.identity(2)

    def test_tridiagonal(self):
        s = [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]]
        u, blocks = skew_normalize(s)
        assert blocks == [1, 1]
        _check_skew_normal(s, u, blocks)

    def test_scaled_block(self):
        u, blocks = skew_normalize([[0, 2], [-2, 0]])
        assert blocks == [2]

    def test_not_skew(self):
        with pytest.raises(NotSkew):
            skew_normalize([[1, 0], [0, 1]])

    def test_random_skew_forms(self):
        rng = random.Random(47)
        for _ in range(60):
            n = rng.randint(0, 6)
            s = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    s[i][j] = rng.randint(-4, 4)
                    s[j][i] = -s[i][j]
            u, blocks = skew_normalize(s)
            _check_skew_normal(s, u, blocks)
            assert all(b2 % b1 == 0 for b1, b2 in zip(blocks, blocks[1:]))

    def test_knot_matrix_skew_parts(self):
        rng = random.Random(53)
        for _ in range(40):
            v = random_knot_matrix(rng, rng.randint(1, 3))
            _, blocks = skew_normalize(v.skew_part())
            assert blocks == [1] * (v.size // 2)


def _check_skew_normal(s, u, blocks):
    n = len(s)
    assert abs(det_int(u)) == 1
    out = mo.congruence_rows(u, [list(r) for r in s])
    expect = [[0] * n for _ in range(n)]
    for k, d in enumerate(blocks):
        expect[2 * k][2 * k + 1] = d
        expect[2 * k + 1][2 * k] = -d
    assert out == expect


class TestSmithNormalForm:
    def test_identity(self):
        d, u, w = smith_normal_form(mo.identity(3))
        assert d == mo.identity(3)

    def test_example_24_68(self):
        d, u, w = smith_normal_form([[2, 4], [6, 8]])
        assert [d[0][0], d[1][1]] == [2, 4]
        _check_snf([[2, 4], [6, 8]], d, u, w)

    def test_example_sym(self):
        d, u, w = smith_normal_form([[-2, 1], [1, -2]])
        assert [d[0][0], d[1][1]] == [1, 3]

    def test_random(self):
        rng = random.Random(59)
        for _ in range(80):
            n = rng.randint(1, 5)
            m = rng.randint(1, 5)
            a = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
            d, u, w = smith_normal_form(a)
            _check_snf(a, d, u, w)
            if n == m:
                prod = 1
                for i in range(n):
                    prod *= d[i][i]
                assert abs(prod) == abs(det_int(a))


def _check_snf(a, d, u, w):
    n, m = len(a), len(a[0])
    assert abs(det_int(u)) == 1 and abs(det_int(w)) == 1
    assert mo.matmul(mo.matmul(u, [list(r) for r in a]), w) == d
    diag = [d[i][i] for i in range(min(n, m))]
    for i in range(n):
        for j in range(m):
            if i != j:
                assert d[i][j] == 0
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(b % a2 == 0 for a2, b in zip(nz, nz[1:]))
    # zeros only at the end
    seen_zero = False
    for x in diag:
        if x == 0:
            seen_zero = True
        else:
            assert not seen_zero


class TestCertificate:
    def test_identity_certificate(self):
        cert = TrivialBlockCertificate.identity(2, 0)
        cert.verify(TREFOIL)
        assert cert.implied_bound(TREFOIL) == 1

    def test_full_certificate_on_stabilized_unknot(self):
        v = SeifertMatrix([[0, 1], [0, 0]])
        cert = TrivialBlockCertificate.identity(2, 2)
        cert.verify(v)
        assert cert.implied_bound(v) == 0

    def test_bad_certificate_rejected(self):
        from satgenus.errors import CertificateInvalid

        cert = TrivialBlockCertificate.identity(2, 2)
        with pytest.raises(CertificateInvalid):
            cert.verify(TREFOIL)
        assert not cert.check(TREFOIL)

    def test_odd_block_rejected(self):
        with pytest.raises(OddSize):
            TrivialBlockCertificate(mo.identity(2), 1)


class TestAbelianGroup:
    def test_from_presentation(self):
        assert AbelianGroup.from_presentation([[-2, 1], [1, -2]]) == AbelianGroup((3,))

    def test_free_rank(self):
        g = AbelianGroup.from_presentation([[0, 0], [0, 0]])
        assert g.free_rank == 2 and g.order() == 0

    def test_direct_sum_normalizes(self):
        a = AbelianGroup((2,))
        b = AbelianGroup((3,))
        assert a.direct_sum(b) == AbelianGroup((6,))
        c = AbelianGroup((2, 2))
        assert c.direct_sum(b) == AbelianGroup((2, 6))

    def test_min_generators(self):
        assert AbelianGroup((3, 3, 3, 3)).min_generators == 4
        assert AbelianGroup((), 2).min_generators == 2

    def test_chain_enforced(self):
        with pytest.raises(ValueError):
            AbelianGroup((4, 2))
