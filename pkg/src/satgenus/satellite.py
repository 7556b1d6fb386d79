"""Satellite and cable Seifert matrices, and trivial-block certificates for
satellites assembled from certificates of the pattern closure and the
companion.

The satellite of a pattern with winding number w and a companion knot with
Seifert matrix V2 has Seifert matrix V1 (+) C, where C is the w x w block
matrix with block (i, j) equal to V2 for i <= j and V2^T for i > j (the
cable form).  The certificate pipeline turns a trivial block of size
2(m1 - g1) on V1 and one of size 2(m2 - g2) on V2 into a verified trivial
block of size 2(m1 - g1) + 2(|w| m2 - g2) on the satellite matrix:

1. the companion basis is normalized so its matrix is [[A, R], [R^T, D]]
   with A the certified Alexander-trivial block and D - D^T the standard
   [0 I; -I 0] form (achieved by an integer shear that block-diagonalizes
   the skew form, then a skew normal form of the complement);
2. a block congruence with identity diagonal and minus-identity
   subdiagonal turns the cable form into a bidiagonal block matrix;
3. a permutation collates all copies' A-coordinates in front, followed by
   the copies' symplectic tails;
4. the first half of the leading tail and the last half of the trailing
   tail are moved behind everything else; the block left in front is
   Alexander trivial, which is re-verified before the certificate is
   returned.
"""

from . import matrixops as mo
from .errors import (
    CertificateInvalid,
    MissingCertificate,
    MultiComponent,
    MultiComponentCompanion,
    NegativeWinding,
    VerificationFailed,
)
from .seifert import SeifertMatrix, TrivialBlockCertificate, is_alexander_trivial, skew_normalize, validate


class Pattern:
    """A pattern: Seifert matrix of its closure, winding number, and an
    optional trivial-block certificate for that matrix."""

    __slots__ = ("matrix", "winding", "certificate")

    def __init__(self, matrix, winding, certificate=None):
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "winding", int(winding))
        object.__setattr__(self, "certificate", certificate)

    def __setattr__(self, *_):
        raise AttributeError("Pattern is immutable")

    @property
    def components(self):
        return self.matrix.components

    def validate(self):
        validate(self.matrix)
        if self.certificate is not None:
            self.certificate.verify(self.matrix)
        return True

    def __repr__(self):
        return f"<Pattern w={self.winding} on {self.matrix!r}>"


def cable_matrix(w, companion):
    """Seifert matrix of the (w, 1)-cable: the w x w block matrix with
    (i, j) block V2 for i <= j and V2^T for i > j.

    w = 0 gives the empty matrix, w = 1 gives V2 itself.  The companion
    must be a knot matrix; negative w is rejected (reverse the pattern
    first).
    """
    if w < 0:
        raise NegativeWinding(f"w = {w}; reduce to |w| by reversing the pattern")
    if companion.components != 1:
        raise MultiComponentCompanion(f"companion has {companion.components} components")
    validate(companion)
    m = companion.size
    v = companion.entries
    vt = tuple(zip(*v))
    out = [[0] * (w * m) for _ in range(w * m)]
    for bi in range(w):
        for bj in range(w):
            block = v if bi <= bj else vt
            for i in range(m):
                row = out[bi * m + i]
                bro = block[i]
                for j in range(m):
                    row[bj * m + j] = bro[j]
    name = None
    if companion.name:
        name = f"cable({w},1) of {companion.name}"
    return SeifertMatrix(out, 1, name)


def satellite_matrix(pattern, companion):
    """Seifert matrix V1 (+) cable_matrix(|w|, V2) of the satellite.

    For w = 0 this is exactly the pattern matrix; for |w| = 1 it is the
    direct sum V1 (+) V2 (the connected sum of the pattern closure and the
    companion).
    """
    pattern.validate()
    w = abs(pattern.winding)
    cab = cable_matrix(w, companion)
    name = None
    if pattern.matrix.name and companion.name:
        name = f"satellite({pattern.matrix.name}, {companion.name})"
    return SeifertMatrix(
        mo.block_diag(pattern.matrix.rows(), cab.rows()),
        pattern.components,
        name,
    )


def connected_sum(v1, v2, cert1=None, cert2=None):
    """Direct sum of two knot matrices, with certificates combined when both
    are present (trivial blocks of direct summands concatenate)."""
    if v1.components != 1 or v2.components != 1:
        raise MultiComponent("connected sum is defined for knot matrices")
    validate(v1)
    validate(v2)
    total = v1.direct_sum(v2, components=1)
    if cert1 is None or cert2 is None:
        return total, None
    cert1.verify(v1)
    cert2.verify(v2)
    m1, m2 = v1.size, v2.size
    b1, b2 = cert1.block_size, cert2.block_size
    u = mo.block_diag([list(r) for r in cert1.basis_change], [list(r) for r in cert2.basis_change])
    order = (
        list(range(0, b1))
        + list(range(m1, m1 + b2))
        + list(range(b1, m1))
        + list(range(m1 + b2, m1 + m2))
    )
    u_total = mo.matmul(mo.perm_matrix(order), u)
    cert = TrivialBlockCertificate(u_total, b1 + b2)
    cert.verify(total)
    return total, cert


def _companion_normal_form(companion, cert):
    """Unimodular W with W * V2 * W^T = [[A, R], [R^T, D]]: A the certified
    trivial block, the skew form block-diagonal, and D - D^T = [0 I; -I 0].

    Returns (W rows, trivial size 2(m2 - g2), g2).
    """
    m2 = companion.size
    a_size = cert.block_size
    g2 = (m2 - a_size) // 2
    w_rows = [list(r) for r in cert.basis_change]
    if g2 == 0:
        return w_rows, a_size, 0
    t0 = mo.congruence_rows(w_rows, companion.rows())
    skew = mo.mat_sub(t0, mo.transpose(t0))
    if a_size:
        # With skew blocks [[S_A, E], [-E^T, S_D]] and S_A unimodular (A is
        # Alexander trivial, so det(A - A^T) = 1), the integer shear
        # [[I, 0], [E^T S_A^-1, I]] makes the skew form block diagonal.
        s_a = [row[:a_size] for row in skew[:a_size]]
        e = [row[a_size:] for row in skew[:a_size]]
        s_a_inv = mo.unimodular_inverse(s_a)
        shear_block = mo.matmul(mo.transpose(e), s_a_inv)
        shear = mo.identity(m2)
        for i in range(m2 - a_size):
            for j in range(a_size):
                shear[a_size + i][j] = shear_block[i][j]
        t1 = mo.congruence_rows(shear, t0)
        skew1 = mo.mat_sub(t1, mo.transpose(t1))
        w_rows = mo.matmul(shear, w_rows)
    else:
        t1 = t0
        skew1 = skew
    if any(skew1[i][j] != 0 for i in range(a_size) for j in range(a_size, m2)):
        raise VerificationFailed("skew form did not block-diagonalize")
    s_d = [row[a_size:] for row in skew1[a_size:]]
    u_d, blocks = skew_normalize(s_d)
    if len(blocks) != g2 or any(d != 1 for d in blocks):
        raise VerificationFailed(f"complement skew form normalized to blocks {blocks}")
    # reorder the symplectic pairs (e1 f1 e2 f2 ...) to (e1 .. eg f1 .. fg)
    order = [2 * i for i in range(g2)] + [2 * i + 1 for i in range(g2)]
    u_d = mo.matmul(mo.perm_matrix(order), u_d)
    full = mo.block_diag(mo.identity(a_size), u_d)
    w_rows = mo.matmul(full, w_rows)
    final = mo.congruence_rows(w_rows, companion.rows())
    skew_f = mo.mat_sub(final, mo.transpose(final))
    for i in range(g2):
        for j in range(g2):
            want = 1 if i == j else 0
            assert skew_f[a_size + i][a_size + g2 + j] == want, "D - D^T is not [0 I; -I 0]"
    return w_rows, a_size, g2


def _cable_shear(w, m):
    """Block matrix with identity diagonal blocks and minus-identity
    subdiagonal blocks; congruence by it turns the cable form into the
    bidiagonal block matrix with blocks V2, then V2 - V2^T on the diagonal
    and V2^T - V2 on the subdiagonal."""
    n = w * m
    out = mo.identity(n)
    for b in range(1, w):
        for i in range(m):
            out[b * m + i][(b - 1) * m + i] = -1
    return out


def _check_bidiagonal_structure(x, w, m, v2, v2t):
    """Entrywise check of the sheared cable (cheap; guards the pipeline)."""
    skew = [[v2[i][j] - v2t[i][j] for j in range(m)] for i in range(m)]
    for bi in range(w):
        for bj in range(w):
            for i in range(m):
                for j in range(m):
                    got = x[bi * m + i][bj * m + j]
                    if bi == bj == 0:
                        want = v2[i][j]
                    elif bi == bj:
                        want = skew[i][j]
                    elif bi == bj + 1:
                        want = -skew[i][j]
                    else:
                        want = 0
                    if got != want:
                        raise VerificationFailed(f"sheared cable block ({bi},{bj}) malformed")


def satellite_certificate(pattern, companion, companion_cert):
    """Verified trivial-block certificate on satellite_matrix(pattern, companion).

    Requires pattern.certificate and companion_cert.  The returned block
    size is pattern_block + (|w| - 1) * m2 + companion_block, so the
    implied genus bound is g1 + g2 for |w| >= 1 (and g1 for w = 0, where
    the satellite matrix is the pattern matrix and the pattern certificate
    is returned unchanged).
    """
    if pattern.certificate is None:
        raise MissingCertificate("pattern has no trivial-block certificate")
    if companion_cert is None:
        raise MissingCertificate("companion certificate missing")
    if companion.components != 1:
        raise MultiComponentCompanion(f"companion has {companion.components} components")
    pattern.validate()
    validate(companion)
    companion_cert.verify(companion)

    w = abs(pattern.winding)
    cert_p = pattern.certificate
    if w == 0:
        return cert_p

    m1 = pattern.matrix.size
    m2 = companion.size
    n1b = cert_p.block_size
    sat = satellite_matrix(pattern, companion)

    if m2 == 0:
        cert = TrivialBlockCertificate(cert_p.basis_change, n1b)
        cert.verify(sat)
        return cert

    w2_rows, a_size, g2 = _companion_normal_form(companion, companion_cert)

    copies = mo.block_diag(*[w2_rows for _ in range(w)])
    shear = _cable_shear(w, m2)
    u_cable = mo.matmul(shear, copies)

    # structure check of the sheared cable against the normalized companion
    v2n = mo.congruence_rows(w2_rows, companion.rows())
    x = mo.congruence_rows(shear, mo.congruence_rows(copies, cable_matrix(w, companion).rows()))
    _check_bidiagonal_structure(x, w, m2, v2n, mo.transpose(v2n))

    # collate: all copies' A-coordinates first, then the symplectic tails
    order = []
    for c in range(w):
        order.extend(range(c * m2, c * m2 + a_size))
    for c in range(w):
        order.extend(range(c * m2 + a_size, (c + 1) * m2))
    u_cable = mo.matmul(mo.perm_matrix(order), u_cable)

    u_full = mo.block_diag([list(r) for r in cert_p.basis_change], u_cable)

    # set aside the first half of the leading tail and the last half of
    # the trailing tail (g2 rows each); everything retained in front of the
    # pattern complement forms the Alexander-trivial corner
    tail_start = m1 + w * a_size
    sat_size = m1 + w * m2
    drop = list(range(tail_start, tail_start + g2)) + list(range(sat_size - g2, sat_size))
    dropped = set(drop)
    retained_cable = [i for i in range(m1, sat_size) if i not in dropped]
    new_order = (
        list(range(0, n1b))
        + retained_cable
        + list(range(n1b, m1))
        + drop
    )
    u_total = mo.matmul(mo.perm_matrix(new_order), u_full)
    block_size = n1b + w * m2 - 2 * g2

    cert = TrivialBlockCertificate(u_total, block_size)
    try:
        cert.verify(sat)
    except CertificateInvalid as e:
        raise VerificationFailed(f"assembled satellite certificate failed verification: {e}") from e
    return cert
