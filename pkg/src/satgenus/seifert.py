"""Seifert matrices: validation, Alexander polynomials, Alexander-trivial
blocks, congruence and stabilization moves, skew normal form, Smith normal
form, and finitely generated abelian groups.

A Seifert matrix here is any square integer matrix V, with a declared
component count r, satisfying the surface-realizability conditions on its
skew part V - V^T (corank r - 1 over the rationals, unimodular
nondegenerate part).  validate() enforces exactly these matrix-algebra
conditions; whether a matrix is realized by an embedded surface is the
caller's responsibility.
"""

from fractions import Fraction
from functools import lru_cache

from . import matrixops as mo
from .errors import (
    CertificateInvalid,
    CorankMismatch,
    NonSquare,
    NotSkew,
    NotUnimodular,
    NotUnimodularSkew,
    OddSize,
    SizeMismatch,
)
from .exactalg import LaurentPoly, interpolate_int_poly, normalize_alexander
from .kernels import det_int


class SeifertMatrix:
    """Square integer matrix with a component count and an optional name.

    Immutable; structural equality ignores the name.
    """

    __slots__ = ("entries", "components", "name")

    def __init__(self, entries, components=1, name=None):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        for row in rows:
            if len(row) != len(rows):
                raise NonSquare(f"{len(rows)} rows but a row of length {len(row)}")
        if components < 1:
            raise ValueError("components must be >= 1")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "components", int(components))
        object.__setattr__(self, "name", name)

    def __setattr__(self, *_):
        raise AttributeError("SeifertMatrix is immutable")

    @property
    def size(self):
        return len(self.entries)

    def rows(self):
        return [list(r) for r in self.entries]

    def transpose(self):
        return SeifertMatrix(mo.transpose(self.rows()), self.components, self.name)

    def skew_part(self):
        """V - V^T as raw rows."""
        v = self.rows()
        return mo.mat_sub(v, mo.transpose(v))

    def symmetric_part(self):
        """V + V^T as raw rows."""
        v = self.rows()
        return mo.mat_add(v, mo.transpose(v))

    def direct_sum(self, other, components=None, name=None):
        r = components if components is not None else self.components
        return SeifertMatrix(mo.block_diag(self.rows(), other.rows()), r, name)

    def __eq__(self, other):
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.entries == other.entries and self.components == other.components

    def __hash__(self):
        return hash((self.entries, self.components))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<SeifertMatrix{label} {self.size}x{self.size} r={self.components}>"


def validate(v):
    """Check the Seifert-matrix invariants, raising on the first violation.

    Raises CorankMismatch when corank(V - V^T) != r - 1 and
    NotUnimodularSkew when the nondegenerate part of the skew form is not
    a sum of unit symplectic blocks.
    """
    m = v.size
    r = v.components
    skew = v.skew_part()
    corank = m - mo.rank_int(skew)
    if corank != r - 1:
        raise CorankMismatch(f"corank(V - V^T) = {corank}, expected r - 1 = {r - 1}")
    _, blocks = skew_normalize(skew)
    if any(d != 1 for d in blocks):
        raise NotUnimodularSkew(f"skew normal form blocks {blocks} contain d > 1")
    return True


@lru_cache(maxsize=8192)
def _t_det_cached(entries):
    """det(t*M - M^T) for a square integer matrix, as a LaurentPoly.

    Every entry of t*M - M^T has degree <= 1 in t, so the determinant has
    degree <= m; it is recovered exactly from m + 1 fraction-free integer
    determinant evaluations.
    """
    m = len(entries)
    if m == 0:
        return LaurentPoly.one()
    points = []
    for x in range(m + 1):
        b = [[x * entries[i][j] - entries[j][i] for j in range(m)] for i in range(m)]
        points.append((x, det_int(b)))
    p = interpolate_int_poly(points)
    return LaurentPoly({e: c for e, c in enumerate(p.coeffs)})


def t_determinant(rows):
    """det(t*V - V^T) for raw rows (exact, unnormalized)."""
    return _t_det_cached(tuple(tuple(int(x) for x in row) for row in rows))


def alexander(v):
    """Normalized Alexander polynomial det(tV - V^T) of a valid matrix.

    The 0x0 matrix gives 1.
    """
    validate(v)
    return normalize_alexander(t_determinant(v.entries))


def is_alexander_trivial(block):
    """True iff det(tB - B^T) is the unit monomial t^n (B of even size 2n).

    Tested as: normalized determinant equals 1 and det(B - B^T) equals 1,
    which is equivalent to det(tB - B^T) = t^n and invariant under the
    transposition convention det(B - tB^T).
    """
    rows = block.entries if isinstance(block, SeifertMatrix) else tuple(tuple(int(x) for x in r) for r in block)
    m = len(rows)
    for row in rows:
        if len(row) != m:
            raise NonSquare("block must be square")
    if m % 2:
        raise OddSize(f"Alexander-trivial blocks have even size, got {m}")
    if m == 0:
        return True
    p = _t_det_cached(rows)
    if normalize_alexander(p) != LaurentPoly.one():
        return False
    return p.eval_rational(1) == 1


def congruence(v, u):
    """Basis change U * V * U^T with U unimodular; components unchanged."""
    u_rows = [list(map(int, row)) for row in u]
    if len(u_rows) != v.size or any(len(r) != v.size for r in u_rows):
        raise SizeMismatch(f"basis change is not {v.size}x{v.size}")
    mo.check_unimodular(u_rows)
    w = mo.congruence_rows(u_rows, v.rows())
    return SeifertMatrix(w, v.components, v.name)


def stabilize(v, row, x, kind="upper"):
    """S-equivalence enlargement by two rows and columns.

    `upper` appends the block [[x, 1], [0, 0]] on the diagonal with `row`
    as the new coupling column; `lower` appends the transposed block
    [[x, 0], [1, 0]] with `row` as the new coupling row.  The normalized
    Alexander polynomial and component count are unchanged.
    """
    m = v.size
    row = [int(c) for c in row]
    if len(row) != m:
        raise SizeMismatch(f"coupling row has length {len(row)}, expected {m}")
    if kind not in ("upper", "lower"):
        raise ValueError("kind must be 'upper' or 'lower'")
    out = [[0] * (m + 2) for _ in range(m + 2)]
    for i in range(m):
        for j in range(m):
            out[i][j] = v.entries[i][j]
    if kind == "upper":
        for i in range(m):
            out[i][m] = row[i]
        out[m][m] = x
        out[m][m + 1] = 1
    else:
        for j in range(m):
            out[m][j] = row[j]
        out[m][m] = x
        out[m + 1][m] = 1
    return SeifertMatrix(out, v.components, v.name)


def skew_normalize(s):
    """Congruence normal form of an integer skew-symmetric matrix.

    Returns (U, blocks) with U unimodular and U * S * U^T a direct sum of
    blocks [[0, d_i], [-d_i, 0]] followed by a zero block, d_1 | d_2 | ...
    with all d_i >= 1.  For unimodular S every d_i = 1.
    """
    a = [list(map(int, row)) for row in s]
    n = len(a)
    for row in a:
        if len(row) != n:
            raise NotSkew("matrix must be square")
    if not mo.is_skew(a):
        raise NotSkew("matrix is not skew-symmetric")
    u = mo.identity(n)

    def swap(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        u[i], u[j] = u[j], u[i]

    def add_row(dst, src, c):
        # row dst += c * row src, column dst += c * column src
        if c == 0:
            return
        ar_dst, ar_src = a[dst], a[src]
        for k in range(n):
            ar_dst[k] += c * ar_src[k]
        for r in range(n):
            a[r][dst] += c * a[r][src]
        ur_dst, ur_src = u[dst], u[src]
        for k in range(n):
            ur_dst[k] += c * ur_src[k]

    blocks = []
    t = 0
    while True:
        best = None
        for i in range(t, n):
            for j in range(i + 1, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        # i < j and t <= i, so swap(t, i) leaves the pivot entry at (t, j)
        swap(t, i)
        swap(t + 1, j)
        while True:
            p = a[t][t + 1]
            dirty = False
            for k in range(t + 2, n):
                if a[t][k]:
                    q = a[t][k] // p
                    add_row(k, t + 1, -q)
                    if a[t][k]:
                        dirty = True
            for k in range(t + 2, n):
                if a[t + 1][k]:
                    q = a[t + 1][k] // p
                    add_row(k, t, q)
                    if a[t + 1][k]:
                        dirty = True
            if dirty:
                # remainders smaller than |p| appeared; restart on them
                best = min(
                    ((i, j) for i in (t, t + 1) for j in range(t + 2, n) if a[i][j] != 0),
                    key=lambda ij: abs(a[ij[0]][ij[1]]),
                    default=None,
                )
                if best is None:
                    continue
                i, j = best
                if i == t + 1:
                    swap(t, t + 1)
                swap(t + 1, j)
                continue
            p = a[t][t + 1]
            offender = None
            for i in range(t + 2, n):
                for j in range(i + 1, n):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if a[t][t + 1] < 0:
            swap(t, t + 1)
        blocks.append(a[t][t + 1])
        t += 2
    return u, blocks


def smith_normal_form(m_rows):
    """Smith normal form with transforms: U * M * W = D.

    D is diagonal with nonnegative entries in a divisibility chain; U and W
    are unimodular.
    """
    a = [list(map(int, row)) for row in m_rows]
    n = len(a)
    m = len(a[0]) if n else 0
    u = mo.identity(n)
    w = mo.identity(m)

    def row_op(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def col_op(dst, src, c):
        for r in range(n):
            a[r][dst] += c * a[r][src]
        for r in range(m):
            w[r][dst] += c * w[r][src]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(m):
            w[r][i], w[r][j] = w[r][j], w[r][i]

    t = 0
    while t < min(n, m):
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            restart = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, -q)
                    if a[i][t]:
                        row_swap(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, -q)
                    if a[t][j]:
                        col_swap(t, j)
                        restart = True
                        break
            if restart:
                continue
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender:
                    break
            if offender is None:
                break
            row_op(t, offender, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, w


class TrivialBlockCertificate:
    """Unimodular basis change exhibiting an Alexander-trivial leading block.

    basis_change U satisfies det(U) = +-1 and the leading block_size x
    block_size principal block of U * V * U^T is Alexander trivial.  This
    is a machine-checkable witness of an upper bound on the algebraic
    genus: (m - block_size - r + 1) / 2.
    """

    __slots__ = ("basis_change", "block_size")

    def __init__(self, basis_change, block_size):
        rows = tuple(tuple(int(x) for x in row) for row in basis_change)
        for row in rows:
            if len(row) != len(rows):
                raise NonSquare("basis change must be square")
        if block_size < 0 or block_size % 2:
            raise OddSize(f"block size must be even and nonnegative, got {block_size}")
        object.__setattr__(self, "basis_change", rows)
        object.__setattr__(self, "block_size", int(block_size))

    def __setattr__(self, *_):
        raise AttributeError("TrivialBlockCertificate is immutable")

    @classmethod
    def identity(cls, size, block_size=0):
        return cls(mo.identity(size), block_size)

    @property
    def size(self):
        return len(self.basis_change)

    def apply(self, v):
        """U * V * U^T as raw rows."""
        u = [list(r) for r in self.basis_change]
        return mo.congruence_rows(u, v.rows())

    def leading_block(self, v):
        t = self.apply(v)
        k = self.block_size
        return [row[:k] for row in t[:k]]

    def verify(self, v):
        """Raise CertificateInvalid unless this certificate holds for v."""
        if self.size != v.size:
            raise CertificateInvalid(f"basis change is {self.size}x{self.size}, matrix is {v.size}x{v.size}")
        if self.block_size > v.size:
            raise CertificateInvalid("declared block exceeds the matrix")
        try:
            mo.check_unimodular([list(r) for r in self.basis_change])
        except NotUnimodular as e:
            raise CertificateInvalid(str(e)) from e
        if not is_alexander_trivial(self.leading_block(v)):
            raise CertificateInvalid("leading block is not Alexander trivial")

    def check(self, v):
        try:
            self.verify(v)
            return True
        except CertificateInvalid:
            return False

    def implied_bound(self, v):
        """(m - 2n - r + 1) / 2 as an exact Fraction."""
        return Fraction(v.size - self.block_size - v.components + 1, 2)

    def __eq__(self, other):
        if not isinstance(other, TrivialBlockCertificate):
            return NotImplemented
        return self.basis_change == other.basis_change and self.block_size == other.block_size

    def __repr__(self):
        return f"<TrivialBlockCertificate block={self.block_size} on {self.size}x{self.size}>"


class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    factors is the divisibility chain d_1 | d_2 | ... with every d_i > 1;
    free_rank counts Z summands.  Minimal generator count is
    len(factors) + free_rank.
    """

    __slots__ = ("factors", "free_rank")

    def __init__(self, factors=(), free_rank=0):
        fs = tuple(int(d) for d in factors)
        for d in fs:
            if d <= 1:
                raise ValueError("invariant factors must be > 1")
        for x, y in zip(fs, fs[1:]):
            if y % x:
                raise ValueError(f"divisibility chain violated: {x} does not divide {y}")
        object.__setattr__(self, "factors", fs)
        object.__setattr__(self, "free_rank", int(free_rank))

    def __setattr__(self, *_):
        raise AttributeError("AbelianGroup is immutable")

    @classmethod
    def trivial(cls):
        return cls()

    @classmethod
    def from_presentation(cls, rows):
        """Cokernel of an integer relation matrix (rows = relations acting on
        column generators)."""
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            gens = len(rows[0]) if rows else 0
            return cls((), gens)
        d, _, _ = smith_normal_form(rows)
        n_gen = len(rows[0])
        diag = [d[i][i] for i in range(min(len(rows), n_gen))]
        nonzero = [x for x in diag if x != 0]
        return cls([x for x in nonzero if x > 1], n_gen - len(nonzero))

    @classmethod
    def from_factors(cls, factors, free_rank=0):
        """Normalize an arbitrary multiset of cyclic orders to chain form."""
        fs = [int(d) for d in factors if int(d) != 1]
        if any(d == 0 for d in fs):
            free_rank += sum(1 for d in fs if d == 0)
            fs = [d for d in fs if d != 0]
        if not fs:
            return cls((), free_rank)
        diag = [[fs[i] if i == j else 0 for j in range(len(fs))] for i in range(len(fs))]
        d, _, _ = smith_normal_form(diag)
        chain = [d[i][i] for i in range(len(fs)) if d[i][i] > 1]
        return cls(chain, free_rank)

    def direct_sum(self, other):
        return AbelianGroup.from_factors(self.factors + other.factors, self.free_rank + other.free_rank)

    @property
    def is_trivial(self):
        return not self.factors and not self.free_rank

    @property
    def min_generators(self):
        return len(self.factors) + self.free_rank

    def order(self):
        """Group order; 0 encodes infinite."""
        if self.free_rank:
            return 0
        total = 1
        for d in self.factors:
            total *= d
        return total

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.factors == other.factors and self.free_rank == other.free_rank

    def __hash__(self):
        return hash((self.factors, self.free_rank))

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.factors]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AbelianGroup({self})"
