"""Small exact-matrix helpers shared across modules.

Matrices are lists (or tuples) of rows; entries are ints unless stated.
Row-major throughout.  Hot paths delegate to satgenus.kernels.
"""

from fractions import Fraction

from . import kernels
from .errors import NotUnimodular, SizeMismatch


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_rows(rows):
    return [list(r) for r in rows]


def transpose(rows):
    n = len(rows)
    m = len(rows[0]) if n else 0
    return [[rows[i][j] for i in range(n)] for j in range(m)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(rows, c):
    return [[c * x for x in r] for r in rows]


def matmul(a, b):
    if a and b and len(a[0]) != len(b):
        raise SizeMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0]) if b else 0}")
    return kernels.matmul_int(a, b)


def congruence_rows(u, v):
    """u * v * u^T for raw rows."""
    return matmul(matmul(u, v), transpose(u))


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            row = b[i]
            for j in range(k):
                out[off + i][off + j] = row[j]
        off += k
    return out


def perm_matrix(order):
    """Permutation matrix P with (P M P^T)[i][j] = M[order[i]][order[j]]."""
    n = len(order)
    out = [[0] * n for _ in range(n)]
    for i, o in enumerate(order):
        out[i][o] = 1
    return out


def is_symmetric(rows):
    n = len(rows)
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def is_skew(rows):
    n = len(rows)
    if any(rows[i][i] != 0 for i in range(n)):
        return False
    return all(rows[i][j] == -rows[j][i] for i in range(n) for j in range(i + 1, n))


def check_unimodular(rows):
    d = kernels.det_int(rows)
    if d not in (1, -1):
        raise NotUnimodular(f"determinant is {d}, expected +-1")
    return d


def unimodular_inverse(rows):
    """Exact integer inverse of a matrix with determinant +-1."""
    check_unimodular(rows)
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = a[i][n + j]
            assert v.denominator == 1
            row.append(int(v))
        out.append(row)
    return out


def rank_int(rows):
    """Rank over the rationals of an integer matrix (fraction-free elimination)."""
    a = copy_rows(rows)
    n = len(a)
    m = len(a[0]) if n else 0
    rank = 0
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, n) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        pr = a[row]
        for r in range(row + 1, n):
            if a[r][col]:
                f_num, f_den = a[r][col], pr[col]
                a[r] = [f_den * x - f_num * y for x, y in zip(a[r], pr)]
        rank += 1
        row += 1
        if row == n:
            break
    return rank
