"""Pure-Python implementations of the hot kernels.

satgenus._ckernels mirrors these functions in Cython; satgenus.kernels
selects one implementation at import time.  Keep the twins in lockstep:
identical signatures, identical results, exact arithmetic only.
"""

from fractions import Fraction

BACKEND = "python"


def det_int(rows):
    """Determinant of a square integer matrix by fraction-free elimination.

    Intermediate entries are minors of the input, so all divisions are
    exact; row pivoting only (tracked by sign).
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = a[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            if aik == 0:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j]) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
                row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def matmul_int(a, b):
    """Product of two integer matrices given as lists of rows."""
    n = len(a)
    inner = len(b)
    m = len(b[0]) if inner else 0
    out = []
    for i in range(n):
        row_a = a[i]
        row = [0] * m
        for k in range(inner):
            aik = row_a[k]
            if aik == 0:
                continue
            row_b = b[k]
            for j in range(m):
                bkj = row_b[j]
                if bkj:
                    row[j] += aik * bkj
        out.append(row)
    return out


def sym_signature(rows):
    """(n_pos, n_neg, n_zero) of an exact symmetric matrix.

    Congruence diagonalization over the rationals: eliminate with a nonzero
    diagonal pivot (the Schur complement of a symmetric matrix is again
    symmetric), swap a nonzero diagonal entry to the front when needed, and
    manufacture one by a row+column addition when the whole diagonal of the
    active block vanishes.  Signature is invariant under all three moves.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    pos = neg = zero = 0
    s = 0
    while s < n:
        if a[s][s] == 0:
            piv = -1
            for i in range(s + 1, n):
                if a[i][i] != 0:
                    piv = i
                    break
            if piv < 0:
                hit = None
                for i in range(s, n):
                    row_i = a[i]
                    for j in range(i + 1, n):
                        if row_i[j] != 0:
                            hit = (i, j)
                            break
                    if hit:
                        break
                if hit is None:
                    zero += n - s
                    break
                i, j = hit
                # row i += row j and column i += column j: makes a[i][i] = 2 a[i][j]
                row_i = a[i]
                row_j = a[j]
                for c in range(s, n):
                    row_i[c] += row_j[c]
                for r in range(s, n):
                    a[r][i] += a[r][j]
                piv = i
            if piv != s:
                a[s], a[piv] = a[piv], a[s]
                for r in range(s, n):
                    a[r][s], a[r][piv] = a[r][piv], a[r][s]
        pivot = a[s][s]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        row_s = a[s]
        for i in range(s + 1, n):
            row_i = a[i]
            f = row_i[s] / pivot
            if f:
                for j in range(s + 1, n):
                    row_i[j] -= f * row_s[j]
        s += 1
    return pos, neg, zero
