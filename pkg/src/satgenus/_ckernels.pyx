# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the hot kernels in _pykernels.py.

Coefficients stay Python objects (arbitrary-precision int / Fraction);
Cython removes the interpreter overhead of the index bookkeeping, which
dominates at the matrix sizes this package works with.  Keep in lockstep
with _pykernels.py.
"""

from fractions import Fraction

BACKEND = "cython"


def det_int(rows):
    """Determinant of a square integer matrix by fraction-free elimination."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t k, i, j, r
    cdef int sign = 1
    cdef list row_k, row_i
    prev = 1
    for k in range(n - 1):
        row_k = <list>a[k]
        if row_k[k] == 0:
            for r in range(k + 1, n):
                if (<list>a[r])[k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
            row_k = <list>a[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>a[i]
            aik = row_i[k]
            if aik == 0:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j]) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
                row_i[k] = 0
        prev = pivot
    return sign * (<list>a[n - 1])[n - 1]


def matmul_int(a, b):
    """Product of two integer matrices given as lists of rows."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t inner = len(b)
    cdef Py_ssize_t m = len(b[0]) if inner else 0
    cdef Py_ssize_t i, j, k
    cdef list out = []
    cdef list row_a, row_b, row
    for i in range(n):
        row_a = <list>(list(a[i]))
        row = [0] * m
        for k in range(inner):
            aik = row_a[k]
            if aik == 0:
                continue
            row_b = <list>(list(b[k]))
            for j in range(m):
                bkj = row_b[j]
                if bkj:
                    row[j] = row[j] + aik * bkj
        out.append(row)
    return out


def sym_signature(rows):
    """(n_pos, n_neg, n_zero) of an exact symmetric matrix.

    Same congruence-diagonalization procedure as the pure twin.
    """
    cdef Py_ssize_t n = len(rows)
    cdef list a = [[Fraction(x) for x in row] for row in rows]
    cdef Py_ssize_t pos = 0, neg = 0, zero = 0
    cdef Py_ssize_t s = 0, i, j, c, r, piv
    cdef list row_i, row_j, row_s
    zero_f = Fraction(0)
    while s < n:
        if (<list>a[s])[s] == 0:
            piv = -1
            for i in range(s + 1, n):
                if (<list>a[i])[i] != 0:
                    piv = i
                    break
            if piv < 0:
                hit_i = -1
                hit_j = -1
                for i in range(s, n):
                    row_i = <list>a[i]
                    for j in range(i + 1, n):
                        if row_i[j] != 0:
                            hit_i = i
                            hit_j = j
                            break
                    if hit_i >= 0:
                        break
                if hit_i < 0:
                    zero += n - s
                    break
                i = hit_i
                j = hit_j
                row_i = <list>a[i]
                row_j = <list>a[j]
                for c in range(s, n):
                    row_i[c] = row_i[c] + row_j[c]
                for r in range(s, n):
                    (<list>a[r])[i] = (<list>a[r])[i] + (<list>a[r])[j]
                piv = i
            if piv != s:
                a[s], a[piv] = a[piv], a[s]
                for r in range(s, n):
                    row_i = <list>a[r]
                    row_i[s], row_i[piv] = row_i[piv], row_i[s]
        pivot = (<list>a[s])[s]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        row_s = <list>a[s]
        for i in range(s + 1, n):
            row_i = <list>a[i]
            f = row_i[s] / pivot
            if f != zero_f:
                for j in range(s + 1, n):
                    row_i[j] = row_i[j] - f * row_s[j]
        s += 1
    return pos, neg, zero
