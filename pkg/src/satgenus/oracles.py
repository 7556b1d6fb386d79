"""Independent brute-force oracles used to cross-check the primary routes.

The signature oracle recomputes the characteristic polynomial by the
Faddeev-LeVerrier trace recurrence (not by determinant interpolation),
peels multiplicities by repeated squarefree splitting, and counts positive
and negative roots by Sturm-based interval bisection; none of that shares
code with the Descartes sign-variation path it checks.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import NotSymmetric
from .exactalg import (
    IntPoly,
    count_real_roots,
    _frac_poly,
    _poly_deriv,
    _poly_gcd,
    _poly_quo,
)


def charpoly_faddeev(rows):
    """Monic characteristic polynomial of a rational matrix, ascending
    coefficients, by the Faddeev-LeVerrier trace recurrence."""
    n = len(rows)
    if n == 0:
        return [Fraction(1)]
    a = [[Fraction(x) for x in row] for row in rows]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A * M_{k-1} + c_{n-k+1} * I
        if k > 1:
            prev_c = coeffs[n - k + 1]
            am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
            for i in range(n):
                am[i][i] += prev_c
            m = am
        else:
            m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(am[i][i] for i in range(n))
        coeffs[n - k] = -trace / k
    return coeffs


def _to_int_poly(frac_coeffs):
    den = 1
    for x in frac_coeffs:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in frac_coeffs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content:
        ints = [v // content for v in ints]
    if ints and ints[-1] < 0:
        ints = [-v for v in ints]
    return IntPoly(ints)


def signature_by_bisection(rows):
    """Signature of a symmetric rational matrix by root isolation.

    Characteristic polynomial via Faddeev-LeVerrier; multiplicities by
    repeated squarefree splitting (a root of multiplicity m appears in the
    squarefree part of exactly the first m gcd quotients); positive and
    negative counts via Sturm bisection within a Cauchy bound.
    """
    n = len(rows)
    if n == 0:
        return 0
    for i in range(n):
        for j in range(i + 1, n):
            if Fraction(rows[i][j]) != Fraction(rows[j][i]):
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    coeffs = charpoly_faddeev(rows)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    sig = 0
    work = _frac_poly(coeffs)
    while len(work) > 1:
        g = _poly_gcd(work, _poly_deriv(work))
        sf = _poly_quo(work, g) if len(g) > 1 else work
        q = _to_int_poly(sf)
        bound = Fraction(1) + max(abs(Fraction(c)) for c in q.coeffs) / abs(q.leading)
        pos = count_real_roots(q, Fraction(0), bound)
        neg = count_real_roots(q, -bound, Fraction(0))
        sig += pos - neg
        work = g if len(g) > 1 else [Fraction(1)]
    return sig
