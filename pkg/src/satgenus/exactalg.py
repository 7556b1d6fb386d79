"""Exact arithmetic layer: integer Laurent polynomials, rational points on
the unit circle, integer polynomials with Sturm-sequence root counting, and
exact signatures of symmetric rational matrices.

Everything is computed over arbitrary-precision integers and Fractions.
No floating point: signatures jump exactly at Alexander roots, so the root
separations and sign decisions below must be certificates, not estimates.
All values are immutable and all functions pure.
"""

from fractions import Fraction
from math import gcd, lcm

from . import kernels
from .errors import NotSymmetric


class LaurentPoly:
    """Integer-coefficient Laurent polynomial, stored sparsely.

    Invariant: no stored coefficient is zero; the zero polynomial is the
    empty map.  Supports +, -, *, ** and the substitutions t -> 1/t and
    t -> t^k, plus exact evaluation at Gaussian rationals.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff, exp=0):
        return cls({exp: coeff})

    @classmethod
    def t(cls):
        return cls({1: 1})

    @classmethod
    def from_coeff_list(cls, coeffs, min_exp=0):
        return cls({min_exp + i: c for i, c in enumerate(coeffs)})

    @property
    def is_zero(self):
        return not self._c

    @property
    def is_one(self):
        return self._c == {0: 1}

    @property
    def min_deg(self):
        return min(self._c) if self._c else None

    @property
    def max_deg(self):
        return max(self._c) if self._c else None

    @property
    def span(self):
        """max_deg - min_deg; 0 for the zero polynomial."""
        return (max(self._c) - min(self._c)) if self._c else 0

    def coeff(self, e):
        return self._c.get(e, 0)

    def items(self):
        return sorted(self._c.items())

    def coeff_list(self):
        """Dense ascending coefficients from min_deg to max_deg."""
        if not self._c:
            return []
        lo, hi = min(self._c), max(self._c)
        return [self._c.get(e, 0) for e in range(lo, hi + 1)]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        out = LaurentPoly()
        out._c = c
        return out

    def __neg__(self):
        out = LaurentPoly()
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            out = LaurentPoly()
            out._c = {e: other * v for e, v in self._c.items()}
            return out
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        out = LaurentPoly()
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers: use reciprocal()")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by t^k."""
        out = LaurentPoly()
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def reciprocal(self):
        """Substitute t -> 1/t."""
        out = LaurentPoly()
        out._c = {-e: v for e, v in self._c.items()}
        return out

    def power_substitute(self, k):
        """Substitute t -> t^k, k >= 1."""
        if k < 1:
            raise ValueError("power_substitute requires k >= 1")
        out = LaurentPoly()
        out._c = {e * k: v for e, v in self._c.items()}
        return out

    def eval_rational(self, x):
        """Exact value at a nonzero rational x."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * x**e
        return total

    def eval_gaussian(self, omega):
        """Exact value at a unit-circle point, as a (re, im) Fraction pair.

        Negative exponents use conjugation: on the unit circle
        omega^-1 = conj(omega).
        """
        re0, im0 = omega.gaussian()
        if not self._c:
            return (Fraction(0), Fraction(0))
        lo, hi = min(self._c), max(self._c)
        top = max(hi, 0, -lo)
        powers = [(Fraction(1), Fraction(0))]
        for _ in range(top):
            a, b = powers[-1]
            powers.append((a * re0 - b * im0, a * im0 + b * re0))
        re = Fraction(0)
        im = Fraction(0)
        for e, v in self._c.items():
            a, b = powers[abs(e)]
            if e < 0:
                b = -b
            re += v * a
            im += v * b
        return (re, im)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                term = str(abs(v))
            else:
                t = "t" if e == 1 else f"t^{e}"
                term = t if abs(v) == 1 else f"{abs(v)}*{t}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


def normalize_alexander(p):
    """Unique unit multiple of p with min_deg = 0 and positive top coefficient.

    Alexander polynomials are defined up to +-t^k; this fixes the
    representative.  normalize_alexander(0) = 0.
    """
    if p.is_zero:
        return p
    q = p.shift(-p.min_deg)
    if q.coeff(q.max_deg) < 0:
        q = -q
    return q


class UnitCirclePoint:
    """A point on the unit circle with exact Gaussian-rational coordinates.

    Either omega(s) = ((1 - s^2) + 2s*i) / (1 + s^2) for a rational
    parameter s (the tangent half-angle parametrization: s = tan(theta/2),
    covering everything except -1), or the distinguished point -1.
    omega(0) = 1 and omega(1) = i; s > 0 sweeps the upper half circle.
    """

    __slots__ = ("_s",)

    def __init__(self, s=None, _minus_one=False):
        self._s = None if _minus_one else Fraction(s if s is not None else 0)

    @classmethod
    def from_param(cls, s):
        return cls(Fraction(s))

    @classmethod
    def minus_one(cls):
        return cls(_minus_one=True)

    @classmethod
    def one(cls):
        return cls(Fraction(0))

    @property
    def is_minus_one(self):
        return self._s is None

    @property
    def is_one(self):
        return self._s == 0

    @property
    def param(self):
        if self._s is None:
            raise ValueError("omega = -1 has no rational parameter")
        return self._s

    def gaussian(self):
        """(re, im) as exact Fractions; |omega|^2 == 1 identically."""
        if self._s is None:
            return (Fraction(-1), Fraction(0))
        s = self._s
        d = 1 + s * s
        return ((1 - s * s) / d, 2 * s / d)

    def conjugate(self):
        if self._s is None:
            return self
        return UnitCirclePoint(-self._s)

    def power(self, k):
        """omega^k, re-expressed as a UnitCirclePoint (exact)."""
        if k == 0:
            return UnitCirclePoint.one()
        if self._s is None:
            return UnitCirclePoint.minus_one() if k % 2 else UnitCirclePoint.one()
        re0, im0 = self.gaussian()
        if k < 0:
            im0 = -im0
            k = -k
        re, im = Fraction(1), Fraction(0)
        for _ in range(k):
            re, im = re * re0 - im * im0, re * im0 + im * re0
        return gaussian_to_circle_point(re, im)

    def __eq__(self, other):
        if not isinstance(other, UnitCirclePoint):
            return NotImplemented
        return self._s == other._s

    def __hash__(self):
        return hash(("omega", self._s))

    def __repr__(self):
        if self._s is None:
            return "omega(-1)"
        return f"omega(s={self._s})"


def gaussian_to_circle_point(re, im):
    """Re-parametrize an exact unit-circle Gaussian rational.

    x + i*y with x != -1 equals omega(y / (1 + x)); x = -1 is the
    distinguished point.
    """
    re = Fraction(re)
    im = Fraction(im)
    if re * re + im * im != 1:
        raise ValueError("not on the unit circle")
    if re == -1:
        return UnitCirclePoint.minus_one()
    return UnitCirclePoint.from_param(im / (1 + re))


class IntPoly:
    """Ordinary integer polynomial, dense ascending coefficients.

    Used for the z = t + 1/t substitution and for characteristic
    polynomials.  Leading coefficient is nonzero unless zero polynomial;
    degree of the zero polynomial is -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(int(x) for x in c)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1

    @property
    def is_zero(self):
        return not self._c

    @property
    def leading(self):
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def coeff(self, i):
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        n = max(len(self._c), len(other._c))
        return IntPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return IntPoly([-x for x in self._c])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * x for x in self._c])
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def eval(self, x):
        """Horner evaluation; exact for int or Fraction arguments."""
        total = x * 0
        for c in reversed(self._c):
            total = total * x + c
        return total

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self._c)][1:])

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in range(len(self._c) - 1, -1, -1):
            v = self._c[e]
            if not v:
                continue
            if e == 0:
                term = str(abs(v))
            else:
                t = "z" if e == 1 else f"z^{e}"
                term = t if abs(v) == 1 else f"{abs(v)}*{t}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPoly({self})"


def symmetrize_to_z(p):
    """Rewrite a symmetric Laurent polynomial in the variable z = t + 1/t.

    Requires p(t) = +-t^span * p(1/t) with even span (knot Alexander
    polynomials after normalization).  Returns q with
    p(t) = unit * t^(span/2) * q(t + 1/t), so unit-circle roots of p
    correspond to real roots of q in [-2, 2].  Raises NotSymmetric for
    link-type (antisymmetric) or asymmetric input.
    """
    if p.is_zero:
        raise NotSymmetric("zero polynomial")
    q = normalize_alexander(p)
    span = q.span
    if span % 2:
        raise NotSymmetric("odd span")
    mirrored = normalize_alexander(q.reciprocal())
    if mirrored != q:
        raise NotSymmetric("p(t) is not a unit multiple of t^span * p(1/t)")
    coeffs = q.coeff_list()
    if coeffs != coeffs[::-1]:
        # normalize_alexander makes both ends positive, so a symmetric-up-to-
        # units polynomial that is not palindromic here is antisymmetric.
        raise NotSymmetric("antisymmetric (link-type) polynomial")
    half = span // 2
    # Strip top terms: c * t^(half + d) forces the term c * z^d, whose lift
    # t^half * (t + 1/t)^d = t^(half - d) * (t^2 + 1)^d is palindromic about
    # t^half, so the remainder stays palindromic and its degree drops.
    out = [0] * (half + 1)
    work = q
    while not work.is_zero:
        d = work.max_deg - half
        assert d >= 0, "palindromic remainder lost symmetry"
        c = work.coeff(work.max_deg)
        out[d] = c
        lift = LaurentPoly.one()
        for _ in range(d):
            lift = lift * LaurentPoly({0: 1, 2: 1})
        work = work - c * lift.shift(half - d)
    return IntPoly(out)


def interpolate_int_poly(points):
    """Integer polynomial through (x, y) integer pairs, by Newton's method.

    The divided differences are exact Fractions; the caller guarantees the
    interpolant has integer coefficients (e.g. a determinant with integer
    matrix coefficients), which is asserted.
    """
    xs = [Fraction(x) for x, _ in points]
    n = len(points)
    coef = [Fraction(y) for _, y in points]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        carry = [Fraction(0)] * n
        for i in range(n - 1):
            if poly[i]:
                carry[i + 1] += poly[i]
                carry[i] -= xs[k] * poly[i]
        carry[0] += coef[k]
        poly = carry
    out = []
    for v in poly:
        assert v.denominator == 1, "interpolant is not an integer polynomial"
        out.append(int(v))
    return IntPoly(out)


# ---------------------------------------------------------------------------
# Sturm sequences and real-root isolation


def _frac_poly(coeffs):
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_eval_frac(c, x):
    total = Fraction(0)
    for v in reversed(c):
        total = total * x + v
    return total


def _poly_rem(a, b):
    """Remainder of a by b over the rationals (lists of Fractions)."""
    a = a[:]
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, bv in enumerate(b):
            a[shift + i] -= f * bv
        while a and a[-1] == 0:
            a.pop()
    return a


def _poly_quo(a, b):
    """Exact quotient when b divides a over the rationals."""
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, bv in enumerate(b):
            a[shift + i] -= f * bv
        while a and a[-1] == 0:
            a.pop()
    assert not a, "inexact polynomial division"
    return q


def _poly_gcd(a, b):
    a, b = a[:], b[:]
    while b:
        a, b = b, _poly_rem(a, b)
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def _poly_deriv(c):
    return [i * v for i, v in enumerate(c)][1:]


def squarefree_part(q):
    """q divided by gcd(q, q'), returned as a primitive IntPoly."""
    c = _frac_poly(q.coeffs)
    if len(c) <= 1:
        return IntPoly((1,)) if c else IntPoly()
    g = _poly_gcd(c, _poly_deriv(c))
    if len(g) <= 1:
        part = c
    else:
        part = _poly_quo(c, g)
    den = lcm(*[x.denominator for x in part]) if part else 1
    ints = [int(x * den) for x in part]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content:
        ints = [v // content for v in ints]
    if ints and ints[-1] < 0:
        ints = [-v for v in ints]
    return IntPoly(ints)


def _sturm_chain(coeffs):
    chain = [coeffs]
    d = _poly_deriv(coeffs)
    if d:
        chain.append(d)
        while True:
            r = _poly_rem(chain[-2], chain[-1])
            if not r:
                break
            chain.append([-x for x in r])
    return chain


def _variations(values):
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _chain_variations(chain, x):
    return _variations([_poly_eval_frac(c, x) for c in chain])


def count_real_roots(q, a, b):
    """Number of distinct real roots of q in the half-open interval (a, b]."""
    if q.is_zero:
        raise ValueError("zero polynomial")
    a = Fraction(a)
    b = Fraction(b)
    if a > b:
        raise ValueError("interval endpoints out of order")
    if a == b:
        return 0
    qs = squarefree_part(q)
    c = _frac_poly(qs.coeffs)
    if len(c) <= 1:
        return 0
    root_at_b = _poly_eval_frac(c, b) == 0
    # deflate endpoint roots so the classical Sturm count applies
    for pt in (a, b):
        while c and len(c) > 1 and _poly_eval_frac(c, pt) == 0:
            c = _poly_quo(c, [-pt, Fraction(1)])
    if len(c) <= 1:
        return 1 if root_at_b else 0
    chain = _sturm_chain(c)
    count_open = _chain_variations(chain, a) - _chain_variations(chain, b)
    return count_open + (1 if root_at_b else 0)


def isolate_real_roots(q, a, b):
    """Disjoint rational intervals (lo, hi], one distinct root of q in each.

    Covers the half-open interval (a, b]; intervals are returned sorted.
    Refine with refine_root_interval as needed.
    """
    a = Fraction(a)
    b = Fraction(b)
    out = []

    def rec(lo, hi, k):
        if k == 0:
            return
        if k == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        kl = count_real_roots(q, lo, mid)
        rec(lo, mid, kl)
        rec(mid, hi, k - kl)

    rec(a, b, count_real_roots(q, a, b))
    return out


def refine_root_interval(q, lo, hi, rounds=1):
    """Shrink an isolating interval (lo, hi] by bisection, keeping its root."""
    lo = Fraction(lo)
    hi = Fraction(hi)
    for _ in range(rounds):
        mid = (lo + hi) / 2
        if count_real_roots(q, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


# ---------------------------------------------------------------------------
# Exact signatures of symmetric matrices


_CHARPOLY_SIZE_LIMIT = 12


def charpoly_int(rows):
    """det(x*I - M) of an integer matrix, monic, by evaluation/interpolation.

    Each evaluation is a fraction-free integer determinant, so the whole
    computation stays in exact integers.
    """
    n = len(rows)
    if n == 0:
        return IntPoly.one()
    points = []
    for x in range(n + 1):
        m = [[(x if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
        points.append((x, kernels.det_int(m)))
    p = interpolate_int_poly(points)
    assert p.degree == n and p.leading == 1
    return p


def _descartes_positive(coeffs):
    """Positive roots counted with multiplicity, for real-rooted polynomials."""
    return _variations(coeffs)


def _scale_to_int(rows):
    den = 1
    for row in rows:
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    return [[int(x * den) for x in row] for row in rows]


def _signature_via_charpoly(int_rows):
    p = charpoly_int(int_rows)
    c = list(p.coeffs)
    zero_count = 0
    while c and c[0] == 0:
        c.pop(0)
        zero_count += 1
    pos = _descartes_positive(c)
    neg = _descartes_positive([v if i % 2 == 0 else -v for i, v in enumerate(c)])
    assert pos + neg + zero_count == len(int_rows)
    return pos - neg


def _signature_via_congruence(int_rows):
    pos, neg, _zero = kernels.sym_signature(int_rows)
    return pos - neg


def signature_of_symmetric(rows):
    """Exact signature (#positive - #negative eigenvalues) of a symmetric
    rational matrix.

    Small matrices use the characteristic polynomial (fraction-free
    determinant evaluations) followed by sign-variation root counts, which
    are exact because symmetric matrices are real-rooted; the kernel
    dimension is the number of trailing zero coefficients.  Above
    _CHARPOLY_SIZE_LIMIT an exact congruence diagonalization computes the
    same inertia at O(n^3) instead of O(n^4); the two paths are
    property-tested equal.
    """
    n = len(rows)
    if n == 0:
        return 0
    for i in range(n):
        for j in range(i + 1, n):
            if Fraction(rows[i][j]) != Fraction(rows[j][i]):
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    int_rows = _scale_to_int(rows)
    if n <= _CHARPOLY_SIZE_LIMIT:
        return _signature_via_charpoly(int_rows)
    return _signature_via_congruence(int_rows)
