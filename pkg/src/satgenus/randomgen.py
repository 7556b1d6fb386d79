"""Deterministic random generators for valid Seifert matrices, patterns,
and certificates.

Every valid knot matrix is congruent to Y + H with Y symmetric and H a
direct sum of blocks [[0, 1], [0, 0]] (the skew part is then the standard
symplectic form), so sampling Y and a random unimodular congruence sweeps
the whole class; a coupled trivial summand with a recorded inverse change
of basis yields matrices with known certificates.  Used by the acceptance
runner and the test suite; all functions take an explicit random.Random.
"""

from . import matrixops as mo
from .satellite import Pattern
from .seifert import SeifertMatrix, TrivialBlockCertificate


def random_unimodular_ops(rng, n, ops=None, max_coeff=2):
    """Unimodular U as a product of elementary operations, returned together
    with its exact inverse (the reversed inverse operations)."""
    if ops is None:
        ops = max(2 * n, 2)
    u = mo.identity(n)
    inv = mo.identity(n)
    applied = []
    for _ in range(ops):
        kind = rng.choice(("add", "swap", "neg")) if n >= 2 else "neg"
        if kind == "add":
            i, j = rng.sample(range(n), 2)
            c = rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c])
            applied.append(("add", i, j, c))
        elif kind == "swap":
            i, j = rng.sample(range(n), 2)
            applied.append(("swap", i, j, 0))
        else:
            i = rng.randrange(n) if n else 0
            applied.append(("neg", i, 0, 0))
    for tag, i, j, c in applied:
        if tag == "add":
            u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        elif tag == "swap":
            u[i], u[j] = u[j], u[i]
        elif n:
            u[i] = [-x for x in u[i]]
    for tag, i, j, c in reversed(applied):
        if tag == "add":
            inv[i] = [x - c * y for x, y in zip(inv[i], inv[j])]
        elif tag == "swap":
            inv[i], inv[j] = inv[j], inv[i]
        elif n:
            inv[i] = [-x for x in inv[i]]
    # applied ops compose left-to-right on the left: u = E_k ... E_1, so the
    # inverse composes in reverse order on the right of the identity
    return u, inv


def random_alexander_trivial(rng, half, max_entry=2):
    """Random Alexander-trivial matrix of size 2 * half.

    Direct sums of [[0, 1], [0, x]] are Alexander trivial (each block has
    det(tB - B^T) = t), and triviality is a congruence invariant."""
    blocks = []
    for _ in range(half):
        x = rng.randint(-max_entry, max_entry)
        blocks.append([[0, 1], [0, x]])
    base = mo.block_diag(*blocks) if blocks else []
    u, _ = random_unimodular_ops(rng, 2 * half, ops=2 * half, max_coeff=1)
    return mo.congruence_rows(u, base) if half else []


def random_core(rng, genus, extra_components=0, max_entry=2):
    """Random valid Seifert matrix rows: symmetric noise plus the standard
    block sum, so the skew part is symplectic (+) zero of the right corank."""
    m = 2 * genus + extra_components
    h = mo.block_diag(*([[[0, 1], [0, 0]]] * genus + [[[0]]] * extra_components)) if m else []
    y = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            y[i][j] = y[j][i] = rng.randint(-max_entry, max_entry)
    return mo.mat_add(y, h) if m else []


def random_certified_matrix(rng, trivial_half, genus, components=1, name=None):
    """(SeifertMatrix, TrivialBlockCertificate): a valid matrix of size
    2 * (trivial_half + genus) + components - 1 whose certificate exhibits a
    trivial block of size 2 * trivial_half, so the implied bound is genus."""
    t_rows = random_alexander_trivial(rng, trivial_half)
    core = random_core(rng, genus, components - 1)
    base = mo.block_diag(t_rows, core)
    m = len(base)
    u, u_inv = random_unimodular_ops(rng, m)
    scrambled = mo.congruence_rows(u, base)
    v = SeifertMatrix(scrambled, components, name)
    cert = TrivialBlockCertificate(u_inv, 2 * trivial_half)
    return v, cert


def random_knot_matrix(rng, genus, max_entry=2, name=None):
    """Random valid knot matrix of size 2 * genus (no certificate)."""
    core = random_core(rng, genus, 0, max_entry)
    m = len(core)
    u, _ = random_unimodular_ops(rng, m)
    return SeifertMatrix(mo.congruence_rows(u, core) if m else [], 1, name)


def random_certified_pattern(rng, max_half=3, max_winding=5, allow_multicomponent=True, min_winding=1):
    """Random Pattern with a certificate; winding in [min_winding, max_winding]."""
    components = 2 if (allow_multicomponent and rng.random() < 0.2) else 1
    budget = max_half - (components - 1)
    trivial_half = rng.randint(0, max(budget, 0))
    genus = rng.randint(0, max(budget - trivial_half, 0))
    v, cert = random_certified_matrix(rng, trivial_half, genus, components)
    w = rng.randint(min_winding, max_winding)
    return Pattern(v, w, cert)


def random_certified_companion(rng, max_half=3):
    """Random certified knot matrix (size up to 2 * max_half)."""
    trivial_half = rng.randint(0, max_half)
    genus = rng.randint(0, max_half - trivial_half)
    return random_certified_matrix(rng, trivial_half, genus, 1)


def random_symmetric_rational(rng, n, max_num=9, max_den=9):
    """Random symmetric matrix with Fraction entries."""
    from fractions import Fraction

    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    return a
