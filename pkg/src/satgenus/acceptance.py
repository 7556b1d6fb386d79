"""End-to-end acceptance suite.

Each criterion is a function returning a CriterionResult; run_all drives
them in order and is shared by the `verify-paper` command and the pytest
suite.  Every check is exact (integers and Fractions); randomized criteria
use fixed seeds so reports are reproducible byte for byte.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog
from .bounds import (
    bounds_report,
    cable2q_table,
    galg_upper,
    iterated_cable_arithmetic,
    satellite_bounds,
)
from .exactalg import UnitCirclePoint, normalize_alexander, signature_of_symmetric
from .invariants import (
    branched_cover_homology,
    homology_order_oracle,
    litherland_homology_check,
    litherland_signature_check,
)
from .oracles import signature_by_bisection
from .randomgen import (
    random_certified_companion,
    random_certified_pattern,
    random_symmetric_rational,
)
from .satellite import Pattern, connected_sum, satellite_certificate, satellite_matrix
from .seifert import AbelianGroup, SeifertMatrix, TrivialBlockCertificate, alexander


@dataclass
class CriterionResult:
    key: str
    title: str
    passed: bool
    details: list = field(default_factory=list)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.key}: {self.title}"


def _result(key, title, failures, notes=()):
    details = list(notes) + [f"FAIL: {f}" for f in failures]
    return CriterionResult(key=key, title=title, passed=not failures, details=details)


def _trefoil():
    return SeifertMatrix([[-1, 1], [0, -1]], name="trefoil")


def _empty_pattern(w):
    return Pattern(SeifertMatrix([], name=f"cable_{w}_1"), w, TrivialBlockCertificate.identity(0, 0))


def _random_pair(rng, allow_multicomponent=True):
    pattern = random_certified_pattern(rng, max_half=3, max_winding=5,
                                       allow_multicomponent=allow_multicomponent)
    companion, companion_cert = random_certified_companion(rng, max_half=3)
    return pattern, companion, companion_cert


def criterion_cable_trefoil_genus():
    """(n,1)-cables of the trefoil have topological 4-genus exactly 1."""
    failures = []
    tref = _trefoil()
    cert_t = TrivialBlockCertificate.identity(2, 0)
    for n in range(1, 6):
        report, _sat, _cert = satellite_bounds(_empty_pattern(n), tref, cert_t, g3_hint_companion=1)
        if report.interval("g4top") != (1, 1):
            failures.append(f"n={n}: g4top interval {report.interval('g4top')} != (1, 1)")
    return _result("cable-trefoil-genus", "(n,1)-cables of the trefoil have g4top in [1,1] for n = 1..5",
                   failures)


def criterion_certificate_pipeline():
    """200 random certified satellites: pipeline returns a verified block of
    the predicted size with implied bound g1 + g2."""
    rng = random.Random(0x5A7E11)
    failures = []
    for trial in range(200):
        pattern, companion, companion_cert = _random_pair(rng)
        w = pattern.winding
        m2 = companion.size
        try:
            cert = satellite_certificate(pattern, companion, companion_cert)
        except Exception as e:  # noqa: BLE001 - report, do not abort the suite
            failures.append(f"trial {trial}: pipeline raised {type(e).__name__}: {e}")
            continue
        sat = satellite_matrix(pattern, companion)
        try:
            cert.verify(sat)
        except Exception as e:  # noqa: BLE001
            failures.append(f"trial {trial}: returned certificate fails verification: {e}")
            continue
        expected_block = pattern.certificate.block_size + (w - 1) * m2 + companion_cert.block_size
        if cert.block_size != expected_block:
            failures.append(f"trial {trial}: block {cert.block_size} != expected {expected_block}")
            continue
        g1 = pattern.certificate.implied_bound(pattern.matrix)
        g2 = companion_cert.implied_bound(companion)
        if galg_upper(sat, cert) != g1 + g2:
            failures.append(f"trial {trial}: implied bound {galg_upper(sat, cert)} != {g1 + g2}")
    return _result("certificate-pipeline", "200 random satellites produce verified certificates of the predicted size",
                   failures, [f"failures: {len(failures)}/200"])


def criterion_alexander_identity():
    """Delta_satellite = Delta_pattern-closure * Delta_companion(t^w), on the
    200 random draws and on all catalog pairs."""
    rng = random.Random(0x5A7E11)
    failures = []
    pairs = []
    for _ in range(200):
        pattern, companion, _cert = _random_pair(rng)
        pairs.append((pattern, companion, "random"))
    for pf in catalog.all_patterns():
        pat, _notes = pf.to_pattern()
        for kf in catalog.all_knots():
            pairs.append((pat, kf.seifert_matrix, f"{pf.name} on {kf.name}"))
    for idx, (pattern, companion, label) in enumerate(pairs):
        w = abs(pattern.winding)
        sat = satellite_matrix(pattern, companion)
        lhs = alexander(sat)
        rhs = alexander(pattern.matrix)
        if w >= 1:
            rhs = rhs * alexander(companion).power_substitute(w)
        if lhs != normalize_alexander(rhs):
            failures.append(f"pair {idx} ({label}): {lhs} != normalize({rhs})")
    return _result("alexander-identity", "satellite Alexander polynomial factors exactly (200 random + catalog pairs)",
                   failures, [f"pairs checked: {len(pairs)}"])


_SAMPLE_POOL = (1, 2, Fraction(1, 2), 3, Fraction(1, 3), Fraction(3, 2), Fraction(2, 3),
                4, Fraction(1, 4), 5, Fraction(2, 5), Fraction(5, 3))


def criterion_signature_identity():
    """sigma_omega(satellite) = sigma_omega(pattern closure) + sigma_{omega^w}(companion)
    at >= 5 regular samples on 50 random pairs."""
    rng = random.Random(0xC0FFEE)
    failures = []
    skipped_total = 0
    for trial in range(50):
        pattern, companion, _cert = _random_pair(rng, allow_multicomponent=False)
        samples = [UnitCirclePoint.from_param(s) for s in _SAMPLE_POOL] + [UnitCirclePoint.minus_one()]
        report = litherland_signature_check(pattern, companion, samples)
        skipped_total += report.skipped
        if report.checked < 5:
            failures.append(f"trial {trial}: only {report.checked} regular samples")
            continue
        if not report.passed:
            bad = [s for s in report.samples if s.status == "ok" and not s.holds]
            failures.append(
                f"trial {trial}: w={report.winding} counterexample at {bad[0].omega!r}: "
                f"{bad[0].satellite_value} != {bad[0].pattern_value} + {bad[0].companion_value}"
            )
    return _result("signature-identity", "satellite signature additivity at >= 5 regular samples on 50 random pairs",
                   failures, [f"irregular samples skipped (logged): {skipped_total}"])


def criterion_two_cable_table():
    """Two-cable closed forms: named tight/non-tight rows, the three-way
    tightness equivalence on odd 3 <= p, q <= 15, and the g4sm column."""
    failures = []
    odd = range(3, 16, 2)
    rows = {(r.p, r.q): r for r in cable2q_table(list(odd), list(odd))}
    for p, q in [(3, 5), (5, 5), (7, 5), (9, 5), (3, 7)]:
        if not rows[(p, q)].tight:
            failures.append(f"(p,q)=({p},{q}) should be tight")
    if rows[(5, 7)].tight:
        failures.append("(p,q)=(5,7) should not be tight")
    for (p, q), r in rows.items():
        if r.g4sm != (q - 1) // 2 + p - 1:
            failures.append(f"(p,q)=({p},{q}) g4sm {r.g4sm} != (q-1)/2 + p - 1")
        # three-way equivalence: floor(q/4 - q/2p) = 0 iff 1/2 < 1/p + 2/q,
        # and (on its q >= 5 domain of validity) iff floor(p/2 - 2p/q) = 0
        crit = Fraction(1, 2) < Fraction(1, p) + Fraction(2, q)
        f1 = (Fraction(q, 4) - Fraction(q, 2 * p)).__floor__()
        f2 = (Fraction(p, 2) - Fraction(2 * p, q)).__floor__()
        if (f1 == 0) != crit:
            failures.append(f"(p,q)=({p},{q}) first floor {f1} breaks the equivalence")
        if q >= 5 and (f2 == 0) != crit:
            failures.append(f"(p,q)=({p},{q}) second floor {f2} breaks the equivalence")
        if r.tight != crit:
            failures.append(f"(p,q)=({p},{q}) tight flag {r.tight} != criterion {crit}")
    return _result("two-cable-table", "two-cable table rows and tightness equivalence for odd 3 <= p,q <= 15",
                   failures, [f"rows checked: {len(rows)}"])


def criterion_iterated_cables():
    """Iterated cable arithmetic: recursion equals closed forms for p <= 9,
    n <= 6; p=3, n=1 gives g3 = 5 and upper bound 4; ratios approach 2/3."""
    failures = []
    for p in (3, 5, 7, 9):
        try:
            rep = iterated_cable_arithmetic(p, 6)
        except AssertionError as e:
            failures.append(f"p={p}: {e}")
            continue
        if any(r2 >= r1 for r1, r2 in zip(rep.ratios, rep.ratios[1:])):
            failures.append(f"p={p}: ratio sequence not strictly decreasing: {rep.ratios}")
        if rep.ratios[-1] > Fraction(7, 10):
            failures.append(f"p={p}: ratio at n=6 is {rep.ratios[-1]} > 0.7")
        if any(r <= Fraction(2, 3) for r in rep.ratios):
            failures.append(f"p={p}: a ratio crossed below the 2/3 limit: {rep.ratios}")
    rep31 = iterated_cable_arithmetic(3, 1)
    if rep31.g3 != 5 or rep31.gz_upper != 4:
        failures.append(f"p=3, n=1: (g3, gz_upper) = ({rep31.g3}, {rep31.gz_upper}) != (5, 4)")
    rep32 = iterated_cable_arithmetic(3, 2)
    if rep32.c_sequence != (3, 13, 53) or rep32.g3 != 23 or rep32.gz_upper != 17:
        failures.append(f"p=3, n=2 values off: {rep32}")
    return _result("iterated-cables", "iterated-cable recursion matches closed forms; ratios approach 2/3",
                   failures)


def criterion_branched_covers():
    """Named double/triple cover groups, and presentation order == resultant
    oracle for all catalog knots at n in {2,3,4,5,7,8,9}."""
    failures = []
    tref = _trefoil()
    fig8 = SeifertMatrix([[1, 1], [0, -1]], name="figure8")
    named = [
        (tref, 2, AbelianGroup((3,))),
        (fig8, 2, AbelianGroup((5,))),
        (tref, 3, AbelianGroup((2, 2))),
    ]
    for v, n, expect in named:
        got = branched_cover_homology(v, n)
        if got != expect:
            failures.append(f"H1(Sigma_{n}({v.name})) = {got} != {expect}")
    checked = 0
    for kf in catalog.all_knots():
        v = kf.seifert_matrix
        for n in (2, 3, 4, 5, 7, 8, 9):
            group = branched_cover_homology(v, n)
            oracle = homology_order_oracle(v, n)
            if group.order() != oracle:
                failures.append(f"{kf.name}, n={n}: presentation order {group.order()} != oracle {oracle}")
            checked += 1
    return _result("branched-covers", "double/triple cover groups and order oracle across the catalog",
                   failures, [f"(knot, n) pairs checked: {checked}"])


def criterion_homology_decomposition():
    """Branched-cover homology of a satellite decomposes as the pattern
    closure part plus gcd(w, n) companion parts."""
    failures = []
    tref = _trefoil()
    p21 = _empty_pattern(2)
    for n in (2, 3):
        rep = litherland_homology_check(p21, tref, n)
        if not rep.passed:
            failures.append(f"(C_2,1, trefoil) n={n}: {rep.satellite_group} != {rep.combined}")
    rng = random.Random(0xAB1E)
    for trial in range(20):
        pattern, companion, _cert = _random_pair(rng, allow_multicomponent=False)
        n = rng.choice((2, 3, 4, 5))
        rep = litherland_homology_check(pattern, companion, n)
        if not rep.passed:
            failures.append(
                f"trial {trial}: w={pattern.winding}, n={n}: {rep.satellite_group} != {rep.combined}"
            )
    return _result("homology-decomposition", "satellite branched-cover homology decomposes (named + 20 random pairs)",
                   failures)


def criterion_signature_oracle():
    """signature_of_symmetric agrees with interval-bisection brute force on
    500 random rational symmetric matrices up to 6x6."""
    rng = random.Random(0x516)
    failures = []
    for trial in range(500):
        n = rng.randint(1, 6)
        m = random_symmetric_rational(rng, n)
        a = signature_of_symmetric(m)
        b = signature_by_bisection(m)
        if a != b:
            failures.append(f"trial {trial}: {a} != oracle {b} on {m}")
    return _result("signature-oracle", "exact signature agrees with bisection oracle on 500 random matrices",
                   failures)


def criterion_degenerate_ladder():
    """w = 0 satellites equal the pattern matrix; w = 1 satellites have the
    connected-sum Alexander polynomial; trivial Alexander forces gZ = 0."""
    failures = []
    rng = random.Random(0xD1CE)
    for trial in range(20):
        pattern, companion, companion_cert = _random_pair(rng, allow_multicomponent=False)
        p0 = Pattern(pattern.matrix, 0, pattern.certificate)
        if satellite_matrix(p0, companion) != pattern.matrix:
            failures.append(f"trial {trial}: w=0 satellite differs from the pattern matrix")
        p1 = Pattern(pattern.matrix, 1, pattern.certificate)
        sat1 = satellite_matrix(p1, companion)
        total, _ = connected_sum(pattern.matrix, companion)
        if alexander(sat1) != alexander(total):
            failures.append(f"trial {trial}: w=1 satellite Alexander differs from connected sum")
    stab = SeifertMatrix([[0, 1], [0, 0]], name="unknot_stab")
    rep = bounds_report(stab, g3_hint=0)
    if rep.interval("gZ") != (0, 0):
        failures.append(f"trivial Alexander: gZ interval {rep.interval('gZ')} != (0, 0)")
    from .seifert import congruence

    plain = SeifertMatrix([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 2]], name="trivial4")
    big = congruence(plain, [[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]])
    if not alexander(big).is_one:
        failures.append("scrambled trivial-block sum should have trivial Alexander polynomial")
    else:
        rep2 = bounds_report(big)
        if rep2.interval("gZ") != (0, 0):
            failures.append(f"trivial Alexander 4x4: gZ interval {rep2.interval('gZ')} != (0, 0)")
    return _result("degenerate-ladder", "w = 0 / w = 1 degenerate satellites and trivial-Alexander gZ = 0",
                   failures)


CRITERIA = (
    ("cable-trefoil-genus", criterion_cable_trefoil_genus),
    ("certificate-pipeline", criterion_certificate_pipeline),
    ("alexander-identity", criterion_alexander_identity),
    ("signature-identity", criterion_signature_identity),
    ("two-cable-table", criterion_two_cable_table),
    ("iterated-cables", criterion_iterated_cables),
    ("branched-covers", criterion_branched_covers),
    ("homology-decomposition", criterion_homology_decomposition),
    ("signature-oracle", criterion_signature_oracle),
    ("degenerate-ladder", criterion_degenerate_ladder),
)


def run_all(name_filter=None):
    """Run every criterion (optionally filtered by substring) in order."""
    results = []
    for key, fn in CRITERIA:
        if name_filter and name_filter not in key:
            continue
        results.append(fn())
    return results
