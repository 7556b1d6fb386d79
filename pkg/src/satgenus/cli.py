"""Command-line interface.

Subcommands operate on knot/pattern JSON files or built-in catalog names;
every subcommand prints a human-readable table and, with --json, a
deterministic machine report (exact integers and "p/q" strings only).
Exit codes: 0 success, 1 verification or assertion failure, 2 input error.
"""

import argparse
import json
import math
import sys
from fractions import Fraction

from . import acceptance, catalog
from .bounds import bounds_report, cable2q_table, iterated_cable_arithmetic, satellite_bounds
from .errors import FormatError, SatGenusError, ValidationError
from .exactalg import UnitCirclePoint
from .fileio import KnotFile, knot_to_dict, save_knot
from .invariants import branched_cover_homology, signature_at, signature_profile
from .satellite import cable_matrix, satellite_certificate, satellite_matrix
from .seifert import alexander


def _frac_str(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _poly_json(p):
    return {str(e): c for e, c in p.items()}


def _emit(args, human_lines, payload):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in human_lines:
            print(line)


def _parse_omega(text):
    if text == "-1":
        return UnitCirclePoint.minus_one()
    if text.startswith("s="):
        text = text[2:]
    return UnitCirclePoint.from_param(Fraction(text))


def cmd_alexander(args):
    kf = catalog.resolve_knot(args.knot)
    poly = alexander(kf.seifert_matrix)
    _emit(args, [str(poly)], {"name": kf.name, "alexander": _poly_json(poly)})
    return 0


def cmd_signature(args):
    kf = catalog.resolve_knot(args.knot)
    v = kf.seifert_matrix
    if args.profile:
        prof = signature_profile(v)
        lines = [f"signature profile of {kf.name} (theta/pi from 0 to 1):"]
        arcs_payload = []
        for arc in prof.arcs:
            lo = "0" if arc.lower is None else f"jump ({_frac_str(arc.lower.z_low)}, {_frac_str(arc.lower.z_high)}]"
            hi = "1" if arc.upper is None else f"jump ({_frac_str(arc.upper.z_low)}, {_frac_str(arc.upper.z_high)}]"
            approx = _theta_approx(arc)
            lines.append(f"  arc {lo} .. {hi}{approx}: sigma = {arc.value}  (sample s = {_frac_str(arc.sample)})")
            arcs_payload.append(
                {
                    "lower_z": None if arc.lower is None else [_frac_str(arc.lower.z_low), _frac_str(arc.lower.z_high)],
                    "upper_z": None if arc.upper is None else [_frac_str(arc.upper.z_low), _frac_str(arc.upper.z_high)],
                    "sample_s": _frac_str(arc.sample),
                    "value": arc.value,
                }
            )
        lines.append(f"  max |sigma| = {prof.max_abs}")
        _emit(args, lines, {"name": kf.name, "arcs": arcs_payload, "max_abs": prof.max_abs})
        return 0
    omega = _parse_omega(args.at)
    value = signature_at(v, omega)
    label = "-1" if omega.is_minus_one else f"s={_frac_str(omega.param)}"
    _emit(args, [f"sigma({label}) = {value}"], {"name": kf.name, "omega": label, "signature": value})
    return 0


def _theta_approx(arc):
    # display only: approximate theta/pi endpoints from the exact z-intervals
    def theta(jump):
        z = (jump.z_low + jump.z_high) / 2
        return math.acos(max(-1.0, min(1.0, float(z) / 2))) / math.pi

    lo = 0.0 if arc.lower is None else theta(arc.lower)
    hi = 1.0 if arc.upper is None else theta(arc.upper)
    return f" [~({lo:.4f}, {hi:.4f})]"


def cmd_homology(args):
    kf = catalog.resolve_knot(args.knot)
    group = branched_cover_homology(kf.seifert_matrix, args.n)
    _emit(
        args,
        [f"H1 of the {args.n}-fold branched cover of {kf.name}: {group}"],
        {
            "name": kf.name,
            "cover": args.n,
            "invariant_factors": list(group.factors),
            "free_rank": group.free_rank,
            "order": group.order(),
        },
    )
    return 0


def _load_pattern_arg(args):
    pf = catalog.resolve_pattern(args.pattern)
    pat, notes = pf.to_pattern()
    for note in notes:
        print(f"note: {note}", file=sys.stderr)
    return pf, pat


def cmd_satellite(args):
    pf, pat = _load_pattern_arg(args)
    kf = catalog.resolve_knot(args.companion)
    sat = satellite_matrix(pat, kf.seifert_matrix)
    block = None
    if args.certificate:
        # undeclared blocks default to the always-valid size-0 certificate
        from .satellite import Pattern
        from .seifert import SeifertMatrix, TrivialBlockCertificate

        if pat.certificate is None:
            pat = Pattern(pat.matrix, pat.winding, TrivialBlockCertificate.identity(pat.matrix.size, 0))
        comp_cert = kf.certificate() or TrivialBlockCertificate.identity(kf.seifert_matrix.size, 0)
        cert = satellite_certificate(pat, kf.seifert_matrix, comp_cert)
        sat_rows = cert.apply(sat)
        sat = SeifertMatrix(sat_rows, sat.components, sat.name)
        block = cert.block_size
    name = f"{pf.name}({kf.name})"
    out = KnotFile(name=name, components=sat.components, seifert_matrix=sat, trivial_block_size=block)
    save_knot(out, args.output)
    lines = [f"wrote {args.output}: {sat.size}x{sat.size} satellite matrix"]
    if block is not None:
        lines.append(f"with verified trivial block of size {block}")
    _emit(args, lines, {"output": args.output, **knot_to_dict(out)})
    return 0


def cmd_cable(args):
    kf = catalog.resolve_knot(args.companion)
    cab = cable_matrix(args.w, kf.seifert_matrix)
    name = f"cable_{args.w}_1({kf.name})"
    out = KnotFile(name=name, components=1, seifert_matrix=cab)
    save_knot(out, args.output)
    _emit(args, [f"wrote {args.output}: {cab.size}x{cab.size} cable matrix"],
          {"output": args.output, **knot_to_dict(out)})
    return 0


def cmd_bounds(args):
    kf = catalog.resolve_knot(args.knot)
    report = bounds_report(
        kf.seifert_matrix,
        certificate=kf.certificate(),
        g3_hint=kf.g3_hint,
        search_depth=args.search_depth,
        search_coeff=args.search_coeff,
    )
    lines = [f"genus bounds for {kf.name}:"]
    payload = {"name": kf.name, "intervals": {}, "provenance": []}
    for target in ("g4top", "gZ", "galg", "g3"):
        lo, hi = report.interval(target)
        lines.append(f"  {target:6s} in [{_frac_str(lo)}, {_frac_str(hi)}]")
        payload["intervals"][target] = [_frac_str(lo), _frac_str(hi)]
    for rec in report.provenance:
        lines.append(f"    {rec.side:5s} {rec.target:6s} {_frac_str(rec.value):>4s}  {rec.source}: {rec.note}")
        payload["provenance"].append(
            {"target": rec.target, "side": rec.side, "value": _frac_str(rec.value),
             "source": rec.source, "note": rec.note}
        )
    _emit(args, lines, payload)
    return 0


def cmd_table(args):
    if args.kind == "cable2q":
        p_lo, p_hi = args.p
        q_lo, q_hi = args.q
        rows = cable2q_table(range(p_lo, p_hi + 1, 2), range(q_lo, q_hi + 1, 2))
        lines = ["  p   q   g3  g4sm  gz_upper  sig_lower  tight"]
        payload = []
        for r in rows:
            lines.append(
                f"{r.p:3d} {r.q:3d} {r.g3:4d} {r.g4sm:5d}  {_frac_str(r.gz_upper):>8s}  {_frac_str(r.sig_lower):>9s}  {r.tight}"
            )
            payload.append(
                {"p": r.p, "q": r.q, "g3": r.g3, "g4sm": r.g4sm,
                 "gz_upper": _frac_str(r.gz_upper), "sig_lower": _frac_str(r.sig_lower), "tight": r.tight}
            )
        _emit(args, lines, payload)
        return 0
    rep = iterated_cable_arithmetic(args.p[0], args.n)
    lines = [
        f"iterated 2-cables of the (2,{rep.p}) torus knot, {rep.n} levels:",
        f"  cable lengths: {rep.c_sequence}",
        f"  g3 = {rep.g3}, genus upper bound = {rep.gz_upper}",
        "  ratios: " + ", ".join(_frac_str(r) for r in rep.ratios),
    ]
    payload = {
        "p": rep.p, "n": rep.n, "c_sequence": list(rep.c_sequence),
        "g3": rep.g3, "gz_upper": rep.gz_upper, "ratios": [_frac_str(r) for r in rep.ratios],
    }
    _emit(args, lines, payload)
    return 0


def cmd_catalog(args):
    if args.action == "list":
        names = catalog.list_names()
        lines = [f"  {name:14s} {kind}" for name, kind in names]
        _emit(args, lines, [{"name": n, "kind": k} for n, k in names])
        return 0
    try:
        kf = catalog.knot(args.name)
        payload = knot_to_dict(kf)
    except FormatError:
        from .fileio import pattern_to_dict

        pf = catalog.pattern(args.name)
        payload = pattern_to_dict(pf)
    _emit(args, [json.dumps(payload, indent=2)], payload)
    return 0


def cmd_verify_paper(args):
    results = acceptance.run_all(args.filter)
    if not results:
        print(f"no criteria match filter {args.filter!r}", file=sys.stderr)
        return 2
    payload = []
    ok = True
    for res in results:
        print(res.line())
        if args.verbose or not res.passed:
            for d in res.details:
                print(f"    {d}")
        ok = ok and res.passed
        payload.append({"key": res.key, "title": res.title, "passed": res.passed, "details": res.details})
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    return 0 if ok else 1


def _parse_range(text):
    if ":" in text:
        lo, hi = text.split(":", 1)
        return (int(lo), int(hi))
    v = int(text)
    return (v, v)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="satgenus",
        description="Exact Seifert-matrix computations for satellite and cable knots",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit a machine-readable report")
        return p

    p = add("alexander", cmd_alexander, "normalized Alexander polynomial")
    p.add_argument("knot", help="knot file or catalog name")

    p = add("signature", cmd_signature, "signature at a point or the full profile")
    p.add_argument("knot")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--at", help="rational parameter s=p/q (omega on the unit circle), or -1")
    group.add_argument("--profile", action="store_true", help="complete signature step function")

    p = add("homology", cmd_homology, "branched cover homology")
    p.add_argument("knot")
    p.add_argument("-n", type=int, required=True, help="cover order (>= 2)")

    p = add("satellite", cmd_satellite, "build a satellite matrix")
    p.add_argument("--pattern", required=True)
    p.add_argument("--companion", required=True)
    p.add_argument("--certificate", action="store_true",
                   help="run the certificate pipeline and write the certified basis")
    p.add_argument("-o", "--output", required=True)

    p = add("cable", cmd_cable, "build a (w,1)-cable matrix")
    p.add_argument("-w", type=int, required=True)
    p.add_argument("--companion", required=True)
    p.add_argument("-o", "--output", required=True)

    p = add("bounds", cmd_bounds, "aggregate genus bounds")
    p.add_argument("knot")
    p.add_argument("--search-depth", type=int, default=2)
    p.add_argument("--search-coeff", type=int, default=1)

    p = add("table", cmd_table, "closed-form cable tables")
    p.add_argument("kind", choices=("cable2q", "iterated"))
    p.add_argument("--p", type=_parse_range, default=(3, 9), help="odd range lo:hi")
    p.add_argument("--q", type=_parse_range, default=(1, 9), help="odd range lo:hi")
    p.add_argument("--n", type=int, default=4, help="iteration depth (iterated table)")

    p = add("catalog", cmd_catalog, "list or show built-in fixtures")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")

    p = add("verify-paper", cmd_verify_paper, "run the full acceptance suite")
    p.add_argument("--filter", help="run only criteria whose key contains this substring")
    p.add_argument("-v", "--verbose", action="store_true")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FormatError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SatGenusError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
