"""Command-line interface.

Subcommands: validate | move | holestab | classify | enumerate | selftest.
Exit status is 0 on success, 1 on a domain error (bad design, unknown
builtin, missing file, failed validation or selftest), 2 on usage
errors.  JSON output is canonical (sorted keys, two-space indent) and
contains no wall-clock data, so identical invocations produce identical
bytes.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import acceptance
from .classify import classification_report, design_digest, dump_report, signature
from .designs import (BUILTIN_NAMES, Design, builtin, parse_design,
                      serialize_design, validate)
from .enumeration import ENUMERATION_CAP, enumerate_designs
from .moves import hole_stabilizer, move_sequence
from .groups import Group


def _add_design_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="NAME",
                     help="named design: %s" % ", ".join(BUILTIN_NAMES))
    src.add_argument("--file", metavar="PATH", help="design file to read")


def _load_design(args) -> Design:
    if args.builtin:
        return builtin(args.builtin)
    return parse_design(Path(args.file).read_text())


def _emit(args, report: dict, text_lines) -> None:
    if args.json:
        sys.stdout.write(dump_report(report))
    else:
        for line in text_lines:
            print(line)


def _signature_dict(sig) -> dict:
    return {
        "degree": sig.degree,
        "order": str(sig.order),
        "transitive": sig.transitive,
        "primitive": sig.primitive,
        "generously_transitive": sig.generously_transitive,
        "contains_alt": sig.contains_alt,
        "all_even": sig.all_even,
    }


# -- subcommands -------------------------------------------------------------


def _cmd_validate(args) -> int:
    d = _load_design(args)
    rep = validate(d)
    report = {
        "design": {"digest": design_digest(d), "n": d.n, "lambda": d.lam,
                   "lines": len(d.lines)},
        "is_2_design": rep.is_2_design,
        "observed_lambda_range": list(rep.observed_lambda_range),
        "is_simple": rep.is_simple,
        "is_supersimple": rep.is_supersimple,
        "first_violation": rep.first_violation,
        "all_ok": rep.all_ok,
    }
    text = [
        "design: n=%d lambda=%d lines=%d digest=%s" % (d.n, d.lam, len(d.lines),
                                                       design_digest(d)),
        "2-design: %s (lambda range %d..%d)" % (rep.is_2_design,
                                                *rep.observed_lambda_range),
        "simple: %s" % rep.is_simple,
        "supersimple: %s" % rep.is_supersimple,
    ]
    if rep.first_violation:
        text.append("violation: %s" % rep.first_violation)
    text.append("result: %s" % ("VALID" if rep.all_ok else "INVALID"))
    _emit(args, report, text)
    return 0 if rep.all_ok else 1


def _cmd_move(args) -> int:
    d = _load_design(args)
    waypoints = [w - 1 for w in args.waypoints]
    for w in args.waypoints:
        if w < 1:
            raise ValueError("waypoints are 1-based, got %d" % w)
    g = move_sequence(d, waypoints)
    report = {
        "design": {"digest": design_digest(d), "n": d.n, "lambda": d.lam},
        "waypoints": list(args.waypoints),
        "permutation": g.cycle_string(),
        "support_size": len(g.support()),
        "parity": "even" if g.is_even else "odd",
    }
    _emit(args, report, [g.cycle_string()])
    return 0


def _stab_report(d: Design, infinity: int, G: Group) -> dict:
    return classification_report(d, infinity, G)


def _cmd_holestab(args) -> int:
    d = _load_design(args)
    inf = args.infinity - 1
    if args.all_holes:
        holes = []
        sigs = set()
        for x in range(d.n):
            G = hole_stabilizer(d, x)
            sig = signature(G)
            sigs.add((sig.order, tuple(sorted(len(o) for o in G.orbits())),
                      sig.transitive, sig.primitive, sig.generously_transitive,
                      sig.contains_alt, sig.all_even))
            holes.append({
                "infinity": x + 1,
                "order": str(sig.order),
                "orbit_sizes": sorted(len(o) for o in G.orbits()),
                "signature": _signature_dict(sig),
            })
        consistent = len(sigs) == 1
        report = {
            "design": {"digest": design_digest(d), "n": d.n, "lambda": d.lam},
            "holes": holes,
            "signatures_identical": consistent,
        }
        text = ["design: n=%d lambda=%d" % (d.n, d.lam)]
        for h in holes:
            text.append("hole %2s: order %s orbits %s"
                        % (h["infinity"], h["order"], h["orbit_sizes"]))
        text.append("signatures identical across holes: %s" % consistent)
        _emit(args, report, text)
        return 0 if consistent else 1
    G = hole_stabilizer(d, inf)
    report = _stab_report(d, inf, G)
    text = ["design: n=%d lambda=%d digest=%s" % (d.n, d.lam, design_digest(d)),
            "hole: point %d (output on remaining %d points, gap closed)"
            % (args.infinity, d.n - 1),
            "generators (%d):" % len(G.generators)]
    text.extend("  %s" % g.cycle_string() for g in G.generators)
    sig = report["signature"]
    text.append("order: %s" % sig["order"])
    text.append("transitive: %s  primitive: %s  generously transitive: %s"
                % (sig["transitive"], sig["primitive"], sig["generously_transitive"]))
    text.append("contains alternating: %s  all generators even: %s"
                % (sig["contains_alt"], sig["all_even"]))
    text.append("recognized: %s" % report["recognized"])
    _emit(args, report, text)
    return 0


def _cmd_classify(args) -> int:
    d = _load_design(args)
    inf = args.infinity - 1
    G = hole_stabilizer(d, inf)
    report = _stab_report(d, inf, G)
    sig = report["signature"]
    text = ["design: n=%d lambda=%d digest=%s" % (d.n, d.lam, design_digest(d)),
            "hole: point %d" % args.infinity,
            "order: %s  orbits: %s" % (sig["order"], report["orbit_sizes"]),
            "transitive: %s  primitive: %s  generously transitive: %s"
            % (sig["transitive"], sig["primitive"], sig["generously_transitive"]),
            "contains alternating: %s  all even: %s" % (sig["contains_alt"],
                                                        sig["all_even"]),
            "recognized: %s" % report["recognized"]]
    for section, checks in sorted(report["checks"].items()):
        text.append("%s:" % section.replace("_", " "))
        for c in checks:
            line = "  [%s] %s" % (c["status"], c["claim"])
            if c.get("witness"):
                line += " -- %s" % c["witness"]
            text.append(line)
    _emit(args, report, text)
    return 0


def _cmd_enumerate(args) -> int:
    r = enumerate_designs(args.n, args.lam, count_only=args.count_only,
                          classify=args.classify, workers=args.workers,
                          cap=args.cap)
    report = {"n": r.n, "lambda": r.lam, "count": r.count}
    if r.note:
        report["note"] = r.note
    text = ["enumerate n=%d lambda=%d: %d design(s)" % (r.n, r.lam, r.count)]
    if r.note:
        text.append("note: %s" % r.note)
    if r.designs is not None:
        entries = []
        for i, d in enumerate(r.designs):
            entry = {
                "digest": design_digest(d),
                "lines": [[p + 1 for p in line] for line in d.lines],
            }
            text.append("design %d: digest=%s" % (i + 1, design_digest(d)))
            if r.signatures is not None:
                entry["signature"] = _signature_dict(r.signatures[i])
                text.append("  stabilizer order %s, orbit structure via holestab"
                            % r.signatures[i].order)
            entries.append(entry)
        report["designs"] = entries
        if args.out:
            outdir = Path(args.out)
            outdir.mkdir(parents=True, exist_ok=True)
            for d in r.designs:
                path = outdir / ("%s.design" % design_digest(d))
                path.write_text(serialize_design(d))
                text.append("wrote %s" % path)
    _emit(args, report, text)
    return 0


def _cmd_selftest(args) -> int:
    outcomes = acceptance.run_all(seed=args.seed, workers=args.workers,
                                  include_stretch=args.stretch)
    report = {
        "seed": args.seed,
        "criteria": [{
            "id": o.cid,
            "description": o.description,
            "passed": o.passed,
            "detail": o.detail,
        } for o in outcomes],
        "all_passed": all(o.passed for o in outcomes),
    }
    text = [o.line() for o in outcomes]
    text.append("result: %s" % ("ALL PASS" if report["all_passed"] else "FAILURES"))
    _emit(args, report, text)
    return 0 if report["all_passed"] else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supersimple",
        description="Supersimple 2-(n,4,lambda) designs: validation, move "
                    "calculus, hole stabilizers, classification, enumeration.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("validate", help="check the 2-design and supersimplicity properties")
    _add_design_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("move", help="evaluate a move sequence along 1-based waypoints")
    _add_design_source(p)
    p.add_argument("waypoints", nargs="+", type=int, metavar="POINT")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("holestab", help="generators and signature of a hole stabilizer")
    _add_design_source(p)
    p.add_argument("--infinity", type=int, default=1, metavar="P",
                   help="1-based hole point (default 1)")
    p.add_argument("--all-holes", action="store_true",
                   help="compute every hole and check the signatures agree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_holestab)

    p = sub.add_parser("classify", help="signature, recognition, and consistency checks")
    _add_design_source(p)
    p.add_argument("--infinity", type=int, default=1, metavar="P")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="enumerate designs up to isomorphism")
    p.add_argument("n", type=int)
    p.add_argument("lam", type=int, metavar="lambda")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--classify", action="store_true",
                   help="annotate each design with its stabilizer signature")
    p.add_argument("--out", metavar="DIR", help="write one design file per result")
    p.add_argument("--workers", type=int, default=1, metavar="N")
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP, metavar="K",
                   help="point-count cap for enumeration (default %d)" % ENUMERATION_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--workers", type=int, default=1, metavar="N")
    p.add_argument("--stretch", action="store_true",
                   help="include the long n=12 census criterion")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
