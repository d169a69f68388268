"""Signatures of hole stabilizers, name recognition, and consistency checks.

The checks encode two layers of expectations about hole stabilizers of
supersimple 2-(n,4,lambda) designs: four general bounds tying n and
lambda to transitivity properties, and a reference classification table
for lambda = 3.  Each claim is reported as "holds", "violated", or
"not-applicable" (hypothesis fails), with a witness string for
violations, so a report is evidence rather than a bare verdict.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from math import factorial
from typing import Optional

from .designs import Design, serialize_design
from .groups import Group


@dataclass(frozen=True)
class Signature:
    """Isomorphism-insensitive fingerprint of a permutation group action."""

    degree: int
    order: int
    transitive: bool
    primitive: Optional[bool]  # None when intransitive: blocks are undefined
    generously_transitive: bool
    contains_alt: bool
    all_even: bool


def signature(G: Group) -> Signature:
    transitive = G.is_transitive()
    return Signature(
        degree=G.degree,
        order=G.order(),
        transitive=transitive,
        primitive=G.is_primitive() if transitive else None,
        generously_transitive=G.is_generously_transitive(),
        contains_alt=G.contains_alternating(),
        all_even=all(g.is_even for g in G.generators),
    )


# Named groups that arise as hole stabilizers, keyed by (degree, order).
# SL4(2) and Alt(8) share order 20160 on 15 points; the order alone
# cannot separate them, so the name says so.
_NAME_TABLE = {
    (8, 288): "Alt(4) wr C2",
    (12, 95040): "M12",
    (12, 7920): "M11",
    (15, 20160): "SL4(2) or Alt(8) (ambiguous by order)",
    (15, 720): "Sym(6)",
    (15, 2520): "Alt(7)",
    (15, 360): "Alt(6)",
}


def recognize(sig: Signature) -> str:
    """Name a group from (degree, order) alone; "unrecognized" if unknown."""
    m, order = sig.degree, sig.order
    if order == 1:
        return "trivial"
    if (m, order) in _NAME_TABLE:
        return _NAME_TABLE[(m, order)]
    if order == factorial(m):
        return "Sym(%d)" % m
    if 2 * order == factorial(m):
        return "Alt(%d)" % m
    return "unrecognized"


@dataclass(frozen=True)
class ClaimCheck:
    claim: str
    status: str  # "holds" | "violated" | "not-applicable"
    witness: Optional[str] = None


@dataclass(frozen=True)
class ConsistencyReport:
    checks: tuple

    @property
    def violated(self) -> tuple:
        return tuple(c for c in self.checks if c.status == "violated")

    @property
    def ok(self) -> bool:
        return not self.violated


def _claim(claim: str, applies: bool, holds: bool, witness: str = None) -> ClaimCheck:
    if not applies:
        return ClaimCheck(claim, "not-applicable")
    if holds:
        return ClaimCheck(claim, "holds")
    return ClaimCheck(claim, "violated", witness)


def check_stabilizer_bounds(n: int, lam: int, sig: Signature) -> ConsistencyReport:
    """Four bounds relating (n, lambda) to hole-stabilizer behavior.

    All comparisons are exact integer arithmetic: n > 24*lam/7 + 1 is
    evaluated as 7*(n-1) > 24*lam, and so on.  The alternating-group
    bound admits one exception: lambda = 1 with the Mathieu group M12.
    """
    checks = []
    checks.append(_claim(
        "transitivity-bound",
        applies=7 * (n - 1) > 24 * lam,
        holds=sig.transitive,
        witness="n=%d forces transitivity but the group has multiple orbits" % n,
    ))
    checks.append(_claim(
        "primitivity-bound",
        applies=n > 9 * lam - 6,
        holds=bool(sig.transitive and sig.primitive),
        witness="n=%d forces primitivity but the group is %s" % (
            n, "intransitive" if not sig.transitive else "imprimitive"),
    ))
    checks.append(_claim(
        "generous-transitivity-bound",
        applies=n >= 10 * lam - 5,
        holds=sig.generously_transitive,
        witness="n=%d forces generous transitivity but some pair cannot be swapped" % n,
    ))
    checks.append(_claim(
        "alternating-bound",
        applies=n > 9 * lam * lam - 12 * lam + 5,
        holds=sig.contains_alt or (lam == 1 and recognize(sig) == "M12"),
        witness="n=%d forces the alternating group (or the lambda=1 M12 exception), "
                "got order %d" % (n, sig.order),
    ))
    return ConsistencyReport(tuple(checks))


# Rows of the lambda=3 classification: for each degree-n stabilizer not
# containing Alt(n-1), the permitted (transitivity class, order) pairs.
# Orders are pinned where the classification is complete; None means
# the row is permitted but no example is classified ("?" rows).
_L3_IMPRIMITIVE = {9: (288,), 13: None, 16: None, 17: None, 21: None}
_L3_PRIMITIVE = {13: (95040, 7920), 16: (20160, 720, 2520, 360), 17: None}


def check_lambda3_classification(n: int, sig: Signature) -> ConsistencyReport:
    """Check a lambda=3 hole stabilizer against the reference table.

    Either the group contains Alt(n-1), or it must match a permitted
    row: intransitive only for n=8 with the trivial group; imprimitive
    only for n in {9,13,16,17,21} (order 288 at n=9); primitive only
    for n in {13,16,17} with the tabulated orders.  Thresholds: n > 11
    forces transitivity, n > 21 primitivity, n > 50 the full
    alternating group.  All generators must be even.
    """
    checks = []
    checks.append(_claim(
        "even-subgroup",
        applies=True,
        holds=sig.all_even,
        witness="an odd generator exists, impossible for lambda=3 moves",
    ))
    checks.append(_claim(
        "transitivity-threshold",
        applies=n > 11,
        holds=sig.transitive,
        witness="n=%d > 11 forces transitivity" % n,
    ))
    checks.append(_claim(
        "primitivity-threshold",
        applies=n > 21,
        holds=bool(sig.transitive and sig.primitive),
        witness="n=%d > 21 forces primitivity" % n,
    ))
    checks.append(_claim(
        "alternating-threshold",
        applies=n > 50,
        holds=sig.transitive and 2 * sig.order == factorial(n - 1),
        witness="n=%d > 50 forces the alternating group, got order %d" % (n, sig.order),
    ))

    if sig.contains_alt:
        row = ClaimCheck("classification-row", "holds")
    elif not sig.transitive:
        ok = n == 8 and sig.order == 1
        row = _claim(
            "classification-row", True, ok,
            witness="intransitive stabilizer of order %d at n=%d; intransitive rows "
                    "are only permitted at n=8 with the trivial group" % (sig.order, n),
        )
    elif not sig.primitive:
        permitted = _L3_IMPRIMITIVE.get(n)
        ok = n in _L3_IMPRIMITIVE and (permitted is None or sig.order in permitted)
        row = _claim(
            "classification-row", True, ok,
            witness="imprimitive stabilizer of order %d at n=%d matches no permitted row"
                    % (sig.order, n),
        )
    else:
        permitted = _L3_PRIMITIVE.get(n)
        ok = n in _L3_PRIMITIVE and (permitted is None or sig.order in permitted)
        row = _claim(
            "classification-row", True, ok,
            witness="primitive stabilizer of order %d at n=%d matches no permitted row"
                    % (sig.order, n),
        )
    checks.append(row)
    return ConsistencyReport(tuple(checks))


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of the small-support scan over all group elements."""

    case: str  # "small_support_element" | "shared_transposition_pair" | "neither"
    witnesses: tuple = field(default=())


def support_obstruction(G: Group, lam: int, cap: int = 10 ** 6) -> CriterionResult:
    """Scan all elements for the two structures a hole stabilizer must carry.

    A genuine hole stabilizer of a supersimple 2-(n,4,lambda) design
    (lambda >= 2, within the hypotheses of the source criterion) has
    either a nontrivial element of support strictly below 6*(lambda-1),
    or two distinct elements of cycle type 2^(3*(lambda-1)) sharing a
    transposition.  "neither" therefore certifies a group cannot arise
    as such a stabilizer.  Witnesses are chosen lexicographically least
    by image tuple, so the result is deterministic.

    Requires order(G) <= cap, since every element is inspected.
    """
    bound = 6 * (lam - 1)
    target_type = tuple([2] * (3 * (lam - 1)))
    small = None
    by_transposition: dict = {}
    for g in G.elements_up_to(cap):
        if g.is_identity():
            continue
        if len(g.support()) < bound:
            if small is None or g.images < small.images:
                small = g
        if g.cycle_type() == target_type:
            for cyc in g.cycles():
                by_transposition.setdefault(cyc, []).append(g)
    if small is not None:
        return CriterionResult("small_support_element", (small,))
    best_pair = None
    for tau, members in by_transposition.items():
        if len(members) < 2:
            continue
        members = sorted(members, key=lambda g: g.images)
        pair = (members[0], members[1])
        if best_pair is None or (pair[0].images, pair[1].images) < (
                best_pair[0].images, best_pair[1].images):
            best_pair = pair
    if best_pair is not None:
        return CriterionResult("shared_transposition_pair", best_pair)
    return CriterionResult("neither")


# -- aggregate JSON report -------------------------------------------------


def design_digest(d: Design) -> str:
    """Stable short hash of the serialized design text."""
    return hashlib.sha256(serialize_design(d).encode()).hexdigest()[:16]


def _report_checks(rep: ConsistencyReport) -> list:
    out = []
    for c in rep.checks:
        entry = {"claim": c.claim, "status": c.status}
        if c.witness is not None:
            entry["witness"] = c.witness
        out.append(entry)
    return out


def classification_report(d: Design, infinity: int, G: Group) -> dict:
    """JSON-ready report for one design and one hole.

    Orders are serialized as decimal strings so arbitrarily large exact
    values survive any JSON reader.  The ``infinity`` and generator
    cycle strings are 1-based; generator labels live on the n-1
    non-hole points after closing the gap at the hole.
    """
    sig = signature(G)
    report = {
        "design": {
            "digest": design_digest(d),
            "n": d.n,
            "lambda": d.lam,
            "lines": len(d.lines),
        },
        "infinity": infinity + 1,
        "point_labels": "non-hole points relabeled 1..%d by deleting the hole "
                        "and closing the gap" % (d.n - 1),
        "generators": [g.cycle_string() for g in G.generators],
        "signature": {
            "degree": sig.degree,
            "order": str(sig.order),
            "transitive": sig.transitive,
            "primitive": sig.primitive,
            "generously_transitive": sig.generously_transitive,
            "contains_alt": sig.contains_alt,
            "all_even": sig.all_even,
        },
        "recognized": recognize(sig),
        "orbit_sizes": sorted(len(o) for o in G.orbits()),
        "checks": {
            "stabilizer_bounds": _report_checks(check_stabilizer_bounds(d.n, d.lam, sig)),
        },
    }
    if d.lam == 3:
        report["checks"]["lambda3_classification"] = _report_checks(
            check_lambda3_classification(d.n, sig))
    return report


def dump_report(report: dict) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
