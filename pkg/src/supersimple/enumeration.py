"""Orderly enumeration of supersimple designs, canonical forms, counting.

Designs are generated as sorted line lists where each new line must
cover the lexicographically least pair with remaining capacity, so
every admissible line set is reached exactly once.  With isomorph
rejection on, a line list is kept only while it is the lexicographically
least relabeling of itself; the surviving complete lists are exactly
the canonical forms, one per isomorphism class.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .designs import CapExceeded, Design, line_count, replication

# Enumeration and canonicalization involve a search over relabelings;
# the cap keeps accidental huge inputs from hanging the process.
ENUMERATION_CAP = 16

_SPLIT_DEPTH = 2  # worker tasks are disjoint subtrees below depth-2 prefixes


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    lam: int
    count: int
    designs: Optional[tuple]  # None when counting only
    signatures: Optional[tuple]  # per-design hole-stabilizer signatures, if requested
    note: Optional[str] = None


def _lines_array(d: Design) -> np.ndarray:
    return np.array(d.lines, dtype=np.int64).reshape(len(d.lines), 4)


def canonical_form(d: Design, cap: int = ENUMERATION_CAP) -> Design:
    """The lexicographically least relabeling of the design's line list."""
    if d.n > cap:
        raise CapExceeded("canonicalization of n=%d exceeds the cap %d" % (d.n, cap))
    codes = _kernels.minimize_codes(_lines_array(d), d.n)
    rows = _kernels.unpack_codes(codes)
    return Design(d.n, d.lam, [tuple(int(x) for x in row) for row in rows])


def is_canonical_form(d: Design, cap: int = ENUMERATION_CAP) -> bool:
    if d.n > cap:
        raise CapExceeded("canonicity test of n=%d exceeds the cap %d" % (d.n, cap))
    return bool(_kernels.is_lex_minimal(_lines_array(d), d.n))


def _subtree(args):
    n, lam, b, prefix, canonical, count_only = args
    return _kernels.search_designs(n, lam, b, prefix, b, canonical, count_only)


def _run_search(n: int, lam: int, b: int, canonical: bool, count_only: bool,
                workers: int):
    empty = np.empty((0, 4), np.int64)
    if workers <= 1 or b <= _SPLIT_DEPTH:
        return [_kernels.search_designs(n, lam, b, empty, b, canonical, count_only)]
    _, flat = _kernels.search_designs(n, lam, b, empty, _SPLIT_DEPTH, canonical, False)
    prefixes = flat.reshape(-1, _SPLIT_DEPTH, 4)
    tasks = [(n, lam, b, prefixes[i].copy(), canonical, count_only)
             for i in range(prefixes.shape[0])]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        return pool.map(_subtree, tasks)


def _enumerate(n: int, lam: int, canonical: bool, count_only: bool,
               workers: int, cap: int):
    if n < 4:
        raise ValueError("need n >= 4, got %d" % n)
    if lam < 1:
        raise ValueError("need lambda >= 1, got %d" % lam)
    if n > cap:
        raise CapExceeded("enumeration at n=%d exceeds the cap %d" % (n, cap))
    b = line_count(n, lam)
    r = replication(n, lam)
    if b is None or r is None:
        reason = ("no designs possible: lambda*n*(n-1)/12 = %s and lambda*(n-1)/3 = %s "
                  "must both be integers" % (lam * n * (n - 1) / 12, lam * (n - 1) / 3))
        return 0, [], reason
    parts = _run_search(n, lam, b, canonical, count_only, workers)
    count = sum(c for c, _ in parts)
    rows = []
    if not count_only:
        for c, flat in parts:
            arr = flat.reshape(-1, b, 4)
            for i in range(c):
                rows.append(tuple(tuple(int(x) for x in line) for line in arr[i]))
        rows.sort()
    return count, rows, None


def enumerate_designs(n: int, lam: int, *, count_only: bool = False,
                      classify: bool = False, workers: int = 1,
                      cap: int = ENUMERATION_CAP) -> EnumerationResult:
    """All supersimple 2-(n,4,lambda) designs, one canonical form per class.

    Output is deterministic (sorted canonical line lists) and
    independent of the worker count.  With ``classify`` set, each design
    is annotated with the signature of its hole stabilizer at point 1.
    """
    count, rows, note = _enumerate(n, lam, True, count_only, workers, cap)
    designs = None
    signatures = None
    if not count_only:
        designs = tuple(Design(n, lam, row) for row in rows)
        if classify:
            from .classify import signature
            from .moves import hole_stabilizer
            signatures = tuple(signature(hole_stabilizer(d, 0)) for d in designs)
    return EnumerationResult(n=n, lam=lam, count=count, designs=designs,
                             signatures=signatures, note=note)


def count_designs(n: int, lam: int, *, workers: int = 1,
                  cap: int = ENUMERATION_CAP) -> int:
    """Number of isomorphism classes, without storing designs."""
    count, _, _ = _enumerate(n, lam, True, True, workers, cap)
    return count


def enumerate_labeled_designs(n: int, lam: int, *, workers: int = 1,
                              cap: int = ENUMERATION_CAP) -> tuple:
    """Every labeled design (no isomorph rejection), as sorted line lists.

    Grows factorially; intended as the brute-force cross-check for the
    canonical enumeration on small n.
    """
    count, rows, _ = _enumerate(n, lam, False, False, workers, cap)
    assert count == len(rows)
    return tuple(Design(n, lam, row) for row in rows)
