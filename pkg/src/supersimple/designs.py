"""Block designs with lines of size 4, plus parsing, validation, and builtins.

A design here is a pair (point count n, target index lambda) together
with a set of 4-element lines on points {0..n-1}.  The class itself only
enforces structural sanity (points in range, no repeated point in a
line, no repeated line); whether the line set actually covers every
pair lambda times is a property checked by :func:`validate`, so that
near-miss candidates remain representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .perms import Permutation

# Guards the built-in constructors against accidental huge instances.
SIZE_CAP = 64


class ParseError(ValueError):
    """Raised when a design file is malformed; message carries the line number."""


class CapExceeded(ValueError):
    """Raised when a requested instance exceeds a configured size cap."""


def line_count(n: int, lam: int) -> Optional[int]:
    """Number of lines a 2-(n,4,lam) design must have, or None if non-integral."""
    num = lam * n * (n - 1)
    if num % 12 != 0:
        return None
    return num // 12


def replication(n: int, lam: int) -> Optional[int]:
    """Lines through each point, or None if non-integral."""
    num = lam * (n - 1)
    if num % 3 != 0:
        return None
    return num // 3


class Design:
    """Immutable line set on {0..n-1} with a precomputed pair index.

    Lines are stored as sorted 4-tuples, and the line list itself is
    sorted; two designs compare equal iff they have the same n, lambda,
    and line list.
    """

    __slots__ = ("n", "lam", "lines", "_pair_index")

    def __init__(self, n: int, lam: int, lines: Iterable[Sequence[int]]):
        if n < 4:
            raise ValueError("need at least 4 points, got n=%d" % n)
        if lam < 1:
            raise ValueError("lambda must be positive, got %d" % lam)
        norm = []
        for raw in lines:
            pts = tuple(sorted(raw))
            if len(pts) != 4:
                raise ValueError("line %r does not have 4 points" % (tuple(raw),))
            if len(set(pts)) != 4:
                raise ValueError("line %r repeats a point" % (tuple(raw),))
            if pts[0] < 0 or pts[3] >= n:
                raise ValueError("line %r has a point outside 0..%d" % (tuple(raw), n - 1))
            norm.append(pts)
        norm.sort()
        for i in range(1, len(norm)):
            if norm[i] == norm[i - 1]:
                raise ValueError("duplicate line %r" % (norm[i],))
        self.n = n
        self.lam = lam
        self.lines = tuple(norm)
        index: dict = {}
        for li, pts in enumerate(self.lines):
            for a, b in combinations(pts, 2):
                index.setdefault((a, b), []).append(li)
        self._pair_index = {k: tuple(v) for k, v in index.items()}

    # -- queries -----------------------------------------------------------

    def lines_through_pair(self, a: int, b: int) -> tuple:
        """All lines containing both a and b, in line-list order."""
        if a == b:
            raise ValueError("pair must be two distinct points, got (%d, %d)" % (a, b))
        self._check_point(a)
        self._check_point(b)
        key = (a, b) if a < b else (b, a)
        return tuple(self.lines[i] for i in self._pair_index.get(key, ()))

    def pair_count(self, a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        return len(self._pair_index.get(key, ()))

    def overline(self, a: int, b: int) -> frozenset:
        """Union of all lines through the (collinear) pair {a, b}."""
        through = self.lines_through_pair(a, b)
        if not through:
            raise ValueError("points %d and %d are not collinear" % (a, b))
        out = set()
        for pts in through:
            out.update(pts)
        return frozenset(out)

    def points(self) -> range:
        return range(self.n)

    def _check_point(self, p: int) -> None:
        if not 0 <= p < self.n:
            raise ValueError("point %d out of range 0..%d" % (p, self.n - 1))

    # -- relabeling ----------------------------------------------------------

    def relabel(self, g: Permutation) -> "Design":
        """Apply a degree-n permutation to every point of every line."""
        if g.degree != self.n:
            raise ValueError("permutation degree %d does not match n=%d" % (g.degree, self.n))
        return Design(self.n, self.lam, [tuple(g(p) for p in pts) for pts in self.lines])

    # -- protocol -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Design):
            return NotImplemented
        return (self.n, self.lam, self.lines) == (other.n, other.lam, other.lines)

    def __hash__(self) -> int:
        return hash((self.n, self.lam, self.lines))

    def __repr__(self) -> str:
        return "Design(n=%d, lam=%d, lines=%d)" % (self.n, self.lam, len(self.lines))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the full design check, with the first witness of failure."""

    is_2_design: bool
    observed_lambda_range: tuple
    is_simple: bool
    is_supersimple: bool
    first_violation: Optional[str]

    @property
    def all_ok(self) -> bool:
        return self.is_2_design and self.is_simple and self.is_supersimple


def validate(d: Design) -> ValidationReport:
    """Check pair coverage and the pairwise-intersection bound.

    is_2_design: every pair of points lies in exactly lambda lines.
    is_simple: no repeated line (guaranteed by construction, reported
    for completeness).  is_supersimple: no two lines share 3 points.
    """
    counts = [d.pair_count(a, b) for a, b in combinations(range(d.n), 2)]
    lo, hi = (min(counts), max(counts)) if counts else (0, 0)
    is_2 = lo == d.lam and hi == d.lam
    violation = None
    if not is_2:
        for a, b in combinations(range(d.n), 2):
            c = d.pair_count(a, b)
            if c != d.lam:
                violation = "pair (%d,%d) lies in %d lines, expected %d" % (a + 1, b + 1, c, d.lam)
                break
    # Two distinct 4-lines share >= 3 points iff they share some triple.
    supersimple = True
    triples = {}
    for pts in d.lines:
        for tri in combinations(pts, 3):
            if tri in triples:
                supersimple = False
                if violation is None:
                    violation = "lines %r and %r share 3 points" % (triples[tri], pts)
                break
            triples[tri] = pts
        if not supersimple:
            break
    return ValidationReport(
        is_2_design=is_2,
        observed_lambda_range=(lo, hi),
        is_simple=True,
        is_supersimple=supersimple,
        first_violation=violation,
    )


# -- text format ---------------------------------------------------------
#
# Header line "n lambda", then exactly lambda*n*(n-1)/12 lines of four
# 1-based points.  '#' starts a comment; blank lines are ignored.


def parse_design(text: str) -> Design:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise ParseError("empty input: missing 'n lambda' header")
    head_no, head = rows[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError("line %d: header must be 'n lambda', got %r" % (head_no, head))
    n, lam = int(parts[0]), int(parts[1])
    if n < 4 or lam < 1:
        raise ParseError("line %d: need n >= 4 and lambda >= 1, got n=%d lambda=%d"
                         % (head_no, n, lam))
    b = line_count(n, lam)
    if b is None:
        raise ParseError("line %d: lambda*n*(n-1)/12 is not an integer for n=%d lambda=%d"
                         % (head_no, n, lam))
    lines = []
    for lineno, body in rows[1:]:
        toks = body.split()
        if len(toks) != 4 or not all(t.isdigit() for t in toks):
            raise ParseError("line %d: expected four points, got %r" % (lineno, body))
        pts = [int(t) for t in toks]
        for p in pts:
            if not 1 <= p <= n:
                raise ParseError("line %d: point %d outside 1..%d" % (lineno, p, n))
        if len(set(pts)) != 4:
            raise ParseError("line %d: repeated point in %r" % (lineno, body))
        lines.append(tuple(sorted(p - 1 for p in pts)))
    if len(lines) != b:
        raise ParseError("expected %d lines for n=%d lambda=%d, got %d" % (b, n, lam, len(lines)))
    if len(set(lines)) != len(lines):
        dup = next(l for l in lines if lines.count(l) > 1)
        raise ParseError("duplicate line %s" % " ".join(str(p + 1) for p in dup))
    return Design(n, lam, lines)


def serialize_design(d: Design) -> str:
    out = ["%d %d" % (d.n, d.lam)]
    for pts in d.lines:
        out.append(" ".join(str(p + 1) for p in pts))
    return "\n".join(out) + "\n"


# -- constructions ----------------------------------------------------------


def boolean_quadruple_system(k: int) -> Design:
    """Zero-sum 4-subsets of k-bit vectors: a 2-(2^k, 4, 2^(k-1)-1) design."""
    if k < 2:
        raise ValueError("need k >= 2, got %d" % k)
    n = 1 << k
    if n > SIZE_CAP:
        raise CapExceeded("2^%d points exceeds the size cap %d" % (k, SIZE_CAP))
    lines = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                d = a ^ b ^ c
                if d > c:
                    lines.append((a, b, c, d))
    return Design(n, (1 << (k - 1)) - 1, lines)


def projective_plane_3() -> Design:
    """The 13-point projective plane of order 3, lines as point quadruples."""
    # Normalized vectors over GF(3): first nonzero coordinate is 1.
    pts = []
    for x0 in range(3):
        for x1 in range(3):
            for x2 in range(3):
                v = (x0, x1, x2)
                if v == (0, 0, 0):
                    continue
                first = next(c for c in v if c != 0)
                if first == 1:
                    pts.append(v)
    pts.sort()
    index = {v: i for i, v in enumerate(pts)}
    assert len(pts) == 13
    lines = []
    for w in pts:  # same normalization indexes the dual plane
        on = [index[v] for v in pts
              if (v[0] * w[0] + v[1] * w[1] + v[2] * w[2]) % 3 == 0]
        lines.append(tuple(sorted(on)))
    return Design(13, 1, lines)


# The unique supersimple 2-(9,4,3) design, and a 2-(10,4,4) design whose
# hole stabilizer is the full symmetric group on the remaining 9 points.
_NINE_LINES = [
    (1, 2, 3, 4), (1, 2, 5, 6), (1, 2, 7, 8), (1, 3, 5, 9), (1, 3, 6, 7),
    (1, 4, 5, 8), (1, 4, 7, 9), (1, 6, 8, 9), (2, 3, 5, 7), (2, 3, 8, 9),
    (2, 4, 5, 9), (2, 4, 6, 8), (2, 6, 7, 9), (3, 4, 6, 9), (3, 4, 7, 8),
    (3, 5, 6, 8), (4, 5, 6, 7), (5, 7, 8, 9),
]

_TEN_LINES = [
    (5, 7, 8, 9), (4, 6, 8, 9), (4, 5, 6, 7), (3, 6, 7, 9), (3, 4, 5, 8),
    (2, 6, 7, 8), (2, 4, 5, 9), (2, 3, 8, 9), (2, 3, 5, 6), (2, 3, 4, 7),
    (1, 5, 6, 8), (1, 4, 7, 9), (1, 3, 7, 8), (1, 3, 5, 9), (1, 3, 4, 6),
    (1, 2, 6, 9), (1, 2, 5, 7), (1, 2, 4, 8), (10, 5, 6, 9), (10, 4, 7, 8),
    (10, 3, 6, 8), (10, 3, 5, 7), (10, 3, 4, 9), (10, 2, 7, 9), (10, 2, 5, 8),
    (10, 2, 4, 6), (10, 1, 8, 9), (10, 1, 6, 7), (10, 1, 4, 5), (10, 1, 2, 3),
]


def _from_one_based(n: int, lam: int, rows) -> Design:
    return Design(n, lam, [tuple(p - 1 for p in r) for r in rows])


BUILTIN_NAMES = ("bqs8", "bqs16", "pg3", "paper9", "paper10")


def builtin(name: str) -> Design:
    """Named reference designs used throughout the tests and the CLI."""
    if name == "bqs8":
        return boolean_quadruple_system(3)
    if name == "bqs16":
        return boolean_quadruple_system(4)
    if name == "pg3":
        return projective_plane_3()
    if name == "paper9":
        return _from_one_based(9, 3, _NINE_LINES)
    if name == "paper10":
        return _from_one_based(10, 4, _TEN_LINES)
    raise ValueError("unknown builtin %r; choose from %s" % (name, ", ".join(BUILTIN_NAMES)))
