"""The move calculus: elementary moves, move sequences, hole stabilizers.

For a collinear pair {x, y} the elementary move [x, y] swaps x with y
and, on each of the lambda lines {x, y, p_i, q_i} through the pair,
swaps the other two points p_i and q_i.  Supersimplicity makes those
lambda transpositions disjoint, so the product is well defined: an
involution of support 2*lambda + 2 and parity (-1)^(lambda + 1).
"""

from __future__ import annotations

from typing import Sequence

from .designs import Design
from .groups import Group
from .perms import Permutation


class NonCollinearError(ValueError):
    """A move was requested on a pair of points that no line contains."""

    def __init__(self, x: int, y: int, step: int = None):
        self.x = x
        self.y = y
        self.step = step
        where = "" if step is None else " at step %d" % step
        super().__init__("points %d and %d are not collinear%s" % (x + 1, y + 1, where))


def is_collinear(d: Design, x: int, y: int) -> bool:
    """True iff some line contains both x and y; a point is not collinear with itself."""
    if x == y:
        d._check_point(x)
        return False
    return len(d.lines_through_pair(x, y)) > 0


def elementary_move(d: Design, x: int, y: int) -> Permutation:
    """The involution [x, y]; [x, x] is the identity."""
    d._check_point(x)
    d._check_point(y)
    if x == y:
        return Permutation.identity(d.n)
    through = d.lines_through_pair(x, y)
    if not through:
        raise NonCollinearError(x, y)
    imgs = list(range(d.n))
    imgs[x], imgs[y] = y, x
    for pts in through:
        p, q = (t for t in pts if t != x and t != y)
        if imgs[p] != p or imgs[q] != q:
            # Cannot happen on a supersimple design: two lines through
            # {x,y} would share a third point.
            raise ValueError("lines through (%d,%d) overlap; design is not supersimple"
                             % (x + 1, y + 1))
        imgs[p], imgs[q] = q, p
    return Permutation(imgs)


def move_sequence(d: Design, waypoints: Sequence[int]) -> Permutation:
    """Left-to-right product of [w0,w1][w1,w2]...[w_{k-1},w_k].

    Every consecutive pair must be collinear or equal; a violation
    reports the 0-based index of the offending step.
    """
    pts = list(waypoints)
    if not pts:
        raise ValueError("a move sequence needs at least one waypoint")
    for p in pts:
        d._check_point(p)
    result = Permutation.identity(d.n)
    for i in range(len(pts) - 1):
        x, y = pts[i], pts[i + 1]
        if x != y and not is_collinear(d, x, y):
            raise NonCollinearError(x, y, step=i)
        result = result * elementary_move(d, x, y)
    return result


def restrict_to_hole(g: Permutation, infinity: int) -> Permutation:
    """Drop the fixed point ``infinity`` and close the gap in the labels."""
    if g(infinity) != infinity:
        raise ValueError("permutation moves the hole point %d" % (infinity + 1))

    def shift(p: int) -> int:
        return p if p < infinity else p - 1

    return Permutation(shift(g(p)) for p in range(g.degree) if p != infinity)


def hole_generators(d: Design, infinity: int) -> list:
    """Deduplicated nonidentity generators of the hole stabilizer at ``infinity``.

    One candidate per ordered pair (a, b) of points distinct from the
    hole: the closed walk (infinity, a, b, infinity), kept only when all
    three steps are collinear.  Each generator fixes the hole, and is
    returned restricted to the remaining n-1 points (labels above the
    hole shifted down by one).
    """
    d._check_point(infinity)
    seen = set()
    out = []
    others = [p for p in range(d.n) if p != infinity]
    for a in others:
        if not is_collinear(d, infinity, a):
            continue
        for b in others:
            if b == a:
                continue
            if not (is_collinear(d, a, b) and is_collinear(d, b, infinity)):
                continue
            g = (elementary_move(d, infinity, a)
                 * elementary_move(d, a, b)
                 * elementary_move(d, b, infinity))
            if g(infinity) != infinity:
                raise AssertionError("closed walk moved the hole; design is malformed")
            h = restrict_to_hole(g, infinity)
            if h.is_identity() or h in seen:
                continue
            seen.add(h)
            out.append(h)
    return out


def hole_stabilizer(d: Design, infinity: int = 0) -> Group:
    """The group generated by all closed-walk moves through ``infinity``.

    Acts on the n-1 points other than the hole, relabeled to
    {0..n-2} by closing the gap at the hole.
    """
    return Group(hole_generators(d, infinity), degree=d.n - 1)
