"""Permutation groups via a deterministic Schreier-Sims stabilizer chain.

Orders are exact Python integers (products of transversal sizes), so
groups as large as Sym(15) pose no overflow concern.  Base points are
chosen greedily as the smallest point moved by the generator being
inserted, which makes the chain, and everything derived from it,
deterministic for a fixed generator list.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Optional

from .designs import CapExceeded
from .perms import Permutation


@dataclass(frozen=True)
class BlockSystem:
    """A G-invariant partition of the points into equal-size blocks."""

    blocks: tuple

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def is_invariant_under(self, g: Permutation) -> bool:
        block_sets = {frozenset(b) for b in self.blocks}
        return all(frozenset(g(p) for p in b) in block_sets for b in self.blocks)


class _Level:
    __slots__ = ("point", "gens", "tv")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list = []
        self.tv = {point: Permutation.identity(degree)}


class Group:
    """Group generated by permutations of a common, explicit degree."""

    def __init__(self, generators: Iterable[Permutation], degree: Optional[int] = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = gens[0].degree
        seen = set()
        kept = []
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree %d does not match group degree %d"
                                 % (g.degree, degree))
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            kept.append(g)
        self.degree = degree
        self.generators = tuple(kept)
        self._levels: Optional[list] = None
        self._lock = threading.Lock()

    # -- stabilizer chain --------------------------------------------------

    def _chain(self) -> list:
        if self._levels is None:
            with self._lock:
                if self._levels is None:
                    self._levels = self._build_chain()
        return self._levels

    def _build_chain(self) -> list:
        deg = self.degree
        levels: list = []

        def rebuild_transversal(lvl: _Level) -> None:
            lvl.tv = {lvl.point: Permutation.identity(deg)}
            queue = [lvl.point]
            while queue:
                p = queue.pop(0)
                for g in lvl.gens:
                    q = g(p)
                    if q not in lvl.tv:
                        lvl.tv[q] = lvl.tv[p] * g
                        queue.append(q)

        def strip(g: Permutation, start: int):
            # Returns (residue, level index where sifting stopped).
            for i in range(start, len(levels)):
                lvl = levels[i]
                p = g(lvl.point)
                if p == lvl.point:
                    continue
                if p not in lvl.tv:
                    return g, i
                g = g * lvl.tv[p].inverse()
            return g, len(levels)

        def insert(i: int, g: Permutation) -> None:
            # g fixes all base points below level i, so it belongs to the
            # generating set of every level up to and including i: level j
            # must build its transversal from all strong generators fixing
            # base[0..j-1], or orbits come out too small.
            if i == len(levels):
                base_point = min(p for p in range(deg) if g(p) != p)
                levels.append(_Level(base_point, deg))
            for j in range(i + 1):
                if g not in levels[j].gens:
                    levels[j].gens.append(g)
                    rebuild_transversal(levels[j])

        for g in self.generators:
            residue, i = strip(g, 0)
            if not residue.is_identity():
                insert(i, residue)

        # Verify Schreier generators deepest level first; restart the sweep
        # from scratch whenever anything new appears, since an insertion
        # rebuilds the very transversals being iterated.
        while True:
            grew = False
            for i in range(len(levels) - 1, -1, -1):
                lvl = levels[i]
                for p in sorted(lvl.tv):
                    t_p = lvl.tv[p]
                    for h in lvl.gens:
                        t_q = lvl.tv[h(p)]
                        schreier = t_p * h * t_q.inverse()
                        residue, j = strip(schreier, i + 1)
                        if not residue.is_identity():
                            insert(j, residue)
                            grew = True
                            break
                    if grew:
                        break
                if grew:
                    break
            if not grew:
                return levels

    # -- basic invariants ----------------------------------------------------

    def order(self) -> int:
        out = 1
        for lvl in self._chain():
            out *= len(lvl.tv)
        return out

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValueError("element degree %d does not match group degree %d"
                             % (g.degree, self.degree))
        levels = self._chain()
        for lvl in levels:
            p = g(lvl.point)
            if p == lvl.point:
                continue
            if p not in lvl.tv:
                return False
            g = g * lvl.tv[p].inverse()
        return g.is_identity()

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def is_trivial(self) -> bool:
        return not self.generators

    # -- orbits and transitivity ----------------------------------------------

    def orbits(self) -> tuple:
        """Point orbits as sorted tuples, ordered by least element."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            queue = [start]
            while queue:
                p = queue.pop(0)
                for g in self.generators:
                    q = g(p)
                    if not seen[q]:
                        seen[q] = True
                        orbit.append(q)
                        queue.append(q)
            out.append(tuple(sorted(orbit)))
        return tuple(out)

    def orbit_of(self, point: int) -> tuple:
        for orb in self.orbits():
            if point in orb:
                return orb
        raise ValueError("point %d out of range" % point)

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_generously_transitive(self) -> bool:
        """True iff every ordered pair of distinct points can be swapped.

        Equivalent to every orbit on ordered pairs being closed under
        reversal; if one pair of an orbit reverses into it, all do, so a
        single representative per orbit suffices.
        """
        deg = self.degree
        seen = set()
        for i in range(deg):
            for j in range(deg):
                if i == j or (i, j) in seen:
                    continue
                orbit = {(i, j)}
                queue = [(i, j)]
                while queue:
                    u, v = queue.pop(0)
                    for g in self.generators:
                        w = (g(u), g(v))
                        if w not in orbit:
                            orbit.add(w)
                            queue.append(w)
                if (j, i) not in orbit:
                    return False
                seen.update(orbit)
        return True

    # -- blocks and primitivity --------------------------------------------

    def minimal_block_system(self, seed_pair) -> Optional[BlockSystem]:
        """Finest invariant partition merging the seed pair, or None if trivial.

        The group must be transitive.  Returns None when the closure of
        the seed identification is the single full block.
        """
        if not self.is_transitive():
            raise ValueError("block systems are defined for transitive groups only")
        alpha, beta = seed_pair
        if alpha == beta:
            raise ValueError("seed pair must be two distinct points")
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        work = [(alpha, beta)]
        while work:
            p, q = work.pop()
            rp, rq = find(p), find(q)
            if rp == rq:
                continue
            if rq < rp:
                rp, rq = rq, rp
            parent[rq] = rp
            for g in self.generators:
                work.append((g(p), g(q)))
        classes: dict = {}
        for p in range(self.degree):
            classes.setdefault(find(p), []).append(p)
        if len(classes) == 1:
            return None
        blocks = tuple(sorted(tuple(sorted(b)) for b in classes.values()))
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise AssertionError("invariant partition of a transitive group has unequal blocks")
        return BlockSystem(blocks)

    def is_primitive(self) -> bool:
        """True iff transitive with no nontrivial invariant partition."""
        if not self.is_transitive():
            raise ValueError("primitivity is defined for transitive groups only")
        if self.degree <= 2:
            return True
        return all(self.minimal_block_system((0, beta)) is None
                   for beta in range(1, self.degree))

    def contains_alternating(self) -> bool:
        """Order test: full symmetric group, or index 2 in it on >= 3 points."""
        m = self.degree
        order = self.order()
        if order == factorial(m):
            return True
        return m >= 3 and 2 * order == factorial(m)

    # -- element enumeration ---------------------------------------------------

    def elements_up_to(self, cap: int) -> Iterator[Permutation]:
        """Iterate every element exactly once; error if the order exceeds cap."""
        if self.order() > cap:
            raise CapExceeded("group order %d exceeds the element cap %d"
                              % (self.order(), cap))
        levels = self._chain()

        def rec(i: int) -> Iterator[Permutation]:
            if i == len(levels):
                yield Permutation.identity(self.degree)
                return
            for h in rec(i + 1):
                for p in sorted(levels[i].tv):
                    yield h * levels[i].tv[p]

        return rec(0)

    def __repr__(self) -> str:
        return "Group(degree=%d, generators=%d)" % (self.degree, len(self.generators))
