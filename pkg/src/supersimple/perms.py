"""Permutations of {0, ..., m-1} with explicit degree and left-to-right composition.

The composition convention matters for everything downstream: ``g * h``
means "apply g first, then h", i.e. ``(g * h)(i) == h(g(i))``.  Products
written in reading order therefore act in reading order, which is the
convention used by the move calculus.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Permutation:
    """Immutable permutation stored as its image tuple.

    ``p.images[i]`` is the image of point ``i``.  Degree is explicit:
    two permutations of different degree are never equal and cannot be
    composed.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("images are not a permutation of 0..%d" % (len(imgs) - 1))
        self.images = imgs

    # -- construction ----------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build from disjoint cycles of 0-based points; fixed points omitted."""
        imgs = list(range(degree))
        seen = set()
        for cyc in cycles:
            for p in cyc:
                if not 0 <= p < degree:
                    raise ValueError("point %d out of range for degree %d" % (p, degree))
                if p in seen:
                    raise ValueError("point %d appears in two cycles" % p)
                seen.add(p)
            for i, p in enumerate(cyc):
                imgs[p] = cyc[(i + 1) % len(cyc)]
        return cls(imgs)

    @classmethod
    def transposition(cls, a: int, b: int, degree: int) -> "Permutation":
        return cls.from_cycles([(a, b)], degree)

    # -- basic protocol --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # Left-to-right: (g*h)(i) = h(g(i)).
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot compose permutations of degree %d and %d"
                             % (self.degree, other.degree))
        oi = other.images
        return Permutation(oi[i] for i in self.images)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    # -- structure -------------------------------------------------------

    def support(self) -> frozenset:
        """Set of moved points."""
        return frozenset(i for i, j in enumerate(self.images) if i != j)

    def cycles(self) -> tuple:
        """Nontrivial cycles, each led by its least point, sorted by leader."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                seen[p] = True
                cyc.append(p)
                p = self.images[p]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> tuple:
        """Multiset of nontrivial cycle lengths, as a descending tuple."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    @property
    def is_even(self) -> bool:
        # A k-cycle contributes k-1 transpositions.
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def order(self) -> int:
        from math import lcm
        return lcm(1, *(len(c) for c in self.cycles()))

    # -- text form (1-based, for files and the CLI) ----------------------

    def cycle_string(self) -> str:
        """Cycle notation with 1-based points, e.g. ``(1,2)(3,4)``; identity is ``()``."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return "Permutation[deg %d] %s" % (self.degree, self.cycle_string())


def parse_cycle_string(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``(1,2,3)(4,5)``.

    Whitespace is ignored; ``()`` denotes the identity.  Points must lie
    in 1..degree and no point may repeat.
    """
    s = "".join(text.split())
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("cycle string must be parenthesized: %r" % text)
    cycles = []
    for chunk in s[1:-1].split(")("):
        if chunk == "":
            continue
        pts = []
        for tok in chunk.split(","):
            if not tok.isdigit():
                raise ValueError("bad point %r in cycle string" % tok)
            p = int(tok)
            if not 1 <= p <= degree:
                raise ValueError("point %d out of range 1..%d" % (p, degree))
            pts.append(p - 1)
        cycles.append(tuple(pts))
    return Permutation.from_cycles(cycles, degree)
