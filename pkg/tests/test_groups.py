import random
from itertools import permutations

import pytest

from supersimple.designs import CapExceeded, builtin
from supersimple.groups import Group
from supersimple.moves import hole_stabilizer
from supersimple.perms import Permutation


def P(cycles, n):
    return Permutation.from_cycles(cycles, n)


def closure(gens):
    """Brute-force closure by repeated multiplication; the order oracle."""
    deg = gens[0].degree
    seen = {Permutation.identity(deg)} | set(gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                p = a * g
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


# named generator sets with known orders; sym4/alt4/sym3x regressed once
# when new strong generators were added only at their own level instead
# of every level whose base points they fix
SMALL_GROUPS = {
    "sym4": ([P([(0, 1)], 4), P([(0, 1, 2, 3)], 4)], 24),
    "alt4": ([P([(0, 1, 2)], 4), P([(1, 2, 3)], 4)], 12),
    "sym3x": ([P([(0, 1)], 6), P([(0, 1, 2)], 6), P([(3, 4, 5)], 6)], 18),
    "cyc8": ([P([(0, 1, 2, 3, 4, 5, 6, 7)], 8)], 8),
    "dihedral4": ([P([(0, 1, 2, 3)], 4), P([(1, 3)], 4)], 8),
    "klein4": ([P([(0, 1), (2, 3)], 4), P([(0, 2), (1, 3)], 4)], 4),
    "cyc5": ([P([(0, 1, 2, 3, 4)], 5)], 5),
    "sym5": ([P([(0, 1)], 5), P([(0, 1, 2, 3, 4)], 5)], 120),
    "alt5": ([P([(0, 1, 2)], 5), P([(0, 1, 2, 3, 4)], 5)], 60),
}


def test_order_matches_closure_oracle():
    for name, (gens, want) in SMALL_GROUPS.items():
        G = Group(gens)
        elems = closure(gens)
        assert G.order() == want == len(elems), name


def test_membership_matches_closure_oracle():
    rng = random.Random(3)
    for name, (gens, _) in SMALL_GROUPS.items():
        G = Group(gens)
        elems = closure(gens)
        for g in sorted(elems, key=lambda g: g.images)[:50]:
            assert g in G, (name, g)
        deg = G.degree
        for _ in range(30):
            images = list(range(deg))
            rng.shuffle(images)
            g = Permutation(images)
            assert (g in G) == (g in elems), (name, g)


def test_elements_up_to_enumerates_the_whole_group():
    for name, (gens, want) in SMALL_GROUPS.items():
        G = Group(gens)
        elems = set(G.elements_up_to(want))
        assert elems == closure(gens), name


def test_elements_up_to_cap():
    gens, _ = SMALL_GROUPS["sym5"]
    with pytest.raises(CapExceeded):
        list(Group(gens).elements_up_to(100))


def test_trivial_group():
    G = Group([], degree=5)
    assert G.order() == 1
    assert G.is_trivial()
    assert Permutation.identity(5) in G
    assert Permutation.transposition(0, 1, 5) not in G
    assert G.orbits() == tuple((p,) for p in range(5))


def test_group_requires_degree_when_empty():
    with pytest.raises(ValueError):
        Group([])


def test_generator_dedup_and_identity_filter():
    g = P([(0, 1)], 4)
    G = Group([g, g, Permutation.identity(4)])
    assert len(G.generators) == 1
    assert G.order() == 2


def test_orbits():
    G = Group(SMALL_GROUPS["sym3x"][0])
    assert G.orbits() == ((0, 1, 2), (3, 4, 5))
    assert not G.is_transitive()
    assert G.orbit_of(4) == (3, 4, 5)


def test_transitivity():
    assert Group(SMALL_GROUPS["sym4"][0]).is_transitive()
    assert not Group(SMALL_GROUPS["sym3x"][0]).is_transitive()


def test_generous_transitivity():
    # C3 moves (0,1) to (1,2) to (2,0) but never to (1,0)
    assert not Group([P([(0, 1, 2)], 3)]).is_generously_transitive()
    assert Group([P([(0, 1)], 3), P([(0, 1, 2)], 3)]).is_generously_transitive()
    assert Group(SMALL_GROUPS["dihedral4"][0]).is_generously_transitive()
    assert not Group(SMALL_GROUPS["cyc5"][0]).is_generously_transitive()


def test_minimal_block_system():
    G = Group([P([(0, 1, 2, 3)], 4)])
    bs = G.minimal_block_system((0, 2))
    assert bs is not None
    assert sorted(bs.blocks) == [(0, 2), (1, 3)]
    assert bs.num_blocks == 2 and bs.block_size == 2
    for g in G.generators:
        assert bs.is_invariant_under(g)


def test_minimal_block_system_trivial_when_primitive():
    G = Group(SMALL_GROUPS["sym4"][0])
    for beta in range(1, 4):
        assert G.minimal_block_system((0, beta)) is None


def test_block_operations_reject_intransitive_groups():
    G = Group(SMALL_GROUPS["sym3x"][0])
    with pytest.raises(ValueError):
        G.minimal_block_system((0, 1))
    with pytest.raises(ValueError):
        G.is_primitive()


def exhaustive_is_primitive(G):
    """Check invariance of every nontrivial equal-size partition directly."""
    deg = G.degree
    elems = list(G.elements_up_to(10 ** 6))
    for size in range(2, deg):
        if deg % size:
            continue
        for part in _equal_partitions(tuple(range(deg)), size):
            blocks = [frozenset(b) for b in part]
            if all(frozenset(g(p) for p in b) in blocks
                   for g in elems for b in blocks):
                return False
    return True


def _equal_partitions(points, size):
    if not points:
        yield ()
        return
    head = points[0]
    rest = points[1:]
    for tail in permutations(rest, size - 1):
        if list(tail) != sorted(tail):
            continue
        block = (head,) + tail
        remaining = tuple(p for p in rest if p not in tail)
        for others in _equal_partitions(remaining, size):
            yield (block,) + others


def test_primitivity_matches_exhaustive_oracle():
    cases = ["sym4", "alt4", "cyc8", "dihedral4", "klein4", "cyc5", "sym5", "alt5"]
    for name in cases:
        G = Group(SMALL_GROUPS[name][0])
        assert G.is_primitive() == exhaustive_is_primitive(G), name


def test_contains_alternating():
    assert Group(SMALL_GROUPS["sym4"][0]).contains_alternating()
    assert Group(SMALL_GROUPS["alt4"][0]).contains_alternating()
    assert not Group(SMALL_GROUPS["dihedral4"][0]).contains_alternating()
    assert not Group(SMALL_GROUPS["cyc5"][0]).contains_alternating()


def test_stabilizer_chain_on_hole_stabilizer():
    # end to end: the order-288 stabilizer agrees with its closure
    G = hole_stabilizer(builtin("paper9"), 0)
    elems = closure(list(G.generators))
    assert G.order() == len(elems) == 288
    for g in list(elems)[:40]:
        assert g in G
