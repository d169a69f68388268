import random

import pytest

from supersimple.designs import BUILTIN_NAMES, Design, builtin
from supersimple.moves import (
    NonCollinearError,
    elementary_move,
    hole_generators,
    hole_stabilizer,
    is_collinear,
    move_sequence,
    restrict_to_hole,
)
from supersimple.perms import Permutation


def collinear_pairs(d):
    return [(x, y) for x in range(d.n) for y in range(x + 1, d.n)
            if is_collinear(d, x, y)]


def test_is_collinear():
    # every distinct pair of a complete design is collinear; a point is
    # never collinear with itself, and partial designs leave gaps
    d = builtin("pg3")
    assert all(is_collinear(d, x, y)
               for x in range(13) for y in range(x + 1, 13))
    assert not is_collinear(d, 0, 0)
    partial = Design(8, 3, [(0, 1, 2, 3)])
    assert is_collinear(partial, 0, 3)
    assert not is_collinear(partial, 0, 4)


def test_elementary_move_identity_on_equal_points():
    d = builtin("bqs8")
    assert elementary_move(d, 3, 3).is_identity()


def test_elementary_move_swaps_endpoints():
    d = builtin("bqs8")
    for x, y in collinear_pairs(d):
        g = elementary_move(d, x, y)
        assert g(x) == y and g(y) == x


def test_elementary_move_is_involution_with_known_support():
    for name in BUILTIN_NAMES:
        d = builtin(name)
        for x, y in collinear_pairs(d):
            g = elementary_move(d, x, y)
            assert (g * g).is_identity()
            assert g.support() == d.overline(x, y)
            assert len(g.support()) == 2 * d.lam + 2


def test_elementary_move_parity():
    # product of lambda+1 transpositions
    for name in BUILTIN_NAMES:
        d = builtin(name)
        want = (d.lam + 1) % 2 == 0
        for x, y in collinear_pairs(d):
            assert elementary_move(d, x, y).is_even == want


def test_elementary_move_rejects_non_collinear():
    d = Design(8, 3, [(0, 1, 2, 3)])
    with pytest.raises(NonCollinearError):
        elementary_move(d, 0, 4)


def test_move_sequence_composes_left_to_right():
    d = builtin("bqs8")
    seq = [0, 1, 3, 0]
    g = move_sequence(d, seq)
    want = Permutation.identity(8)
    for a, b in zip(seq, seq[1:]):
        want = want * elementary_move(d, a, b)
    assert g == want


def test_move_sequence_single_waypoint_is_identity():
    d = builtin("bqs8")
    assert move_sequence(d, [5]).is_identity()


def test_move_sequence_requires_waypoints():
    d = builtin("bqs8")
    with pytest.raises(ValueError):
        move_sequence(d, [])


def test_move_sequence_reports_failing_step():
    d = Design(8, 3, [(0, 1, 2, 3)])
    with pytest.raises(NonCollinearError) as exc:
        move_sequence(d, [0, 1, 4])
    assert exc.value.step == 1


def test_restrict_to_hole():
    g = Permutation.from_cycles([(1, 2), (4, 5)], 6)
    h = restrict_to_hole(g, 0)
    assert h.degree == 5
    assert h == Permutation.from_cycles([(0, 1), (3, 4)], 5)


def test_restrict_to_hole_requires_fixed_point():
    g = Permutation.from_cycles([(0, 1)], 4)
    with pytest.raises(ValueError):
        restrict_to_hole(g, 0)


def test_hole_generators_fix_the_hole():
    d = builtin("bqs8")
    for inf in range(d.n):
        for g in hole_generators(d, inf):
            assert g(inf) == inf
            assert not g.is_identity()


def test_closed_walks_land_in_the_stabilizer():
    # in a complete design every distinct pair is collinear, so any
    # waypoint sequence returning to the hole yields a stabilizer element
    d = builtin("paper9")
    inf = 0
    G = hole_stabilizer(d, inf)
    rng = random.Random(41)
    others = [p for p in range(d.n) if p != inf]
    for _ in range(30):
        walk = [inf] + rng.sample(others, rng.randrange(2, 7)) + [inf]
        g = move_sequence(d, walk)
        assert g(inf) == inf
        assert restrict_to_hole(g, inf) in G


def test_hole_stabilizer_degree_and_orders():
    cases = {"bqs8": 1, "paper9": 288, "pg3": 95040}
    for name, order in cases.items():
        d = builtin(name)
        G = hole_stabilizer(d, 0)
        assert G.degree == d.n - 1
        assert G.order() == order


def test_hole_stabilizers_agree_across_holes():
    d = builtin("paper9")
    orders = {hole_stabilizer(d, inf).order() for inf in range(d.n)}
    assert orders == {288}
