import json
from math import factorial

from supersimple.classify import (
    Signature,
    check_lambda3_classification,
    check_stabilizer_bounds,
    classification_report,
    design_digest,
    dump_report,
    recognize,
    signature,
    support_obstruction,
)
from supersimple.designs import builtin
from supersimple.groups import Group
from supersimple.moves import hole_stabilizer
from supersimple.perms import Permutation


def P(cycles, n):
    return Permutation.from_cycles(cycles, n)


def sig(degree, order, transitive=True, primitive=True,
        generous=True, alt=False, even=True):
    return Signature(degree=degree, order=order, transitive=transitive,
                     primitive=primitive if transitive else None,
                     generously_transitive=generous, contains_alt=alt,
                     all_even=even)


def test_signature_of_known_stabilizers():
    s = signature(hole_stabilizer(builtin("pg3"), 0))
    assert s.degree == 12 and s.order == 95040
    assert s.transitive and s.primitive and s.generously_transitive
    assert not s.contains_alt
    s = signature(hole_stabilizer(builtin("bqs8"), 0))
    assert s.order == 1 and not s.transitive
    assert s.primitive is None


def test_recognize_named_groups():
    assert recognize(sig(12, 95040)) == "M12"
    assert recognize(sig(12, 7920)) == "M11"
    assert recognize(sig(8, 288, primitive=False)) == "Alt(4) wr C2"
    assert recognize(sig(15, 720)) == "Sym(6)"
    assert recognize(sig(15, 2520)) == "Alt(7)"
    assert recognize(sig(15, 360)) == "Alt(6)"


def test_recognize_order_20160_is_ambiguous():
    # two nonisomorphic groups of this order act on 15 points
    name = recognize(sig(15, 20160))
    assert "ambiguous" in name


def test_recognize_symmetric_alternating_trivial():
    assert recognize(sig(9, factorial(9), alt=True)) == "Sym(9)"
    assert recognize(sig(9, factorial(9) // 2, alt=True)) == "Alt(9)"
    assert recognize(sig(7, 1, transitive=False)) == "trivial"
    assert recognize(sig(9, 42)) == "unrecognized"


def test_bounds_all_applicable_and_satisfied():
    # lambda=1 at n=13: every hypothesis fires; M12 satisfies them all
    s = signature(hole_stabilizer(builtin("pg3"), 0))
    rep = check_stabilizer_bounds(13, 1, s)
    assert rep.ok
    assert all(c.status == "holds" for c in rep.checks)


def test_bounds_not_applicable_below_thresholds():
    # lambda=3 at n=8: no hypothesis fires, so nothing is claimed
    s = signature(hole_stabilizer(builtin("bqs8"), 0))
    rep = check_stabilizer_bounds(8, 3, s)
    assert rep.ok
    assert all(c.status == "not-applicable" for c in rep.checks)


def test_bounds_flag_violations_with_witness():
    bad = sig(12, 6, transitive=False, generous=False)
    rep = check_stabilizer_bounds(13, 1, bad)
    names = {c.claim for c in rep.violated}
    assert "transitivity-bound" in names
    assert "primitivity-bound" in names
    assert "generous-transitivity-bound" in names
    assert "alternating-bound" in names
    for c in rep.violated:
        assert c.witness


def test_bounds_m12_exception():
    # M12 does not contain Alt(12) yet satisfies the alternating bound
    # through the lambda=1 exception
    s = sig(12, 95040)
    assert check_stabilizer_bounds(13, 1, s).ok
    rep = check_stabilizer_bounds(13, 3, s)
    assert rep.ok  # hypothesis n > 50 does not fire at lambda=3


def test_lambda3_even_subgroup_claim():
    odd = sig(8, 2, transitive=False, generous=False, even=False)
    rep = check_lambda3_classification(8, odd)
    assert any(c.claim == "even-subgroup" and c.status == "violated"
               for c in rep.checks)


def test_lambda3_trivial_intransitive_at_8():
    s = sig(7, 1, transitive=False, generous=False)
    rep = check_lambda3_classification(8, s)
    assert rep.ok


def test_lambda3_intransitive_rejected_elsewhere():
    s = sig(8, 288, transitive=False, generous=False)
    rep = check_lambda3_classification(9, s)
    assert any(c.claim == "classification-row" and c.status == "violated"
               for c in rep.checks)


def test_lambda3_imprimitive_row_at_9():
    s = sig(8, 288, primitive=False, generous=True)
    assert check_lambda3_classification(9, s).ok
    s = sig(8, 144, primitive=False, generous=True)
    assert not check_lambda3_classification(9, s).ok


def test_lambda3_primitive_rows_at_13():
    for order in (95040, 7920):
        assert check_lambda3_classification(13, sig(12, order)).ok
    assert not check_lambda3_classification(13, sig(12, 660)).ok


def test_lambda3_open_rows_accept_any_order():
    # imprimitive at n=21 and primitive at n=17 are permitted but not pinned
    assert check_lambda3_classification(21, sig(20, 40, primitive=False)).ok
    assert check_lambda3_classification(17, sig(16, 16 * 15 * 7)).ok


def test_lambda3_thresholds():
    small = sig(11, 10, transitive=False, generous=False)
    rep = check_lambda3_classification(12, small)
    assert any(c.claim == "transitivity-threshold" and c.status == "violated"
               for c in rep.checks)
    imp = sig(21, 42, primitive=False)
    rep = check_lambda3_classification(22, imp)
    assert any(c.claim == "primitivity-threshold" and c.status == "violated"
               for c in rep.checks)
    alt = sig(50, factorial(50) // 2, alt=True)
    assert check_lambda3_classification(51, alt).ok


def test_lambda3_alt_row_always_permitted():
    s = sig(11, factorial(11) // 2, alt=True)
    assert check_lambda3_classification(12, s).ok


def test_support_obstruction_small_support():
    # a transposition has support 2 < 6*(lambda-1) for lambda=3
    G = Group([P([(0, 1)], 12), P([(2, 3)], 12)])
    res = support_obstruction(G, 3)
    assert res.case == "small_support_element"
    w = res.witnesses[0]
    assert len(w.support()) < 12
    assert w.images <= min(g.images for g in G.elements_up_to(10)
                           if not g.is_identity())


def test_support_obstruction_shared_transposition():
    # two commuting 2^6-involutions overlapping only in the shared
    # transposition (0,1); their product has type 2^10, so no element
    # falls below the support bound
    a = P([(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)], 22)
    b = P([(0, 1), (12, 13), (14, 15), (16, 17), (18, 19), (20, 21)], 22)
    G = Group([a, b])
    assert all(len(g.support()) >= 12 for g in G.elements_up_to(10)
               if not g.is_identity())
    res = support_obstruction(G, 3)
    assert res.case == "shared_transposition_pair"
    x, y = res.witnesses
    assert x.cycle_type() == y.cycle_type() == tuple([2] * 6)
    shared = set(x.cycles()) & set(y.cycles())
    assert (0, 1) in shared


def test_support_obstruction_neither():
    # a lone 2^6-involution cannot form a sharing pair
    g = P([(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)], 12)
    res = support_obstruction(Group([g]), 3)
    assert res.case == "neither"
    assert res.witnesses == ()


def test_classification_report_shape_and_determinism():
    d = builtin("paper9")
    G = hole_stabilizer(d, 0)
    rep = classification_report(d, 0, G)
    assert rep["design"]["n"] == 9 and rep["design"]["lambda"] == 3
    assert rep["infinity"] == 1  # reported 1-based
    assert rep["signature"]["order"] == "288"
    assert rep["design"]["digest"] == design_digest(d)
    assert rep["orbit_sizes"] == [4, 4]
    text = dump_report(rep)
    assert text == dump_report(classification_report(d, 0, G))
    assert json.loads(text) == rep
    assert text.endswith("\n")


def test_report_includes_lambda3_table_checks():
    d = builtin("paper9")
    rep = classification_report(d, 0, hole_stabilizer(d, 0))
    assert "lambda3_classification" in rep["checks"]
    names = {c["claim"] for c in rep["checks"]["lambda3_classification"]}
    assert "classification-row" in names
    d = builtin("pg3")
    rep = classification_report(d, 0, hole_stabilizer(d, 0))
    assert "lambda3_classification" not in rep["checks"]
    names = {c["claim"] for c in rep["checks"]["stabilizer_bounds"]}
    assert "transitivity-bound" in names
    assert rep["recognized"] == "M12"
