"""Acceptance gate: one test per criterion, one printed line per outcome.

Two criteria fail by design and stay red: the unique 9-point system's
hole stabilizer computes as intransitive with orbits of size 4 and 4
(verified against an independent brute-force closure), while the
bundled consistency table asserts a transitive imprimitive group of
order 288 at that degree.  The table is kept as the reference says it
and the disagreement is reported rather than hidden; see the README
for the full story.
"""

import os

import pytest

from supersimple import acceptance


@pytest.fixture(scope="module")
def outcomes():
    include_stretch = bool(os.environ.get("SUPERSIMPLE_STRETCH"))
    results = acceptance.run_all(seed=0, workers=1,
                                 include_stretch=include_stretch)
    return {o.cid: o for o in results}


def check(outcomes, cid):
    o = outcomes[cid]
    print(o.line())
    assert o.passed, o.line()


def test_unique_8(outcomes):
    check(outcomes, "unique-8")


def test_unique_9(outcomes):
    check(outcomes, "unique-9")


def test_m12_from_pg3(outcomes):
    check(outcomes, "m12-from-pg3")


def test_boolean_systems(outcomes):
    check(outcomes, "boolean-systems")


def test_sym9_at_lambda4(outcomes):
    check(outcomes, "sym9-at-lambda4")


def test_move_properties(outcomes):
    check(outcomes, "move-properties")


def test_oracle_equivalence(outcomes):
    check(outcomes, "oracle-equivalence")


def test_table_consistency(outcomes):
    check(outcomes, "table-consistency")


@pytest.mark.skipif(not os.environ.get("SUPERSIMPLE_STRETCH"),
                    reason="census of 2-(12,4,3) designs takes hours; "
                           "set SUPERSIMPLE_STRETCH=1 to include it")
def test_census_12(outcomes):
    check(outcomes, "census-12")
