"""The alternative operation pairs.

cap_s/cup_s intersect and unite both coordinates; and_s/vee_s are the
quasi-conjunction and quasi-disjunction. Each pair forms a distributive
lattice, cup_s and and_s coincide with the primary or_ and and_, and
conditioning a disjoint union on a complement collapses to the
impossible conditional.
"""

import pytest

from boolfrac import conditional as cnd
from boolfrac import schay
from boolfrac.errors import NotDisjoint
from boolfrac.space import SampleSpace


def space_of(n):
    return SampleSpace(str(i + 1) for i in range(n))


@pytest.fixture(scope="module")
def die_pair(die):
    ev = die.events
    return cnd.make(ev["two"], ev["even"]), cnd.make(ev["lt4"], ev["lt5"])


def test_cap_intersects_both_coordinates(die_pair):
    x, y = die_pair
    assert str(schay.cap_s(x, y)) == "({2}|{2,4})"


def test_vee_unites_consequents_on_the_common_condition(die_pair):
    x, y = die_pair
    assert str(schay.vee_s(x, y)) == "({2}|{2,4})"


def test_cup_coincides_with_or(die_pair):
    x, y = die_pair
    assert schay.cup_s(x, y) == cnd.or_(x, y)


def test_and_s_coincides_with_and(die_pair):
    x, y = die_pair
    assert schay.and_s(x, y) == cnd.and_(x, y)


def test_coincidences_hold_for_every_pair_at_two_atoms():
    space = space_of(2)
    pairs = cnd.enumerate_conditionals_bits(space.full_bits)
    for q1, c1 in pairs:
        for q2, c2 in pairs:
            assert schay.cup_bits(q1, c1, q2, c2) == cnd.or_bits(q1, c1, q2, c2)
            assert schay.sand_bits(q1, c1, q2, c2) == cnd.and_bits(q1, c1, q2, c2)


def test_both_pairs_absorb_at_two_atoms():
    """meet(x, join(x, y)) == x == join(x, meet(x, y)) for both pairs."""
    space = space_of(2)
    pairs = cnd.enumerate_conditionals_bits(space.full_bits)
    systems = ((schay.cap_bits, schay.cup_bits), (schay.sand_bits, schay.vee_bits))
    for meet, join in systems:
        for x in pairs:
            for y in pairs:
                assert meet(*x, *join(*x, *y)) == x
                assert join(*x, *meet(*x, *y)) == x


def test_iteration_example_collapses_disjoint_unions(die):
    space = die.space
    a = space.event(["1"])
    b = space.event(["2"])
    got = schay.schay_iteration_example(a, b)
    assert got == cnd.make(space.empty, a)
    assert str(got) == "({}|{1})"


def test_iteration_example_requires_disjoint_events(die):
    with pytest.raises(NotDisjoint):
        schay.schay_iteration_example(die.events["even"], die.events["two"])
