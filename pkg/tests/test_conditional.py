"""The conditional-event algebra.

A conditional (a|b) is stored in the normal form (a AND b, b), which is
exactly the quotient by the equivalence "(a|b) == (c|d) iff b == d and
ab == cd". The tests pin the six operations on the die examples, check
how the undefined element U flows through everything, and sweep the
algebraic laws with hypothesis over random small spaces.
"""

import pytest
from hypothesis import given, strategies as st

from boolfrac import conditional as cnd
from boolfrac.errors import SpaceMismatch
from boolfrac.space import SampleSpace


def space_of(n):
    return SampleSpace(str(i + 1) for i in range(n))


@st.composite
def conditional_triples(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    space = space_of(n)
    out = []
    for _ in range(3):
        c = draw(st.integers(min_value=0, max_value=space.full_bits))
        q = draw(st.integers(min_value=0, max_value=space.full_bits)) & c
        out.append(cnd.Conditional(space, q, c))
    return tuple(out)


@pytest.fixture(scope="module")
def die_conds(die):
    ev = die.events
    space = die.space
    return {
        "x": cnd.make(ev["two"], ev["even"]),
        "y": cnd.make(ev["lt4"], ev["lt5"]),
        "space": space,
    }


def test_make_normalizes_the_consequent(die):
    ev = die.events
    x = cnd.make(ev["two"], ev["even"])
    assert x.consequent == ev["two"]
    assert x.condition == ev["even"]
    # different representatives of the same fraction compare equal
    assert cnd.make(ev["lt4"], ev["even"]) == cnd.make(die.space.event(["2"]), ev["even"])


def test_conditional_validates_normal_form(die):
    space = die.space
    with pytest.raises(ValueError):
        cnd.Conditional(space, 0b10, 0b01)
    with pytest.raises(ValueError):
        cnd.Conditional(space, 0, 1 << space.n)


def test_undefined_element(die):
    u = cnd.undefined(die.space)
    assert u.is_undefined
    assert str(u) == "({}|{})"
    assert u == cnd.make(die.space.empty, die.space.empty)


def test_or_matches_the_die_bet(die, die_conds):
    got = cnd.or_(die_conds["x"], die_conds["y"])
    assert str(got) == "({1,2,3}|{1,2,3,4,6})"


def test_or_with_expanded_context(die):
    ev = die.events
    got = cnd.or_(cnd.make(ev["even"], ev["even"]), cnd.make(ev["five"], ev["odd"]))
    assert got == cnd.make(die.space.event(["2", "4", "5", "6"]), die.space.full)


def test_and_coincides_with_or_when_cross_terms_vanish(die_conds):
    """With ab & c'd == 0 == a'b & cd the two operations agree."""
    x, y = die_conds["x"], die_conds["y"]
    assert cnd.and_(x, y) == cnd.or_(x, y)


def test_absolute_bounds_from_the_full_condition(die, die_conds):
    space = die.space
    x = die_conds["x"]
    zero = cnd.make(space.empty, space.full)
    one = cnd.make(space.full, space.full)
    assert cnd.or_(x, zero) == cnd.make(x.consequent, space.full)
    assert cnd.and_(x, zero) == zero
    assert cnd.or_(x, one) == one
    assert cnd.and_(x, one) == cnd.make(
        x.consequent | x.condition.complement(), space.full
    )


def test_given_narrows_the_condition(die, die_conds):
    got = cnd.given(die_conds["x"], die_conds["y"])
    assert str(got) == "({2}|{2,6})"


def test_given_on_plain_events_is_simple_conditioning(die):
    ev = die.events
    space = die.space
    e = cnd.make(ev["two"], space.full)
    f = cnd.make(ev["even"], space.full)
    assert cnd.given(e, f) == cnd.make(ev["two"] & ev["even"], ev["even"])


def test_osum_on_the_die_pair(die_conds):
    got = cnd.osum(die_conds["x"], die_conds["y"])
    assert str(got) == "({}|{1,2,3,4,6})"


def test_osum_unit_and_self_cancellation(die_conds):
    x = die_conds["x"]
    space = die_conds["space"]
    zero = cnd.make(space.empty, x.condition)
    assert cnd.osum(x, zero) == x
    assert cnd.osum(x, x) == zero
    assert cnd.osum(x, cnd.negate(x)) == cnd.make(x.condition, x.condition)


def test_sasaki_projects_through_the_first_operand(die_conds):
    got = cnd.sasaki(die_conds["y"], die_conds["x"])
    assert str(got) == "({2}|{1,2,3,4,6})"


def test_sasaki_is_idempotent_on_the_die_pair(die_conds):
    x, y = die_conds["x"], die_conds["y"]
    assert cnd.sasaki(y, y) == y
    once = cnd.sasaki(y, x)
    assert cnd.sasaki(y, once) == once


def test_undefined_passes_through_or_and_given(die_conds):
    x = die_conds["x"]
    u = cnd.undefined(die_conds["space"])
    assert cnd.or_(x, u) == x
    assert cnd.and_(x, u) == x
    assert cnd.given(x, u) == x
    assert cnd.given(u, x) == u
    assert cnd.negate(u) == u


def test_operations_reject_mixed_spaces(die_conds):
    other = cnd.undefined(space_of(2))
    with pytest.raises(SpaceMismatch):
        cnd.or_(die_conds["x"], other)


def test_enumeration_counts_and_order():
    pairs = cnd.enumerate_conditionals_bits(space_of(2).full_bits)
    assert len(pairs) == 9
    assert pairs[0] == (0, 0)
    conditions = [c for _, c in pairs]
    assert conditions == sorted(conditions)
    for q, c in pairs:
        assert q & ~c == 0


@given(conditional_triples())
def test_or_and_are_commutative_associative_idempotent(triple):
    x, y, z = triple
    for op in (cnd.or_, cnd.and_):
        assert op(x, y) == op(y, x)
        assert op(op(x, y), z) == op(x, op(y, z))
        assert op(x, x) == x


@given(conditional_triples())
def test_de_morgan_both_ways(triple):
    x, y, _ = triple
    assert cnd.negate(cnd.or_(x, y)) == cnd.and_(cnd.negate(x), cnd.negate(y))
    assert cnd.negate(cnd.and_(x, y)) == cnd.or_(cnd.negate(x), cnd.negate(y))


@given(conditional_triples())
def test_negation_is_an_involution_with_relative_complements(triple):
    x, _, _ = triple
    space = x.space
    assert cnd.negate(cnd.negate(x)) == x
    assert cnd.and_(x, cnd.negate(x)) == cnd.Conditional(space, 0, x.c)
    assert cnd.or_(x, cnd.negate(x)) == cnd.Conditional(space, x.c, x.c)


@given(conditional_triples())
def test_sasaki_equals_its_defining_composition(triple):
    b, a, _ = triple
    composed = cnd.and_(b, cnd.or_(cnd.negate(b), a))
    assert cnd.sasaki(b, a) == composed


@given(conditional_triples())
def test_osum_is_commutative(triple):
    x, y, _ = triple
    assert cnd.osum(x, y) == cnd.osum(y, x)


@given(conditional_triples())
def test_results_stay_in_normal_form(triple):
    x, y, _ = triple
    for op in (cnd.or_, cnd.and_, cnd.given, cnd.osum, cnd.sasaki):
        out = op(x, y)
        assert out.q & ~out.c == 0
        assert 0 <= out.c <= x.space.full_bits
