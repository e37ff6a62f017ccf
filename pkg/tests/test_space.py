"""Sample spaces and events.

Events over a finite space form a Boolean algebra; the tests sweep the
axioms exhaustively on small spaces and spot-check the bitmask plumbing
(ordering, membership, validation) on the die space.
"""

import pytest
from hypothesis import given, strategies as st

from boolfrac.errors import SpaceMismatch, TooLarge, UnknownAtom
from boolfrac.space import Event, SampleSpace, enumerate_events, same_space


def space_of(n):
    return SampleSpace(str(i + 1) for i in range(n))


def test_atoms_keep_declaration_order():
    space = SampleSpace(["c", "a", "b"])
    assert space.atoms == ("c", "a", "b")
    assert space.n == 3
    assert space.full_bits == 0b111


def test_empty_and_full_events():
    space = space_of(3)
    assert space.empty.bits == 0
    assert space.full.bits == 0b111
    assert not space.empty
    assert space.full


def test_space_rejects_bad_atom_lists():
    with pytest.raises(ValueError):
        SampleSpace([])
    with pytest.raises(ValueError):
        SampleSpace(["a", "a"])
    with pytest.raises(ValueError):
        SampleSpace(["a", "b|c"])
    with pytest.raises(ValueError):
        SampleSpace(["a", ""])
    with pytest.raises(TooLarge):
        SampleSpace("a%d" % i for i in range(65))


def test_event_lookup_and_membership():
    space = space_of(4)
    event = space.event(["2", "4"])
    assert event.bits == 0b1010
    assert event.members() == ("2", "4")
    assert "2" in event and "3" not in event
    assert str(event) == "{2,4}"
    with pytest.raises(UnknownAtom):
        space.event(["2", "9"])
    with pytest.raises(UnknownAtom):
        "9" in event


def test_atom_singleton():
    space = space_of(3)
    assert space.atom("3").bits == 0b100


def test_event_operations_are_bitwise():
    space = space_of(4)
    a = space.event(["1", "2"])
    b = space.event(["2", "3"])
    assert (a & b).members() == ("2",)
    assert (a | b).members() == ("1", "2", "3")
    assert (~a).members() == ("3", "4")
    assert a & b <= a <= a | b


def test_enumerate_events_counts_and_order():
    space = space_of(3)
    events = enumerate_events(space)
    assert len(events) == 8
    assert [e.bits for e in events] == list(range(8))
    with pytest.raises(TooLarge):
        enumerate_events(space_of(17))


def test_same_space_guards_mixing():
    a = space_of(2)
    b = space_of(2)
    assert a == b
    with pytest.raises(SpaceMismatch):
        same_space(Event(a, 1), Event(space_of(3), 1))


def test_boolean_axioms_exhaustively_at_three_atoms():
    """meet/join/complement satisfy the Boolean algebra axioms."""
    space = space_of(3)
    events = enumerate_events(space)
    for x in events:
        assert (x & x) == x and (x | x) == x
        assert (x & ~x) == space.empty
        assert (x | ~x) == space.full
        assert ~~x == x
    for x in events:
        for y in events:
            assert x & y == y & x
            assert x | y == y | x
            assert x & (x | y) == x
            assert x | (x & y) == x
            assert ~(x & y) == ~x | ~y
    for x in events:
        for y in events:
            for z in events:
                assert x & (y | z) == (x & y) | (x & z)
                assert x | (y & z) == (x | y) & (x | z)


@st.composite
def nested_events(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    space = space_of(n)
    outer = draw(st.integers(min_value=0, max_value=space.full_bits))
    inner = draw(st.integers(min_value=0, max_value=space.full_bits)) & outer
    return Event(space, inner), Event(space, outer)


@given(nested_events())
def test_relative_complement_within_an_interval(pair):
    """For a <= b, the complement of a relative to b splits b exactly:
    a meets it in nothing and joins it back to b."""
    a, b = pair
    rc = ~a & b
    assert a & rc == a.space.empty
    assert a | rc == b
    assert ~rc & b == a
