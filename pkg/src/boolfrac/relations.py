"""Order relations, orthogonality, and joint verifiability of conditionals.

Conditionals carry several distinct order-like relations at once, all
reducible to bit inequalities on normal forms (x = (a|b), y = (c|d)):

    tr     truth order           ab <= cd
    nf     non-falsity order     c'd <= a'b
    ap     applicability order   b <= d
    pm     probability order     tr and nf (monotone for every measure)
    vee    join order            or_(x, y) == y, i.e. ap and tr
    wedge  meet order            and_(x, y) == x, i.e. d <= b and c'd <= a'b
    bo     Boolean order         b == d and ab <= cd

Orthogonality (x excludes y wherever both apply) and simultaneous
verifiability / falsifiability measure how compatible two conditionals
are as experiments; `profile` bundles the seven standard flags. The
generated subalgebra closes a pair under and/or/not and reports whether
the result is a Boolean algebra, which happens exactly for equal,
nonempty conditions.
"""

from dataclasses import dataclass

from . import conditional as cnd
from .errors import SpaceMismatch, TooLarge
from .space import same_space

RELATION_TAGS = ("tr", "nf", "ap", "pm", "vee", "wedge", "bo")

MAX_SUBALGEBRA_ATOMS = 5


def _pair(x, y):
    if x.space != y.space:
        raise SpaceMismatch("operands belong to different sample spaces")
    return x.q, x.c, y.q, y.c


def _tr(q1, c1, q2, c2):
    return q1 & ~q2 == 0


def _nf(q1, c1, q2, c2):
    return (c2 & ~q2) & ~(c1 & ~q1) == 0


def _ap(q1, c1, q2, c2):
    return c1 & ~c2 == 0


def _pm(q1, c1, q2, c2):
    return _tr(q1, c1, q2, c2) and _nf(q1, c1, q2, c2)


def _vee(q1, c1, q2, c2):
    return _ap(q1, c1, q2, c2) and _tr(q1, c1, q2, c2)


def _wedge(q1, c1, q2, c2):
    return c2 & ~c1 == 0 and (c2 & ~q2) & ~(c1 & ~q1) == 0


def _bo(q1, c1, q2, c2):
    return c1 == c2 and q1 & ~q2 == 0


_RELATIONS = {
    "tr": _tr,
    "nf": _nf,
    "ap": _ap,
    "pm": _pm,
    "vee": _vee,
    "wedge": _wedge,
    "bo": _bo,
}


def holds(tag, x, y):
    """Does relation `tag` hold between x and y (in that order)?"""
    try:
        rel = _RELATIONS[tag]
    except KeyError:
        raise ValueError("unknown relation tag: %r" % (tag,)) from None
    return rel(*_pair(x, y))


def orthogonal_bits(q1, c1, q2, c2):
    return q1 & ~(c2 & ~q2) == 0 and q2 & ~(c1 & ~q1) == 0


def orthogonal(x, y):
    """Each side's truth region lies in the other's falsity region:
    ab <= c'd and cd <= a'b. Equivalent to and_(x, y) == (0 | b v d)."""
    return orthogonal_bits(*_pair(x, y))


def ortho_family_member(c, x, y):
    """The conditional (a'b & x | ab v y) for events x, y.

    As x and y range over all events, these are exactly the conditionals
    orthogonal to c.
    """
    same_space(x, y)
    return cnd.make(c.consequent.complement() & c.condition & x, c.consequent | y)


def sim_verifiable_bits(q1, c1, q2, c2):
    return q1 & ~c2 == 0 and q2 & ~c1 == 0


def sim_verifiable(x, y):
    """Can one outcome verify both? Holds iff ab <= d and cd <= b, i.e.
    wherever one is verified the other at least applies."""
    return sim_verifiable_bits(*_pair(x, y))


def sim_falsifiable(x, y):
    """Can one outcome falsify both? Same shape on the falsity regions:
    a'b <= d and c'd <= b."""
    q1, c1, q2, c2 = _pair(x, y)
    return (c1 & ~q1) & ~c2 == 0 and (c2 & ~q2) & ~c1 == 0


def compatible(x, y):
    """Equal conditions."""
    _pair(x, y)
    return x.c == y.c


def in_common_subalgebra(x, y):
    """Do x and y live in a common Boolean subalgebra? Exactly when their
    conditions are equal and nonempty."""
    _pair(x, y)
    return x.c == y.c != 0


def decomposition_witness(x, y):
    """Split x and y into orthogonal private and shared parts, if possible.

    Looks for pairwise-orthogonal u, v, w with x == or_(u, w) and
    y == or_(v, w). Returns the triple (u, v, w) or None. A valid triple
    exists exactly when x and y are simultaneously verifiable, and then

        u = (ab & (cd)' | b),  v = (cd & (ab)' | d),  w = (ab & cd | b & d)

    works; the triple below is that candidate, verified before returning.
    """
    q1, c1, q2, c2 = _pair(x, y)
    space = x.space
    u = cnd.Conditional(space, q1 & ~q2, c1)
    v = cnd.Conditional(space, q2 & ~q1, c2)
    w = cnd.Conditional(space, q1 & q2, c1 & c2)
    ok = (
        cnd.or_(u, w) == x
        and cnd.or_(v, w) == y
        and orthogonal(u, v)
        and orthogonal(u, w)
        and orthogonal(v, w)
    )
    return (u, v, w) if ok else None


@dataclass(frozen=True)
class VerifiabilityProfile:
    """The seven standard joint-testability flags for an ordered pair
    x = (a1|a2), y = (b1|b2).

    1. truth_applicable       a1 a2 <= b2   (verifying x makes y applicable)
    2. falsity_applicable     a1' a2 <= b2  (falsifying x makes y applicable)
    3. verifiable             x and y simultaneously verifiable
    4. falsifiable            x and y simultaneously falsifiable
    5. complement_verifiable  x' and y simultaneously verifiable
    6. applicable             a2 <= b2      (same as 1 and 2 together)
    7. same_condition         a2 == b2      (same as 3 and 4 together)
    """

    truth_applicable: bool
    falsity_applicable: bool
    verifiable: bool
    falsifiable: bool
    complement_verifiable: bool
    applicable: bool
    same_condition: bool

    def flags(self):
        return (
            self.truth_applicable,
            self.falsity_applicable,
            self.verifiable,
            self.falsifiable,
            self.complement_verifiable,
            self.applicable,
            self.same_condition,
        )


def profile(x, y):
    q1, c1, q2, c2 = _pair(x, y)
    return VerifiabilityProfile(
        truth_applicable=q1 & ~c2 == 0,
        falsity_applicable=(c1 & ~q1) & ~c2 == 0,
        verifiable=sim_verifiable_bits(q1, c1, q2, c2),
        falsifiable=(c1 & ~q1) & ~c2 == 0 and (c2 & ~q2) & ~c1 == 0,
        complement_verifiable=(c1 & ~q1) & ~c2 == 0 and q2 & ~c1 == 0,
        applicable=c1 & ~c2 == 0,
        same_condition=c1 == c2,
    )


@dataclass(frozen=True)
class Subalgebra:
    members: frozenset
    is_boolean: bool


def closure_bits(seeds, ops=None):
    """Close a set of raw (q, c) pairs under not plus the given binary ops
    (or_bits and and_bits when none are given)."""
    if ops is None:
        ops = (cnd.or_bits, cnd.and_bits)
    members = set(seeds)
    while True:
        new = set()
        for m in members:
            neg = cnd.not_bits(*m)
            if neg not in members:
                new.add(neg)
        for a in members:
            for b in members:
                for op in ops:
                    r = op(a[0], a[1], b[0], b[1])
                    if r not in members:
                        new.add(r)
        if not new:
            return members
        members |= new


def _boolean_sweep(members):
    """Check the Boolean algebra axioms over a closed set of (q, c) pairs.

    Commutativity and associativity of or/and hold on all conditionals,
    so only the parts that can fail are swept: a two-sided unit and zero
    (distinct, so the one-element closure of U does not count), not as
    complement against them, absorption, and both distributive laws.
    """
    or_b, and_b, not_b = cnd.or_bits, cnd.and_bits, cnd.not_bits
    unit = None
    zero = None
    for u in members:
        uq, uc = u
        if all(and_b(q, c, uq, uc) == (q, c) and or_b(q, c, uq, uc) == u for q, c in members):
            unit = u
            break
    if unit is None:
        return False
    for z in members:
        zq, zc = z
        if all(or_b(q, c, zq, zc) == (q, c) and and_b(q, c, zq, zc) == z for q, c in members):
            zero = z
            break
    if zero is None or zero == unit:
        return False
    for q, c in members:
        nq, nc = not_b(q, c)
        if and_b(q, c, nq, nc) != zero or or_b(q, c, nq, nc) != unit:
            return False
    mem = list(members)
    for a in mem:
        for b in mem:
            if and_b(*a, *or_b(*a, *b)) != a:
                return False
            if or_b(*a, *and_b(*a, *b)) != a:
                return False
    for a in mem:
        for b in mem:
            for d in mem:
                bd_and = and_b(*b, *d)
                bd_or = or_b(*b, *d)
                if and_b(*a, *bd_or) != or_b(*and_b(*a, *b), *and_b(*a, *d)):
                    return False
                if or_b(*a, *bd_and) != and_b(*or_b(*a, *b), *or_b(*a, *d)):
                    return False
    return True


def generated_subalgebra(x, y):
    """Close {x, y} under and/or/not and test Booleanness axiomatically."""
    _pair(x, y)
    space = x.space
    if space.n > MAX_SUBALGEBRA_ATOMS:
        raise TooLarge("refusing to close a subalgebra over %d atoms" % space.n)
    members = closure_bits({(x.q, x.c), (y.q, y.c)})
    return Subalgebra(
        members=frozenset(cnd.Conditional(space, q, c) for q, c in members),
        is_boolean=_boolean_sweep(members),
    )
