"""Exact conditional probability over weighted sample spaces.

A measure assigns a nonnegative rational weight to every atom, with a
positive total. The probability of a conditional (a|b) is the weight of
a&b over the weight of b, undefined (ZeroCondition) when b has weight
zero. Everything here is computed in fractions.Fraction, so all
comparisons are exact.

Besides the direct quotient, this module carries three expansion
formulas and the additivity report:

  * p_or_formula: inclusion-exclusion for (a|b) v (c|d) through the
    chain rule, conditioning on b v d.
  * p_superposition: a three-term decomposition of the same disjunction
    (or of the conjunction) into disjoint contexts b&d', b'&d, b&d.
  * partition_expansion: the law of total probability over a partition
    of the condition.
  * additive_law_check: P(x v y) = P(x) + P(y) holds exactly in four
    degenerate situations; the report lists which apply.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import conditional as cnd
from .errors import (
    BadWeight,
    NotAPartition,
    SpaceMismatch,
    ZeroCondition,
    ZeroTotalWeight,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class Measure:
    """Nonnegative rational atom weights with a positive total."""

    __slots__ = ("space", "weights", "total")

    def __init__(self, space, weights):
        weights = tuple(Fraction(w) for w in weights)
        if len(weights) != space.n:
            raise ValueError(
                "expected %d weights, got %d" % (space.n, len(weights))
            )
        for w in weights:
            if w < 0:
                raise BadWeight("negative weight %s" % (w,))
        total = sum(weights)
        if total == 0:
            raise ZeroTotalWeight("all atom weights are zero")
        self.space = space
        self.weights = weights
        self.total = total

    def weight_bits(self, bits):
        total = ZERO
        while bits:
            low = bits & -bits
            total += self.weights[low.bit_length() - 1]
            bits &= bits - 1
        return total

    def weight(self, event):
        if event.space != self.space:
            raise SpaceMismatch("event belongs to a different sample space")
        return self.weight_bits(event.bits)

    def __repr__(self):
        return "Measure(%r)" % (list(self.weights),)


def _check(m, x):
    if m.space != x.space:
        raise SpaceMismatch("measure and operand disagree on the sample space")


def p_event(m, a):
    """Unconditional probability of an event."""
    return m.weight(a) / m.total


def p_cond(m, x):
    """Probability of a conditional: weight of consequent over condition."""
    _check(m, x)
    wc = m.weight_bits(x.c)
    if wc == 0:
        raise ZeroCondition("condition %s has weight zero" % (x.condition,))
    return m.weight_bits(x.q) / wc


def p_or_formula(m, x, y):
    """P((a|b) v (c|d)) by inclusion-exclusion on the context b v d:

        P(a|b)P(b|bvd) + P(c|d)P(d|bvd) - P(abcd|bd)P(bd|bvd)

    Each product collapses to a single quotient over w(b v d); a product
    whose inner condition has weight zero contributes zero, which is the
    value the collapsed quotient has anyway. Always equals
    p_cond(or_(x, y)).
    """
    _check(m, x)
    _check(m, y)
    if x.space != y.space:
        raise SpaceMismatch("operands belong to different sample spaces")
    w = m.weight_bits
    wu = w(x.c | y.c)
    if wu == 0:
        raise ZeroCondition("condition %s has weight zero" % (x.condition | y.condition,))

    def term(num_bits, mid_bits):
        wm = w(mid_bits)
        if wm == 0:
            return ZERO
        return (w(num_bits) / wm) * (wm / wu)

    return (
        term(x.q, x.c)
        + term(y.q, y.c)
        - term(x.q & y.q, x.c & y.c)
    )


def p_superposition(m, x, y, mode="or"):
    """Three-term expansion of (a|b) v (c|d) or (a|b) ^ (c|d).

    The context b v d splits into b&d' (only x defined), b'&d (only y
    defined) and b&d (both defined). On the one-sided parts the operand
    passes through; on the overlap the consequents combine by v or ^:

        P(a|bd')P(bd'|bvd) + P(c|b'd)P(b'd|bvd) + P((a op c)bd|bvd)

    A product whose inner condition has weight zero contributes zero.
    Always equals p_cond of or_(x, y) / and_(x, y).
    """
    _check(m, x)
    _check(m, y)
    if x.space != y.space:
        raise SpaceMismatch("operands belong to different sample spaces")
    if mode not in ("or", "and"):
        raise ValueError("mode must be 'or' or 'and', got %r" % (mode,))
    w = m.weight_bits
    union = x.c | y.c
    wu = w(union)
    if wu == 0:
        raise ZeroCondition("condition %s has weight zero" % (x.condition | y.condition,))

    def side(q_bits, ctx_bits):
        wctx = w(ctx_bits)
        if wctx == 0:
            return ZERO
        return (w(q_bits & ctx_bits) / wctx) * (wctx / wu)

    only_x = x.c & ~y.c
    only_y = y.c & ~x.c
    both = x.c & y.c
    if mode == "or":
        overlap = (x.q | y.q) & both
    else:
        overlap = x.q & y.q
    return side(x.q, only_x) + side(y.q, only_y) + w(overlap) / wu


def partition_expansion(m, a, parts):
    """Law of total probability: P(a|u) as sum of P(a|u_i)P(u_i|u).

    The parts must be pairwise disjoint events; their join is the
    condition u. Weight-zero parts contribute zero.
    """
    parts = list(parts)
    if not parts:
        raise NotAPartition("no parts given")
    union = 0
    for part in parts:
        if part.space != a.space:
            raise SpaceMismatch("part belongs to a different sample space")
        if part.bits & union:
            raise NotAPartition("parts overlap at %s" % (part,))
        union |= part.bits
    _check(m, a)
    wu = m.weight_bits(union)
    if wu == 0:
        raise ZeroCondition("partition union has weight zero")
    total = ZERO
    for part in parts:
        wp = m.weight_bits(part.bits)
        if wp == 0:
            continue
        total += (m.weight_bits(a.bits & part.bits) / wp) * (wp / wu)
    return total


@dataclass(frozen=True)
class AdditiveReport:
    """Outcome of the additivity probe for one instance."""

    lhs: Fraction
    rhs: Fraction
    holds: bool
    cases: tuple


def additive_law_check(m, a, c1, b, c2):
    """Does P((A|C1) v (B|C2)) equal P(A|C1) + P(B|C2) here?

    Exact additivity is rare; it holds precisely when one of four
    degeneracies does, all read relative to the measure (an event is
    null when its weight is zero):

      1. A&C1 and B&C2 are both null.
      2. A&C1 is null and C1 <= C2 almost surely.
      3. B&C2 is null and C2 <= C1 almost surely.
      4. C1 = C2 almost surely and A&B&C1 is null.

    The report carries both sides and the list of case numbers that
    apply; holds is true exactly when the list is nonempty.
    """
    x = cnd.make(a, c1)
    y = cnd.make(b, c2)
    w = m.weight_bits
    if w(x.c) == 0 or w(y.c) == 0:
        raise ZeroCondition("both conditions need positive weight")
    lhs = p_cond(m, cnd.or_(x, y))
    rhs = p_cond(m, x) + p_cond(m, y)

    ac1_null = w(x.q) == 0
    bc2_null = w(y.q) == 0
    c1_in_c2 = w(x.c & ~y.c) == 0
    c2_in_c1 = w(y.c & ~x.c) == 0
    cases = []
    if ac1_null and bc2_null:
        cases.append(1)
    if ac1_null and c1_in_c2:
        cases.append(2)
    if bc2_null and c2_in_c1:
        cases.append(3)
    if c1_in_c2 and c2_in_c1 and w(x.q & y.q) == 0:
        cases.append(4)
    return AdditiveReport(lhs=lhs, rhs=rhs, holds=lhs == rhs, cases=tuple(cases))
