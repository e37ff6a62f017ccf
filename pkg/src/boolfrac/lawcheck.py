"""Exhaustive verification of the algebra's laws over small spaces.

Every law in the catalog is checked by brute force: all conditionals
(all pairs, all triples, ...) over a space of `atoms` atoms named
"1", "2", ..., and for measure-sensitive laws all weight vectors with
entries in 0..max_weight except the all-zero one. A LawReport records
how many instances were evaluated and, when the law fails, the first
counterexample in enumeration order: conditions ascend as bitmasks and
consequents ascend within each condition, so reruns are byte-identical.

The checks deliberately take two routes to each fact. Equations are
evaluated through the bit kernels in `conditional` (and the independent
ones in `schay`), while the side conditions characterizing them are
spelled out as direct bit inequalities here. A mutation in a kernel
therefore shows up as a mismatch against the independent
characterization rather than being silently replicated on both sides.

Budgets: the triple-quantified laws run up to 4 atoms; laws that sweep
measure grids, search for decompositions, or close subalgebras stop at
3 (their instance spaces grow much faster). check_all clamps each law
to its own budget.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from . import conditional as cnd
from . import prob
from . import relations as rel
from . import schay
from . import trivalent as tv
from .errors import TooLarge, UnknownLaw
from .lang import format_conditional
from .space import Event, SampleSpace


@dataclass(frozen=True)
class LawReport:
    law: str
    atom_count: int
    instances_checked: int
    passed: bool
    counterexample: str = None
    note: str = None


MAX_ENUMERATION_ATOMS = 5


def law_space(atoms):
    """The standard checking space: atoms named "1" .. str(atoms)."""
    return SampleSpace(str(i + 1) for i in range(atoms))


def enumerate_conditionals(space):
    """All 3**n conditionals of a space, in canonical enumeration order."""
    if space.n > MAX_ENUMERATION_ATOMS:
        raise TooLarge("refusing to enumerate conditionals over %d atoms" % space.n)
    return [
        cnd.Conditional(space, q, c)
        for q, c in cnd.enumerate_conditionals_bits(space.full_bits)
    ]


def _formatter(space):
    def fmt(pair):
        return format_conditional(cnd.Conditional(space, pair[0], pair[1]))

    return fmt


def _grids(space, max_weight):
    """All usable weight vectors, ascending lexicographically."""
    for weights in product(range(max_weight + 1), repeat=space.n):
        if any(weights):
            yield weights


def _tf(flag):
    return "true" if flag else "false"


# ---------------------------------------------------------------- laws


def _law_t2_4(space, pairs, max_weight):
    """and_(x, or_(y, z)) == or_(and_(x, y), and_(x, z)) iff
    ab & e'f <= d and ab & c'd <= f."""
    or_b, and_b = cnd.or_bits, cnd.and_bits
    fmt = _formatter(space)
    count = 0
    for q1, c1 in pairs:
        for q2, c2 in pairs:
            for q3, c3 in pairs:
                count += 1
                lhs = and_b(q1, c1, *or_b(q2, c2, q3, c3))
                rhs = or_b(*and_b(q1, c1, q2, c2), *and_b(q1, c1, q3, c3))
                side = (q1 & c3 & ~q3 & ~c2) == 0 and (q1 & c2 & ~q2 & ~c3) == 0
                if (lhs == rhs) != side:
                    return count, (
                        "x=%s y=%s z=%s lhs=%s rhs=%s side=%s"
                        % (fmt((q1, c1)), fmt((q2, c2)), fmt((q3, c3)),
                           fmt(lhs), fmt(rhs), _tf(side))
                    ), None
    return count, None, None


def _law_c2_5(space, pairs, max_weight):
    """or_(x, and_(y, z)) == and_(or_(x, y), or_(x, z)) iff
    a'b & ef <= d and a'b & cd <= f."""
    or_b, and_b = cnd.or_bits, cnd.and_bits
    fmt = _formatter(space)
    count = 0
    for q1, c1 in pairs:
        nay = c1 & ~q1
        for q2, c2 in pairs:
            for q3, c3 in pairs:
                count += 1
                lhs = or_b(q1, c1, *and_b(q2, c2, q3, c3))
                rhs = and_b(*or_b(q1, c1, q2, c2), *or_b(q1, c1, q3, c3))
                side = (nay & q3 & ~c2) == 0 and (nay & q2 & ~c3) == 0
                if (lhs == rhs) != side:
                    return count, (
                        "x=%s y=%s z=%s lhs=%s rhs=%s side=%s"
                        % (fmt((q1, c1)), fmt((q2, c2)), fmt((q3, c3)),
                           fmt(lhs), fmt(rhs), _tf(side))
                    ), None
    return count, None, None


def _law_t2_6(space, pairs, max_weight):
    """or_(x, and_(y, z)) == and_(or_(x, y), z) iff
    ab & e'f == 0 and a'b & ef <= d."""
    or_b, and_b = cnd.or_bits, cnd.and_bits
    fmt = _formatter(space)
    count = 0
    for q1, c1 in pairs:
        nay = c1 & ~q1
        for q2, c2 in pairs:
            for q3, c3 in pairs:
                count += 1
                lhs = or_b(q1, c1, *and_b(q2, c2, q3, c3))
                rhs = and_b(*or_b(q1, c1, q2, c2), q3, c3)
                side = (q1 & c3 & ~q3) == 0 and (nay & q3 & ~c2) == 0
                if (lhs == rhs) != side:
                    return count, (
                        "x=%s y=%s z=%s lhs=%s rhs=%s side=%s"
                        % (fmt((q1, c1)), fmt((q2, c2)), fmt((q3, c3)),
                           fmt(lhs), fmt(rhs), _tf(side))
                    ), None
    return count, None, None


def _law_c2_7(space, pairs, max_weight):
    """and_(x, or_(y, z)) == or_(and_(x, y), z) iff
    a'b & ef == 0 and ab & e'f <= d."""
    or_b, and_b = cnd.or_bits, cnd.and_bits
    fmt = _formatter(space)
    count = 0
    for q1, c1 in pairs:
        nay = c1 & ~q1
        for q2, c2 in pairs:
            for q3, c3 in pairs:
                count += 1
                lhs = and_b(q1, c1, *or_b(q2, c2, q3, c3))
                rhs = or_b(*and_b(q1, c1, q2, c2), q3, c3)
                side = (nay & q3) == 0 and (q1 & c3 & ~q3 & ~c2) == 0
                if (lhs == rhs) != side:
                    return count, (
                        "x=%s y=%s z=%s lhs=%s rhs=%s side=%s"
                        % (fmt((q1, c1)), fmt((q2, c2)), fmt((q3, c3)),
                           fmt(lhs), fmt(rhs), _tf(side))
                    ), None
    return count, None, None


def _law_c2_8(space, pairs, max_weight):
    """and_(x, or_(not x, z)) == z iff b <= f and a'b <= e'f."""
    or_b, and_b, not_b = cnd.or_bits, cnd.and_bits, cnd.not_bits
    fmt = _formatter(space)
    count = 0
    for q1, c1 in pairs:
        neg = not_b(q1, c1)
        for q3, c3 in pairs:
            count += 1
            lhs = and_b(q1, c1, *or_b(*neg, q3, c3))
            side = (c1 & ~c3) == 0 and ((c1 & ~q1) & ~(c3 & ~q3)) == 0
            if (lhs == (q3, c3)) != side:
                return count, (
                    "x=%s z=%s lhs=%s side=%s"
                    % (fmt((q1, c1)), fmt((q3, c3)), fmt(lhs), _tf(side))
                ), None
    return count, None, None


def _law_c2_9(space, pairs, max_weight):
    """or_(x, and_(not x, z)) == z iff b <= f and ab <= ef."""
    or_b, and_b, not_b = cnd.or_bits, cnd.and_bits, cnd.not_bits
    fmt = _formatter(space)
    count = 0
    for q1, c1 in pairs:
        neg = not_b(q1, c1)
        for q3, c3 in pairs:
            count += 1
            lhs = or_b(q1, c1, *and_b(*neg, q3, c3))
            side = (c1 & ~c3) == 0 and (q1 & ~q3) == 0
            if (lhs == (q3, c3)) != side:
                return count, (
                    "x=%s z=%s lhs=%s side=%s"
                    % (fmt((q1, c1)), fmt((q3, c3)), fmt(lhs), _tf(side))
                ), None
    return count, None, None


def _law_props2_3(space, pairs, max_weight):
    """Basic identities: idempotence, commutativity, associativity,
    double negation, De Morgan, U as pass-through, (0|1) and (1|1) as
    absolutes, and the conditioned absorption
    and_(x, y) == and_(y, given(x, y))."""
    or_b, and_b, not_b, giv_b = cnd.or_bits, cnd.and_bits, cnd.not_bits, cnd.given_bits
    fmt = _formatter(space)
    full = space.full_bits
    count = 0
    for p in pairs:
        q1, c1 = p
        count += 1
        checks = (
            ("not(not x) == x", not_b(*not_b(q1, c1)) == p),
            ("or_(x, x) == x", or_b(q1, c1, q1, c1) == p),
            ("and_(x, x) == x", and_b(q1, c1, q1, c1) == p),
            ("or_(x, U) == x", or_b(q1, c1, 0, 0) == p),
            ("and_(x, U) == x", and_b(q1, c1, 0, 0) == p),
            ("or_(x, (0|1)) == (ab|1)", or_b(q1, c1, 0, full) == (q1, full)),
            ("and_(x, (0|1)) == (0|1)", and_b(q1, c1, 0, full) == (0, full)),
            ("or_(x, (1|1)) == (1|1)", or_b(q1, c1, full, full) == (full, full)),
            ("and_(x, (1|1)) == (a v b'|1)",
             and_b(q1, c1, full, full) == (q1 | (full & ~c1), full)),
        )
        for label, ok in checks:
            if not ok:
                return count, "%s fails at x=%s" % (label, fmt(p)), None
    for p in pairs:
        q1, c1 = p
        for s in pairs:
            q2, c2 = s
            count += 1
            if or_b(q1, c1, q2, c2) != or_b(q2, c2, q1, c1):
                return count, "or_ not commutative at x=%s y=%s" % (fmt(p), fmt(s)), None
            if and_b(q1, c1, q2, c2) != and_b(q2, c2, q1, c1):
                return count, "and_ not commutative at x=%s y=%s" % (fmt(p), fmt(s)), None
            if not_b(*or_b(q1, c1, q2, c2)) != and_b(*not_b(q1, c1), *not_b(q2, c2)):
                return count, "De Morgan (or) fails at x=%s y=%s" % (fmt(p), fmt(s)), None
            if not_b(*and_b(q1, c1, q2, c2)) != or_b(*not_b(q1, c1), *not_b(q2, c2)):
                return count, "De Morgan (and) fails at x=%s y=%s" % (fmt(p), fmt(s)), None
            if and_b(q1, c1, q2, c2) != and_b(q2, c2, *giv_b(q1, c1, q2, c2)):
                return count, (
                    "and_(x, y) != and_(y, given(x, y)) at x=%s y=%s" % (fmt(p), fmt(s))
                ), None
    for q1, c1 in pairs:
        for q2, c2 in pairs:
            for q3, c3 in pairs:
                count += 1
                if or_b(*or_b(q1, c1, q2, c2), q3, c3) != or_b(q1, c1, *or_b(q2, c2, q3, c3)):
                    return count, (
                        "or_ not associative at x=%s y=%s z=%s"
                        % (fmt((q1, c1)), fmt((q2, c2)), fmt((q3, c3)))
                    ), None
                if and_b(*and_b(q1, c1, q2, c2), q3, c3) != and_b(q1, c1, *and_b(q2, c2, q3, c3)):
                    return count, (
                        "and_ not associative at x=%s y=%s z=%s"
                        % (fmt((q1, c1)), fmt((q2, c2)), fmt((q3, c3)))
                    ), None
    return count, None, None


def _law_t2_13(space, pairs, max_weight):
    """P(x v y) == P(x) + P(y) exactly when one of the four degenerate
    cases applies: additive_law_check.holds iff its case list is
    nonempty, over every measure on the grid."""
    events = [Event(space, bits) for bits in range(space.full_bits + 1)]
    count = 0
    for weights in _grids(space, max_weight):
        m = prob.Measure(space, weights)
        wb = m.weight_bits
        conds = [e for e in events if wb(e.bits) != 0]
        for e_c1 in conds:
            for e_c2 in conds:
                for e_a in events:
                    for e_b in events:
                        count += 1
                        rep = prob.additive_law_check(m, e_a, e_c1, e_b, e_c2)
                        if rep.holds != bool(rep.cases):
                            return count, (
                                "weights=%s A=%s C1=%s B=%s C2=%s lhs=%s rhs=%s cases=%s"
                                % (list(weights), e_a, e_c1, e_b, e_c2,
                                   rep.lhs, rep.rhs, list(rep.cases))
                            ), None
    return count, None, None


def _law_t2_18(space, pairs, max_weight):
    """The conditionals orthogonal to c are exactly the family
    (a'b & x | ab v y) over all event pairs (x, y); and the inequality
    form of orthogonality coincides with and_(c, z) == (0 | b v d)."""
    and_b = cnd.and_bits
    fmt = _formatter(space)
    count = 0
    all_bits = range(space.full_bits + 1)
    for p in pairs:
        q1, c1 = p
        cond_obj = cnd.Conditional(space, q1, c1)
        orth_set = set()
        for s in pairs:
            q2, c2 = s
            count += 1
            by_op = and_b(q1, c1, q2, c2) == (0, c1 | c2)
            by_ineq = rel.orthogonal_bits(q1, c1, q2, c2)
            if by_op != by_ineq:
                return count, (
                    "orthogonality routes disagree at c=%s z=%s: op=%s ineq=%s"
                    % (fmt(p), fmt(s), _tf(by_op), _tf(by_ineq))
                ), None
            if by_ineq:
                orth_set.add(s)
        family = set()
        for xbits in all_bits:
            for ybits in all_bits:
                count += 1
                member = rel.ortho_family_member(
                    cond_obj, Event(space, xbits), Event(space, ybits)
                )
                family.add((member.q, member.c))
        if family != orth_set:
            diff = sorted(family ^ orth_set)[0]
            return count, (
                "family and orthogonality set differ at c=%s, e.g. %s"
                % (fmt(p), fmt(diff))
            ), None
    return count, None, None


def _law_t2_19(space, pairs, max_weight):
    """The set of conditionals orthogonal to c is closed under or_ and
    and_."""
    or_b, and_b = cnd.or_bits, cnd.and_bits
    fmt = _formatter(space)
    count = 0
    for p in pairs:
        q1, c1 = p
        members = [s for s in pairs if rel.orthogonal_bits(q1, c1, *s)]
        member_set = set(members)
        for u in members:
            for v in members:
                count += 1
                if or_b(*u, *v) not in member_set:
                    return count, (
                        "or_ of orthogonals leaves the set at c=%s u=%s v=%s"
                        % (fmt(p), fmt(u), fmt(v))
                    ), None
                if and_b(*u, *v) not in member_set:
                    return count, (
                        "and_ of orthogonals leaves the set at c=%s u=%s v=%s"
                        % (fmt(p), fmt(u), fmt(v))
                    ), None
    return count, None, None


def _law_p2_20(space, pairs, max_weight):
    """Negation is an involution (hence a bijection), reverses the pm
    order, and meets its relative complement laws:
    and_(x, not x) == (0|b), or_(x, not x) == (1|b)."""
    or_b, and_b, not_b = cnd.or_bits, cnd.and_bits, cnd.not_bits
    fmt = _formatter(space)
    count = 0
    for p in pairs:
        q1, c1 = p
        neg = not_b(q1, c1)
        count += 1
        if not_b(*neg) != p:
            return count, "negation is not an involution at x=%s" % fmt(p), None
        if and_b(q1, c1, *neg) != (0, c1):
            return count, "and_(x, not x) != (0|b) at x=%s" % fmt(p), None
        if or_b(q1, c1, *neg) != (c1, c1):
            return count, "or_(x, not x) != (1|b) at x=%s" % fmt(p), None
    for p in pairs:
        q1, c1 = p
        for s in pairs:
            q2, c2 = s
            count += 1
            fwd = (q1 & ~q2) == 0 and ((c2 & ~q2) & ~(c1 & ~q1)) == 0
            bwd = ((c2 & ~q2) & ~(c1 & ~q1)) == 0 and (q1 & ~q2) == 0
            # pm(not y, not x) spelled on the negated pairs:
            nq1, nc1 = not_b(q2, c2)
            nq2, nc2 = not_b(q1, c1)
            neg_pm = (nq1 & ~nq2) == 0 and ((nc2 & ~nq2) & ~(nc1 & ~nq1)) == 0
            if fwd != neg_pm or bwd != neg_pm:
                return count, (
                    "pm does not reverse under negation at x=%s y=%s" % (fmt(p), fmt(s))
                ), None
    return count, None, None


def _law_truth_tables(space, pairs, max_weight):
    """Pointwise soundness: evaluating op(x, y) at an outcome equals the
    three-valued table applied to the evaluations of x and y, for and_,
    or_, given and not. Over every pair this pins all thirty table
    entries."""
    fmt = _formatter(space)
    bits = [1 << i for i in range(space.n)]
    ops = (
        ("and", cnd.and_bits, tv.tt_and),
        ("or", cnd.or_bits, tv.tt_or),
        ("given", cnd.given_bits, tv.tt_given),
    )
    ev = tv.eval_at_bit
    count = 0
    for q1, c1 in pairs:
        for q2, c2 in pairs:
            results = [(name, op(q1, c1, q2, c2), table) for name, op, table in ops]
            for bit in bits:
                p_val = ev(q1, c1, bit)
                s_val = ev(q2, c2, bit)
                for name, (rq, rc), table in results:
                    count += 1
                    if ev(rq, rc, bit) != table(p_val, s_val):
                        return count, (
                            "%s disagrees with its table at x=%s y=%s atom=%s"
                            % (name, fmt((q1, c1)), fmt((q2, c2)),
                               space.atoms[bit.bit_length() - 1])
                        ), None
    for q1, c1 in pairs:
        nq, nc = cnd.not_bits(q1, c1)
        for bit in bits:
            count += 1
            if ev(nq, nc, bit) != tv.tt_not(ev(q1, c1, bit)):
                return count, (
                    "not disagrees with its table at x=%s atom=%s"
                    % (fmt((q1, c1)), space.atoms[bit.bit_length() - 1])
                ), None
    return count, None, None


def _law_superposition(space, pairs, max_weight):
    """The context split b&d' / b'&d / b&d: the three-term conditional
    identities for or_ and and_, the or==and criterion
    (ab & c'd == 0 == a'b & cd), and the probability expansions
    p_or_formula / p_superposition agreeing with p_cond on every grid
    measure."""
    or_b, and_b = cnd.or_bits, cnd.and_bits
    fmt = _formatter(space)
    count = 0
    for p in pairs:
        q1, c1 = p
        for s in pairs:
            q2, c2 = s
            count += 1
            union = c1 | c2
            both = c1 & c2
            lhs_or = or_b(q1, c1, q2, c2)
            lhs_and = and_b(q1, c1, q2, c2)
            two = or_b(
                *and_b(q1, c1, c1, union),
                *and_b(q2, c2, c2, union),
            )
            if lhs_or != two:
                return count, (
                    "two-term split fails at x=%s y=%s lhs=%s rhs=%s"
                    % (fmt(p), fmt(s), fmt(lhs_or), fmt(two))
                ), None
            only_x = and_b(q1, c1, c1 & ~c2, union)
            only_y = and_b(q2, c2, c2 & ~c1, union)
            three_or = or_b(*or_b(*only_x, *only_y), (q1 | q2) & both, union)
            if lhs_or != three_or:
                return count, (
                    "three-term or split fails at x=%s y=%s lhs=%s rhs=%s"
                    % (fmt(p), fmt(s), fmt(lhs_or), fmt(three_or))
                ), None
            three_and = or_b(*or_b(*only_x, *only_y), q1 & q2, union)
            if lhs_and != three_and:
                return count, (
                    "three-term and split fails at x=%s y=%s lhs=%s rhs=%s"
                    % (fmt(p), fmt(s), fmt(lhs_and), fmt(three_and))
                ), None
            coincide = (q1 & (c2 & ~q2)) == 0 and ((c1 & ~q1) & q2) == 0
            if (lhs_or == lhs_and) != coincide:
                return count, (
                    "or==and criterion fails at x=%s y=%s" % (fmt(p), fmt(s))
                ), None
    conds = [cnd.Conditional(space, q, c) for q, c in pairs]
    for weights in _grids(space, max_weight):
        m = prob.Measure(space, weights)
        wb = m.weight_bits
        for x in conds:
            for y in conds:
                if wb(x.c | y.c) == 0:
                    continue
                count += 1
                direct_or = prob.p_cond(m, cnd.or_(x, y))
                direct_and = prob.p_cond(m, cnd.and_(x, y))
                ok = (
                    prob.p_or_formula(m, x, y) == direct_or
                    and prob.p_superposition(m, x, y, "or") == direct_or
                    and prob.p_superposition(m, x, y, "and") == direct_and
                )
                if not ok:
                    return count, (
                        "probability expansions disagree at weights=%s x=%s y=%s"
                        % (list(weights), format_conditional(x), format_conditional(y))
                    ), None
    return count, None, None


def _decomposition_index(pairs):
    """For every conditional j: the orthogonal splittings or_(p, r) == j,
    grouped by the shared part r."""
    or_b = cnd.or_bits
    orth = rel.orthogonal_bits
    index = {}
    for p in pairs:
        for r in pairs:
            if orth(*p, *r):
                j = or_b(*p, *r)
                index.setdefault(j, {}).setdefault(r, []).append(p)
    return index


def _law_t3_2(space, pairs, max_weight):
    """Simultaneous verifiability (ab <= d and cd <= b) holds exactly
    when x and y split into pairwise-orthogonal private parts plus a
    shared part: x == or_(u, w), y == or_(v, w). The search is a full
    enumeration of all splittings."""
    orth = rel.orthogonal_bits
    fmt = _formatter(space)
    index = _decomposition_index(pairs)
    count = 0
    for x in pairs:
        q1, c1 = x
        by_r_x = index.get(x, {})
        for y in pairs:
            q2, c2 = y
            count += 1
            expected = (q1 & ~c2) == 0 and (q2 & ~c1) == 0
            by_r_y = index.get(y, {})
            found = False
            for r, us in by_r_x.items():
                vs = by_r_y.get(r)
                if vs is None:
                    continue
                for u in us:
                    for v in vs:
                        if orth(*u, *v):
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if found != expected:
                return count, (
                    "decomposition search disagrees with the inequality at "
                    "x=%s y=%s: search=%s inequality=%s"
                    % (fmt(x), fmt(y), _tf(found), _tf(expected))
                ), None
    return count, None, None


def _law_c3_3(space, pairs, max_weight):
    """and_(x, y) == (abcd | b v d) exactly when x and y are
    simultaneously verifiable."""
    and_b = cnd.and_bits
    fmt = _formatter(space)
    count = 0
    for x in pairs:
        q1, c1 = x
        for y in pairs:
            q2, c2 = y
            count += 1
            collapses = and_b(q1, c1, q2, c2) == (q1 & q2, c1 | c2)
            simver = (q1 & ~c2) == 0 and (q2 & ~c1) == 0
            if collapses != simver:
                return count, (
                    "x=%s y=%s collapse=%s simver=%s"
                    % (fmt(x), fmt(y), _tf(collapses), _tf(simver))
                ), None
    return count, None, None


def _law_c3_5(space, pairs, max_weight):
    """Simultaneous falsifiability (a'b <= d and c'd <= b) is
    simultaneous verifiability of the negations."""
    not_b = cnd.not_bits
    fmt = _formatter(space)
    count = 0
    for x in pairs:
        q1, c1 = x
        for y in pairs:
            q2, c2 = y
            count += 1
            direct = ((c1 & ~q1) & ~c2) == 0 and ((c2 & ~q2) & ~c1) == 0
            nx = not_b(q1, c1)
            ny = not_b(q2, c2)
            via_neg = (nx[0] & ~ny[1]) == 0 and (ny[0] & ~nx[1]) == 0
            if direct != via_neg:
                return count, (
                    "x=%s y=%s direct=%s negated=%s"
                    % (fmt(x), fmt(y), _tf(direct), _tf(via_neg))
                ), None
    return count, None, None


def _law_c3_6(space, pairs, max_weight):
    """Simultaneously verifiable and falsifiable == equal conditions."""
    fmt = _formatter(space)
    count = 0
    for x in pairs:
        q1, c1 = x
        for y in pairs:
            q2, c2 = y
            count += 1
            simver = (q1 & ~c2) == 0 and (q2 & ~c1) == 0
            simfals = ((c1 & ~q1) & ~c2) == 0 and ((c2 & ~q2) & ~c1) == 0
            if (simver and simfals) != (c1 == c2):
                return count, (
                    "x=%s y=%s simver=%s simfals=%s"
                    % (fmt(x), fmt(y), _tf(simver), _tf(simfals))
                ), None
    return count, None, None


def _law_t3_7(space, pairs, max_weight):
    """The subalgebra generated by x and y is Boolean exactly when their
    conditions are equal and nonempty."""
    fmt = _formatter(space)
    count = 0
    for x in pairs:
        q1, c1 = x
        for y in pairs:
            q2, c2 = y
            count += 1
            sub = rel.generated_subalgebra(
                cnd.Conditional(space, q1, c1), cnd.Conditional(space, q2, c2)
            )
            if sub.is_boolean != (c1 == c2 != 0):
                return count, (
                    "x=%s y=%s is_boolean=%s same_nonempty_condition=%s"
                    % (fmt(x), fmt(y), _tf(sub.is_boolean), _tf(c1 == c2 != 0))
                ), None
    return count, None, None


def _law_c3_8(space, pairs, max_weight):
    """Jointly verifiable and falsifiable == equal conditions; with a
    nonempty shared condition that is exactly membership in a common
    Boolean subalgebra."""
    fmt = _formatter(space)
    count = 0
    for x in pairs:
        q1, c1 = x
        for y in pairs:
            q2, c2 = y
            count += 1
            simver = (q1 & ~c2) == 0 and (q2 & ~c1) == 0
            simfals = ((c1 & ~q1) & ~c2) == 0 and ((c2 & ~q2) & ~c1) == 0
            if (simver and simfals) != (c1 == c2):
                return count, (
                    "x=%s y=%s simver=%s simfals=%s"
                    % (fmt(x), fmt(y), _tf(simver), _tf(simfals))
                ), None
            if c1 == c2 != 0:
                sub = rel.generated_subalgebra(
                    cnd.Conditional(space, q1, c1), cnd.Conditional(space, q2, c2)
                )
                if not sub.is_boolean:
                    return count, (
                        "x=%s y=%s share a nonempty condition but generate a "
                        "non-Boolean subalgebra" % (fmt(x), fmt(y))
                    ), None
    return count, None, None


def _law_t3_9(space, pairs, max_weight):
    """and_(x, z) == (0 | b v f) and or_(x, z) == (1 | b v f) together
    happen exactly when b == f and z == not x."""
    or_b, and_b, not_b = cnd.or_bits, cnd.and_bits, cnd.not_bits
    fmt = _formatter(space)
    count = 0
    for x in pairs:
        q1, c1 = x
        neg = not_b(q1, c1)
        for z in pairs:
            q3, c3 = z
            count += 1
            union = c1 | c3
            left = and_b(q1, c1, q3, c3) == (0, union) and or_b(q1, c1, q3, c3) == (union, union)
            right = c1 == c3 and z == neg
            if left != right:
                return count, (
                    "x=%s z=%s complement_pair=%s right=%s"
                    % (fmt(x), fmt(z), _tf(left), _tf(right))
                ), None
    return count, None, None


def _law_t3_11(space, pairs, max_weight):
    """osum is commutative with (0|b) as same-condition neutral,
    osum(x, x) == (0|b), and not x as the unique z with
    osum(x, z) == (1|b). Associativity of the total operation is not a
    law; its status is reported in the note."""
    osum_b, not_b = cnd.osum_bits, cnd.not_bits
    fmt = _formatter(space)
    count = 0
    for x in pairs:
        q1, c1 = x
        count += 1
        if osum_b(q1, c1, 0, c1) != x:
            return count, "osum(x, (0|b)) != x at x=%s" % fmt(x), None
        if osum_b(q1, c1, q1, c1) != (0, c1):
            return count, "osum(x, x) != (0|b) at x=%s" % fmt(x), None
        if osum_b(q1, c1, *not_b(q1, c1)) != (c1, c1):
            return count, "osum(x, not x) != (1|b) at x=%s" % fmt(x), None
    for x in pairs:
        q1, c1 = x
        neg = not_b(q1, c1)
        for z in pairs:
            q2, c2 = z
            count += 1
            if osum_b(q1, c1, q2, c2) != osum_b(q2, c2, q1, c1):
                return count, "osum not commutative at x=%s z=%s" % (fmt(x), fmt(z)), None
            if osum_b(q1, c1, q2, c2) == (c1, c1) and z != neg:
                return count, (
                    "complement not unique: osum(x, z) == (1|b) at x=%s z=%s"
                    % (fmt(x), fmt(z))
                ), None
    note = "osum associativity holds over this space"
    done = False
    for x in pairs:
        for y in pairs:
            for z in pairs:
                count += 1
                left = osum_b(*osum_b(*x, *y), *z)
                right = osum_b(*x, *osum_b(*y, *z))
                if left != right:
                    note = (
                        "informative: the total osum is not associative, e.g. "
                        "x=%s y=%s z=%s" % (fmt(x), fmt(y), fmt(z))
                    )
                    done = True
                    break
            if done:
                break
        if done:
            break
    return count, None, note


def _law_t3_15(space, pairs, max_weight):
    """sasaki(b, a): fixes a iff cond(b) <= cond(a) and the falsity
    region of b lies inside that of a; annihilates to (0 | a2 v b2) iff
    the consequent of a lies in the falsity region of b; is idempotent
    in its second argument; composes via and_ of the projectors; and
    two projections onto the same target commute."""
    and_b, sas_b = cnd.and_bits, cnd.sasaki_bits
    fmt = _formatter(space)
    count = 0
    for b in pairs:
        qb, cb = b
        for a in pairs:
            qa, ca = a
            count += 1
            proj = sas_b(qb, cb, qa, ca)
            fixes = proj == a
            fix_side = (cb & ~ca) == 0 and ((cb & ~qb) & ~(ca & ~qa)) == 0
            if fixes != fix_side:
                return count, (
                    "fixed-point criterion fails at b=%s a=%s" % (fmt(b), fmt(a))
                ), None
            kills = proj == (0, ca | cb)
            kill_side = (qa & ~(cb & ~qb)) == 0
            if kills != kill_side:
                return count, (
                    "annihilation criterion fails at b=%s a=%s" % (fmt(b), fmt(a))
                ), None
            if sas_b(qb, cb, *proj) != proj:
                return count, (
                    "projection not idempotent at b=%s a=%s" % (fmt(b), fmt(a))
                ), None
    for b in pairs:
        qb, cb = b
        for c in pairs:
            qc, cc = c
            meet = and_b(qb, cb, qc, cc)
            for a in pairs:
                qa, ca = a
                count += 1
                nested = sas_b(qc, cc, *sas_b(qb, cb, qa, ca))
                if nested != sas_b(*meet, qa, ca):
                    return count, (
                        "composition via and_ fails at b=%s c=%s a=%s"
                        % (fmt(b), fmt(c), fmt(a))
                    ), None
                if nested != sas_b(qb, cb, *sas_b(qc, cc, qa, ca)):
                    return count, (
                        "projections do not commute at b=%s c=%s a=%s"
                        % (fmt(b), fmt(c), fmt(a))
                    ), None
    return count, None, None


def _law_c3_16(space, pairs, max_weight):
    """sasaki(b, a) == a exactly when and_(a, b) == a; it annihilates
    exactly when tr(a, not b); and sasaki(c, c) == c."""
    conds = [cnd.Conditional(space, q, c) for q, c in pairs]
    count = 0
    for c in conds:
        count += 1
        if cnd.sasaki(c, c) != c:
            return count, "sasaki(c, c) != c at c=%s" % format_conditional(c), None
    for b in conds:
        nb = cnd.negate(b)
        for a in conds:
            count += 1
            proj = cnd.sasaki(b, a)
            if (proj == a) != rel.holds("wedge", a, b):
                return count, (
                    "fixed point does not match the wedge order at b=%s a=%s"
                    % (format_conditional(b), format_conditional(a))
                ), None
            zero = cnd.Conditional(space, 0, a.c | b.c)
            if (proj == zero) != rel.holds("tr", a, nb):
                return count, (
                    "annihilation does not match tr(a, not b) at b=%s a=%s"
                    % (format_conditional(b), format_conditional(a))
                ), None
    return count, None, None


def _law_t3_17(space, pairs, max_weight):
    """Sasaki projection interplay with or_: absorbing a projection
    through the complement, distribution over or_, the commutation /
    coincidence criteria, the two-sided verifiability criterion, and
    closure of joint verifiability under folded or_ and and_."""
    or_b, and_b, not_b, sas_b = cnd.or_bits, cnd.and_bits, cnd.not_bits, cnd.sasaki_bits
    fmt = _formatter(space)
    count = 0
    for b in pairs:
        qb, cb = b
        nb = not_b(qb, cb)
        for a in pairs:
            qa, ca = a
            count += 1
            if or_b(qb, cb, qa, ca) != or_b(qb, cb, *sas_b(*nb, qa, ca)):
                return count, (
                    "or_(b, a) != or_(b, sasaki(not b, a)) at b=%s a=%s"
                    % (fmt(b), fmt(a))
                ), None
            commutes = sas_b(qb, cb, qa, ca) == sas_b(qa, ca, qb, cb)
            simver = (qb & ~ca) == 0 and (qa & ~cb) == 0
            if commutes != simver:
                return count, (
                    "commutation criterion fails at b=%s a=%s" % (fmt(b), fmt(a))
                ), None
            as_and = sas_b(qb, cb, qa, ca) == and_b(qb, cb, qa, ca)
            if as_and != ((qb & ~ca) == 0):
                return count, (
                    "coincidence-with-and_ criterion fails at b=%s a=%s"
                    % (fmt(b), fmt(a))
                ), None
            pq, pc = sas_b(qb, cb, qa, ca)
            same_cond_below = pc == ca and (pq & ~qa) == 0
            if same_cond_below != ((cb & ~ca) == 0):
                return count, (
                    "bounded-order criterion fails at b=%s a=%s" % (fmt(b), fmt(a))
                ), None
            two_sided = (
                ((qb & ~ca) == 0 and (qa & ~cb) == 0)
                and ((nb[0] & ~ca) == 0 and (qa & ~nb[1]) == 0)
            )
            if two_sided != ((qa & ~cb) == 0 and (cb & ~ca) == 0):
                return count, (
                    "two-sided verifiability criterion fails at b=%s a=%s"
                    % (fmt(b), fmt(a))
                ), None
    for c in pairs:
        qc, cc = c
        for b in pairs:
            qb, cb = b
            proj_b = sas_b(qc, cc, qb, cb)
            for a in pairs:
                qa, ca = a
                count += 1
                lhs = sas_b(qc, cc, *or_b(qb, cb, qa, ca))
                if lhs != or_b(*proj_b, *sas_b(qc, cc, qa, ca)):
                    return count, (
                        "projection does not distribute over or_ at c=%s b=%s a=%s"
                        % (fmt(c), fmt(b), fmt(a))
                    ), None
    family_pairs = pairs
    family_space = space
    if space.n > 3:
        family_space = law_space(3)
        family_pairs = cnd.enumerate_conditionals_bits(family_space.full_bits)
    ffmt = _formatter(family_space)
    for c in family_pairs:
        qc, cc = c
        compatible = [
            a for a in family_pairs
            if (qc & ~a[1]) == 0 and (a[0] & ~cc) == 0
        ]
        for size in (1, 2, 3):
            for family in combinations_with_replacement(compatible, size):
                count += 1
                oq, oc = family[0]
                aq, ac = family[0]
                for q2, c2 in family[1:]:
                    oq, oc = cnd.or_bits(oq, oc, q2, c2)
                    aq, ac = cnd.and_bits(aq, ac, q2, c2)
                or_ok = (qc & ~oc) == 0 and (oq & ~cc) == 0
                and_ok = (qc & ~ac) == 0 and (aq & ~cc) == 0
                if not (or_ok and and_ok):
                    return count, (
                        "joint verifiability not preserved by folding at c=%s "
                        "family=[%s]" % (ffmt(c), " ".join(ffmt(m) for m in family))
                    ), None
    return count, None, None


def _law_schay_lattice(space, pairs, max_weight):
    """Both alternative operation pairs form distributive lattices:
    cap_s with cup_s, and and_s with vee_s. Idempotence, commutativity,
    associativity, the two absorption laws and both distributivities
    are swept for each pair."""
    fmt = _formatter(space)
    systems = (
        ("cap_s/cup_s", schay.cap_bits, schay.cup_bits),
        ("and_s/vee_s", schay.sand_bits, schay.vee_bits),
    )
    count = 0
    for name, meet, join in systems:
        for x in pairs:
            count += 1
            if meet(*x, *x) != x or join(*x, *x) != x:
                return count, "%s: idempotence fails at x=%s" % (name, fmt(x)), None
        for x in pairs:
            for y in pairs:
                count += 1
                if meet(*x, *y) != meet(*y, *x):
                    return count, "%s: meet not commutative at x=%s y=%s" % (name, fmt(x), fmt(y)), None
                if join(*x, *y) != join(*y, *x):
                    return count, "%s: join not commutative at x=%s y=%s" % (name, fmt(x), fmt(y)), None
                if meet(*x, *join(*x, *y)) != x:
                    return count, "%s: absorption meet-join fails at x=%s y=%s" % (name, fmt(x), fmt(y)), None
                if join(*x, *meet(*x, *y)) != x:
                    return count, "%s: absorption join-meet fails at x=%s y=%s" % (name, fmt(x), fmt(y)), None
        for x in pairs:
            for y in pairs:
                for z in pairs:
                    count += 1
                    if meet(*meet(*x, *y), *z) != meet(*x, *meet(*y, *z)):
                        return count, (
                            "%s: meet not associative at x=%s y=%s z=%s"
                            % (name, fmt(x), fmt(y), fmt(z))
                        ), None
                    if join(*join(*x, *y), *z) != join(*x, *join(*y, *z)):
                        return count, (
                            "%s: join not associative at x=%s y=%s z=%s"
                            % (name, fmt(x), fmt(y), fmt(z))
                        ), None
                    if meet(*x, *join(*y, *z)) != join(*meet(*x, *y), *meet(*x, *z)):
                        return count, (
                            "%s: meet does not distribute at x=%s y=%s z=%s"
                            % (name, fmt(x), fmt(y), fmt(z))
                        ), None
                    if join(*x, *meet(*y, *z)) != meet(*join(*x, *y), *join(*x, *z)):
                        return count, (
                            "%s: join does not distribute at x=%s y=%s z=%s"
                            % (name, fmt(x), fmt(y), fmt(z))
                        ), None
    return count, None, None


def _law_schay_coincide(space, pairs, max_weight):
    """cup_s is or_, and_s is and_, and the four-term expanded form of
    the consequent of cup_s reduces to the same operation."""
    fmt = _formatter(space)
    count = 0
    for x in pairs:
        q1, c1 = x
        for y in pairs:
            q2, c2 = y
            count += 1
            if schay.cup_bits(q1, c1, q2, c2) != cnd.or_bits(q1, c1, q2, c2):
                return count, "cup_s != or_ at x=%s y=%s" % (fmt(x), fmt(y)), None
            if schay.sand_bits(q1, c1, q2, c2) != cnd.and_bits(q1, c1, q2, c2):
                return count, "and_s != and_ at x=%s y=%s" % (fmt(x), fmt(y)), None
            long_cons = (q1 & c2) | (q2 & c1) | (q1 & ~c2) | (~c1 & q2)
            long_form = (long_cons & (c1 | c2), c1 | c2)
            if long_form != schay.cup_bits(q1, c1, q2, c2):
                return count, (
                    "expanded union form differs from cup_s at x=%s y=%s"
                    % (fmt(x), fmt(y))
                ), None
    return count, None, None


def _law_schay_2_12(space, pairs, max_weight):
    """For disjoint events a and b, conditioning (b | a v b) on the
    complement of b collapses to the impossible conditional (0 | a)."""
    count = 0
    events = [Event(space, bits) for bits in range(space.full_bits + 1)]
    for ea in events:
        for eb in events:
            if ea.bits & eb.bits:
                continue
            count += 1
            got = schay.schay_iteration_example(ea, eb)
            want = cnd.make(Event(space, 0), ea)
            if got != want:
                return count, (
                    "iteration example fails at a=%s b=%s: got %s want %s"
                    % (ea, eb, format_conditional(got), format_conditional(want))
                ), None
    return count, None, None


# ------------------------------------------------------------- catalog


_CATALOG = (
    ("t2.4", 4, _law_t2_4),
    ("c2.5", 4, _law_c2_5),
    ("t2.6", 4, _law_t2_6),
    ("c2.7", 4, _law_c2_7),
    ("c2.8", 4, _law_c2_8),
    ("c2.9", 4, _law_c2_9),
    ("props2.3", 4, _law_props2_3),
    ("t2.13", 3, _law_t2_13),
    ("t2.18", 3, _law_t2_18),
    ("t2.19", 3, _law_t2_19),
    ("p2.20", 4, _law_p2_20),
    ("truth-tables", 4, _law_truth_tables),
    ("superposition", 3, _law_superposition),
    ("t3.2", 3, _law_t3_2),
    ("c3.3", 4, _law_c3_3),
    ("c3.5", 4, _law_c3_5),
    ("c3.6", 4, _law_c3_6),
    ("t3.7", 3, _law_t3_7),
    ("c3.8", 3, _law_c3_8),
    ("t3.9", 4, _law_t3_9),
    ("t3.11", 4, _law_t3_11),
    ("t3.15", 4, _law_t3_15),
    ("c3.16", 4, _law_c3_16),
    ("t3.17", 4, _law_t3_17),
    ("schay-lattice", 3, _law_schay_lattice),
    ("schay-coincide", 4, _law_schay_coincide),
    ("schay-2.12", 4, _law_schay_2_12),
)

_BY_ID = {law: (budget, fn) for law, budget, fn in _CATALOG}

LAW_IDS = tuple(law for law, _, _ in _CATALOG)


def law_budget(law):
    """Largest atom count a law accepts."""
    if law not in _BY_ID:
        raise UnknownLaw("unknown law id: %r" % (law,))
    return _BY_ID[law][0]


def check(law, atoms, max_weight=3):
    """Exhaustively check one law over `atoms` atoms.

    Raises UnknownLaw for ids outside the catalog ("all" is a
    check_all spelling, not a single law) and TooLarge when `atoms`
    exceeds the law's budget.
    """
    if law not in _BY_ID:
        if law == "all":
            raise UnknownLaw("'all' is the whole catalog; use check_all")
        raise UnknownLaw("unknown law id: %r" % (law,))
    budget, fn = _BY_ID[law]
    if atoms < 1:
        raise ValueError("atoms must be at least 1")
    if atoms > budget:
        raise TooLarge("law %s runs on at most %d atoms, got %d" % (law, budget, atoms))
    space = law_space(atoms)
    pairs = cnd.enumerate_conditionals_bits(space.full_bits)
    instances, counterexample, note = fn(space, pairs, max_weight)
    return LawReport(
        law=law,
        atom_count=atoms,
        instances_checked=instances,
        passed=counterexample is None,
        counterexample=counterexample,
        note=note,
    )


def check_all(atoms, max_weight=3):
    """Check the whole catalog, clamping each law to its own budget."""
    if atoms < 1:
        raise ValueError("atoms must be at least 1")
    return [
        check(law, min(atoms, budget), max_weight)
        for law, budget, _ in _CATALOG
    ]
