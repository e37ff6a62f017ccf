"""Boolean fractions: an exact algebra of conditional events.

A conditional event (a|b) pairs a consequent with a condition from a
finite Boolean algebra of events. The package provides the normal form
and the operations on conditionals (or_, and_, given, negate, osum,
sasaki, plus the alternative cap_s/cup_s/and_s/vee_s pair), three-valued
pointwise evaluation, exact rational conditional probability, the
verifiability relations between conditionals, a small expression
language with a line-oriented space-file format, and an exhaustive
checker that verifies the algebra's laws over small spaces.
"""

from .conditional import (
    Conditional,
    and_,
    enumerate_conditionals_bits,
    given,
    make,
    negate,
    or_,
    osum,
    sasaki,
    undefined,
)
from .errors import (
    BadWeight,
    DuplicateName,
    Error,
    NotAPartition,
    NotDisjoint,
    ParseError,
    SpaceMismatch,
    TooLarge,
    UnknownAtom,
    UnknownLaw,
    UnknownName,
    ZeroCondition,
    ZeroTotalWeight,
)
from .lang import (
    SpaceDoc,
    dump,
    format_conditional,
    lower,
    lower_event,
    parse_expr,
    parse_space,
)
from .lawcheck import (
    LAW_IDS,
    LawReport,
    check,
    check_all,
    enumerate_conditionals,
    law_space,
)
from .prob import (
    AdditiveReport,
    Measure,
    additive_law_check,
    p_cond,
    p_event,
    p_or_formula,
    p_superposition,
    partition_expansion,
)
from .relations import (
    RELATION_TAGS,
    Subalgebra,
    VerifiabilityProfile,
    compatible,
    decomposition_witness,
    generated_subalgebra,
    holds,
    in_common_subalgebra,
    ortho_family_member,
    orthogonal,
    profile,
    sim_falsifiable,
    sim_verifiable,
)
from .schay import and_s, cap_s, cup_s, schay_iteration_example, vee_s
from .space import Event, SampleSpace, enumerate_events, same_space
from .trivalent import F, T, TruthValue, U, eval_at
