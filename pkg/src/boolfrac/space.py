"""Finite sample spaces and their events.

A sample space is an ordered tuple of named atoms (at most 64). An event
is a subset of those atoms, stored as a bitmask: atom ``i`` in declaration
order corresponds to bit ``1 << i``. Meet, join, complement and the
subset order are plain bit arithmetic, so events over the same space form
a Boolean algebra.
"""

from .errors import SpaceMismatch, TooLarge, UnknownAtom

# Characters that can never appear in an atom name. Everything else that
# is printable and non-whitespace is allowed, including digits.
RESERVED_CHARS = frozenset("{},|()~#=")

MAX_ATOMS = 64
MAX_ENUMERATION_ATOMS = 16


def valid_atom_name(name):
    if not name:
        return False
    return all(ch not in RESERVED_CHARS and not ch.isspace() for ch in name)


class SampleSpace:
    """An ordered collection of distinct atom names."""

    __slots__ = ("atoms", "_index", "full_bits")

    def __init__(self, atoms):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("a sample space needs at least one atom")
        if len(atoms) > MAX_ATOMS:
            raise TooLarge("at most %d atoms are supported, got %d" % (MAX_ATOMS, len(atoms)))
        index = {}
        for i, name in enumerate(atoms):
            if not valid_atom_name(name):
                raise ValueError("invalid atom name: %r" % (name,))
            if name in index:
                raise ValueError("duplicate atom name: %r" % (name,))
            index[name] = i
        self.atoms = atoms
        self._index = index
        self.full_bits = (1 << len(atoms)) - 1

    @property
    def n(self):
        return len(self.atoms)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownAtom("unknown atom: %r" % (name,)) from None

    def event(self, names=()):
        """The event containing exactly the given atoms."""
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return Event(self, bits)

    def event_from_bits(self, bits):
        return Event(self, bits)

    def atom(self, name):
        return Event(self, 1 << self.index(name))

    @property
    def empty(self):
        return Event(self, 0)

    @property
    def full(self):
        return Event(self, self.full_bits)

    def __eq__(self, other):
        return isinstance(other, SampleSpace) and self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        return "SampleSpace(%r)" % (list(self.atoms),)


def same_space(x, y):
    """Return the common space of two carriers, or raise SpaceMismatch."""
    if x.space != y.space:
        raise SpaceMismatch("operands belong to different sample spaces")
    return x.space


class Event:
    """A subset of a sample space's atoms, stored as a bitmask."""

    __slots__ = ("space", "bits")

    def __init__(self, space, bits):
        if not 0 <= bits <= space.full_bits:
            raise ValueError("event bits 0x%x out of range for %d atoms" % (bits, space.n))
        self.space = space
        self.bits = bits

    def members(self):
        """Atom names of this event, in declaration order."""
        return tuple(name for i, name in enumerate(self.space.atoms) if self.bits >> i & 1)

    def meet(self, other):
        return Event(same_space(self, other), self.bits & other.bits)

    def join(self, other):
        return Event(same_space(self, other), self.bits | other.bits)

    def complement(self):
        return Event(self.space, self.space.full_bits & ~self.bits)

    def leq(self, other):
        """Subset order."""
        same_space(self, other)
        return self.bits & ~other.bits == 0

    def __and__(self, other):
        return self.meet(other)

    def __or__(self, other):
        return self.join(other)

    def __invert__(self):
        return self.complement()

    def __le__(self, other):
        return self.leq(other)

    def __contains__(self, name):
        return self.bits >> self.space.index(name) & 1 == 1

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        return isinstance(other, Event) and self.space == other.space and self.bits == other.bits

    def __hash__(self):
        return hash((self.space, self.bits))

    def __str__(self):
        return "{%s}" % ",".join(self.members())

    def __repr__(self):
        return "Event(%s)" % (self,)


def enumerate_events(space):
    """All events of the space in ascending bitmask order.

    Guarded because the output has 2**n entries.
    """
    if space.n > MAX_ENUMERATION_ATOMS:
        raise TooLarge("refusing to enumerate events over %d atoms" % space.n)
    return [Event(space, bits) for bits in range(space.full_bits + 1)]
