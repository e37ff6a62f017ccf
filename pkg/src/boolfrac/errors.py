"""Exception types shared across the package."""


class Error(Exception):
    """Base class for every error this package raises deliberately."""


class SpaceMismatch(Error):
    """Two operands belong to different sample spaces."""


class TooLarge(Error):
    """The sample space exceeds the size limit of the requested operation."""


class ZeroCondition(Error):
    """A conditional probability was requested against weight-zero evidence."""


class UnknownAtom(Error):
    """An atom name does not exist in the sample space."""


class UnknownName(Error):
    """A name in an expression resolves to neither an event nor an atom."""


class NotDisjoint(Error):
    """Two events that must be disjoint overlap."""


class NotAPartition(Error):
    """The given blocks overlap, so they do not partition their union."""


class UnknownLaw(Error):
    """The law identifier is not in the catalog."""


class DuplicateName(Error):
    """A name was declared twice in the same namespace."""


class BadWeight(Error):
    """A measure weight is negative, malformed, or has a zero denominator."""


class ZeroTotalWeight(Error):
    """All weights in a measure are zero."""


class ParseError(Error):
    """Syntax error in an expression or a space file.

    Carries a 1-based ``line`` and ``col`` plus the set of token kinds
    that would have been accepted at that point.
    """

    def __init__(self, message, line=None, col=None, expected=()):
        self.bare_message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(expected))
        text = message
        if line is not None:
            text = "line %d, column %d: %s" % (line, col, message)
        if self.expected:
            text += " (expected %s)" % ", ".join(self.expected)
        super().__init__(text)
