"""A small expression language for conditionals, plus space files.

Expression grammar, loosest binding first (all binary operators are
left-associative):

    expr   := or_ ("|" or_)*          conditioning
    or_    := and_ ("or" and_)*
    and_   := not_ ("and" not_)*
    not_   := "~" not_ | primary
    primary:= NAME | setlit | "(" expr ")" | FUNC "(" expr "," expr ")"
    setlit := "{" [NAME ("," NAME)*] "}"

FUNC is one of osum, proj, s_and, s_or, s_cap, s_cup. The words `and`,
`or` and the function names are reserved: an event with one of those
names cannot be referenced from an expression. A bare NAME refers to a
named event if the space defines one, otherwise to the atom of that
name. Every leaf lowers to the conditional (event | whole space), so
plain Boolean formulas come out with the full space as condition and
`a | b` produces the ordinary conditional event.

Space files are line-oriented UTF-8 with `#` comments:

    space die
    atoms 1 2 3 4 5 6
    event even = {2,4,6}
    event boost = even or {1}     # may use earlier event names
    measure uniform = 1 1 1 1 1 1

Weights are nonnegative integers or fractions `p/q`.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from . import conditional as cnd
from . import schay
from .errors import (
    BadWeight,
    DuplicateName,
    ParseError,
    UnknownAtom,
    UnknownName,
)
from .prob import Measure
from .space import RESERVED_CHARS, SampleSpace, valid_atom_name

FUNC_NAMES = ("osum", "proj", "s_and", "s_or", "s_cap", "s_cup")
RESERVED_WORDS = frozenset(("and", "or") + FUNC_NAMES)

_SPECIALS = {
    "{": "lbrace",
    "}": "rbrace",
    ",": "comma",
    "|": "pipe",
    "(": "lparen",
    ")": "rparen",
    "~": "tilde",
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int

    def describe(self):
        return "end of input" if self.kind == "eof" else "'%s'" % self.text


def tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in _SPECIALS:
            tokens.append(Token(_SPECIALS[ch], ch, line, col))
            i += 1
            col += 1
            continue
        start = i
        start_col = col
        while i < n and not text[i].isspace() and text[i] not in _SPECIALS and text[i] != "#":
            i += 1
            col += 1
        word = text[start:i]
        if word in ("and", "or"):
            kind = word
        elif word in FUNC_NAMES:
            kind = "func"
        else:
            kind = "ident"
        tokens.append(Token(kind, word, line, start_col))
    tokens.append(Token("eof", "", line, col))
    return tokens


# Abstract syntax. Leaves name events; the operators mirror the algebra.

@dataclass(frozen=True)
class EventRef:
    name: str


@dataclass(frozen=True)
class SetLiteral:
    names: tuple


@dataclass(frozen=True)
class Not:
    arg: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Given:
    left: object
    right: object


@dataclass(frozen=True)
class Func:
    tag: str
    left: object
    right: object


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        tok = self.peek()
        raise ParseError(
            "unexpected %s" % tok.describe(), tok.line, tok.col, expected
        )

    def expect(self, kind, what):
        if self.peek().kind != kind:
            self.fail({what})
        return self.advance()

    def expr(self):
        node = self.or_level()
        while self.peek().kind == "pipe":
            self.advance()
            node = Given(node, self.or_level())
        return node

    def or_level(self):
        node = self.and_level()
        while self.peek().kind == "or":
            self.advance()
            node = Or(node, self.and_level())
        return node

    def and_level(self):
        node = self.not_level()
        while self.peek().kind == "and":
            self.advance()
            node = And(node, self.not_level())
        return node

    def not_level(self):
        if self.peek().kind == "tilde":
            self.advance()
            return Not(self.not_level())
        return self.primary()

    def primary(self):
        tok = self.peek()
        if tok.kind == "ident":
            self.advance()
            return EventRef(tok.text)
        if tok.kind == "lbrace":
            return self.set_literal()
        if tok.kind == "lparen":
            self.advance()
            node = self.expr()
            self.expect("rparen", "')'")
            return node
        if tok.kind == "func":
            self.advance()
            self.expect("lparen", "'('")
            left = self.expr()
            self.expect("comma", "','")
            right = self.expr()
            self.expect("rparen", "')'")
            return Func(tok.text, left, right)
        self.fail({"a name", "'{'", "'('", "'~'", "a function name"})

    def set_literal(self):
        self.expect("lbrace", "'{'")
        names = []
        if self.peek().kind != "rbrace":
            names.append(self.expect("ident", "an atom name").text)
            while self.peek().kind == "comma":
                self.advance()
                names.append(self.expect("ident", "an atom name").text)
        self.expect("rbrace", "'}'")
        return SetLiteral(tuple(names))


def parse_expr(text):
    parser = _Parser(tokenize(text))
    node = parser.expr()
    if parser.peek().kind != "eof":
        parser.fail({"end of input", "an operator"})
    return node


def _resolve(name, space, events):
    if name in events:
        return events[name]
    try:
        return space.atom(name)
    except UnknownAtom:
        raise UnknownName("%r names neither an event nor an atom" % (name,)) from None


def lower_event(expr, space, events=None):
    """Lower an expression that must stay at the event level."""
    events = events or {}
    if isinstance(expr, EventRef):
        return _resolve(expr.name, space, events)
    if isinstance(expr, SetLiteral):
        return space.event(expr.names)
    if isinstance(expr, Not):
        return lower_event(expr.arg, space, events).complement()
    if isinstance(expr, And):
        return lower_event(expr.left, space, events) & lower_event(expr.right, space, events)
    if isinstance(expr, Or):
        return lower_event(expr.left, space, events) | lower_event(expr.right, space, events)
    raise ParseError("conditional operators are not allowed here")


_FUNC_OPS = {
    "osum": cnd.osum,
    "proj": cnd.sasaki,
    "s_and": schay.and_s,
    "s_or": schay.vee_s,
    "s_cap": schay.cap_s,
    "s_cup": schay.cup_s,
}


def lower(expr, space, events=None):
    """Lower an expression to a Conditional over the given space."""
    events = events or {}
    if isinstance(expr, (EventRef, SetLiteral)):
        return cnd.make(lower_event(expr, space, events), space.full)
    if isinstance(expr, Not):
        return cnd.negate(lower(expr.arg, space, events))
    if isinstance(expr, And):
        return cnd.and_(lower(expr.left, space, events), lower(expr.right, space, events))
    if isinstance(expr, Or):
        return cnd.or_(lower(expr.left, space, events), lower(expr.right, space, events))
    if isinstance(expr, Given):
        return cnd.given(lower(expr.left, space, events), lower(expr.right, space, events))
    if isinstance(expr, Func):
        op = _FUNC_OPS[expr.tag]
        return op(lower(expr.left, space, events), lower(expr.right, space, events))
    raise TypeError("not an expression node: %r" % (expr,))


def dump(expr):
    """Deterministic s-expression rendering of a parse tree."""
    if isinstance(expr, EventRef):
        return "(ref %s)" % expr.name
    if isinstance(expr, SetLiteral):
        return "(set%s)" % "".join(" " + name for name in expr.names)
    if isinstance(expr, Not):
        return "(not %s)" % dump(expr.arg)
    if isinstance(expr, And):
        return "(and %s %s)" % (dump(expr.left), dump(expr.right))
    if isinstance(expr, Or):
        return "(or %s %s)" % (dump(expr.left), dump(expr.right))
    if isinstance(expr, Given):
        return "(given %s %s)" % (dump(expr.left), dump(expr.right))
    if isinstance(expr, Func):
        return "(%s %s %s)" % (expr.tag, dump(expr.left), dump(expr.right))
    raise TypeError("not an expression node: %r" % (expr,))


def format_conditional(c):
    """Canonical text for a conditional; parses back except for U."""
    if c.is_undefined:
        return "UNDEFINED"
    return str(c)


@dataclass
class SpaceDoc:
    """A parsed space file."""

    name: str
    space: SampleSpace
    events: dict
    measures: dict

    def lower(self, text):
        return lower(parse_expr(text), self.space, self.events)


_WEIGHT_RE = re.compile(r"^([0-9]+)(?:/([0-9]+))?$")


def _parse_weight(text, line_no):
    m = _WEIGHT_RE.match(text)
    if m is None:
        raise BadWeight("line %d: bad weight %r" % (line_no, text))
    num = int(m.group(1))
    if m.group(2) is None:
        return num
    den = int(m.group(2))
    if den == 0:
        raise BadWeight("line %d: zero denominator in %r" % (line_no, text))
    return Fraction(num, den)


def _fragment(line_text, line_no):
    """Parse everything after the '=' of a definition line, keeping the
    original line/column positions in errors."""
    eq = line_text.find("=")
    prefix_cols = eq + 1
    fragment = line_text[eq + 1 :]
    try:
        return parse_expr(fragment)
    except ParseError as e:
        col = (e.col or 1) + (prefix_cols if (e.line or 1) == 1 else 0)
        raise ParseError(e.bare_message, line_no, col, e.expected) from None


def parse_space(text):
    """Parse a space file into a SpaceDoc."""
    name = None
    space = None
    events = {}
    measures = {}
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        cut = raw.find("#")
        line = raw if cut < 0 else raw[:cut]
        tokens = line.split()
        if not tokens:
            continue
        directive = tokens[0]
        if directive == "space":
            if name is not None:
                raise ParseError("duplicate 'space' line", line_no, 1)
            if len(tokens) != 2:
                raise ParseError("usage: space NAME", line_no, 1)
            name = tokens[1]
        elif directive == "atoms":
            if name is None:
                raise ParseError("'space NAME' must come before 'atoms'", line_no, 1)
            if space is not None:
                raise ParseError("duplicate 'atoms' line", line_no, 1)
            atom_names = tokens[1:]
            if not atom_names:
                raise ParseError("'atoms' needs at least one name", line_no, 1)
            seen = set()
            for atom in atom_names:
                if not valid_atom_name(atom):
                    raise ParseError("invalid atom name %r" % (atom,), line_no, 1)
                if atom in seen:
                    raise DuplicateName("line %d: duplicate atom %r" % (line_no, atom))
                seen.add(atom)
            space = SampleSpace(atom_names)
        elif directive in ("event", "measure"):
            if space is None:
                raise ParseError("'atoms' must come before %r" % (directive,), line_no, 1)
            if len(tokens) < 4 or tokens[2] != "=":
                raise ParseError("usage: %s NAME = ..." % directive, line_no, 1)
            entry_name = tokens[1]
            if any(ch in RESERVED_CHARS for ch in entry_name):
                raise ParseError("invalid name %r" % (entry_name,), line_no, 1)
            if entry_name in RESERVED_WORDS:
                raise ParseError(
                    "%r is a reserved word and cannot name an entry" % (entry_name,),
                    line_no,
                    1,
                )
            if directive == "event":
                if entry_name in events:
                    raise DuplicateName("line %d: duplicate event %r" % (line_no, entry_name))
                node = _fragment(line, line_no)
                try:
                    events[entry_name] = lower_event(node, space, events)
                except ParseError as e:
                    if e.line is None:
                        raise ParseError(e.bare_message, line_no, 1) from None
                    raise
            else:
                if entry_name in measures:
                    raise DuplicateName("line %d: duplicate measure %r" % (line_no, entry_name))
                weight_tokens = tokens[3:]
                if len(weight_tokens) != space.n:
                    raise ParseError(
                        "expected %d weights, got %d" % (space.n, len(weight_tokens)),
                        line_no,
                        1,
                    )
                weights = [_parse_weight(t, line_no) for t in weight_tokens]
                measures[entry_name] = Measure(space, weights)
        else:
            raise ParseError("unknown directive %r" % (directive,), line_no, 1)
    if space is None:
        raise ParseError("file never declares atoms", last_line + 1, 1)
    return SpaceDoc(name=name, space=space, events=events, measures=measures)
