"""Expression and group-definition parsing.

Expressions use ``+ - * / ^`` with the usual precedence (``^`` binds
tightest and takes an integer literal exponent, then unary minus, then
``* /``, then ``+ -``; binary operators associate to the left).

Coordinate names: ``x``, ``u``, ``u1``, ``u2``, ... when p = q = 1; in
general ``x1..xP`` and ``u[a]_(c1,...,cP)`` (``u[a]`` for order zero,
``u_(...)`` when q = 1).
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .algebra import RationalExpr
from .calculus import VectorField
from .jetspace import JetSpace, JetVar
from .presets import LieAlgebraBasis, PRESETS, get_preset


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        where = f" at column {pos + 1}" if pos is not None else ""
        super().__init__(f"{message}{where}")
        self.message = message


class GroupFileError(ValueError):
    def __init__(self, message: str, line: int, col: int | None = None):
        self.line = line
        self.col = col
        where = f"line {line}" + (f", column {col}" if col is not None else "")
        super().__init__(f"{where}: {message}")


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<ident>u\[\s*\d+\s*\](?:_\(\s*\d+(?:\s*,\s*\d+)*\s*\))?
             |u_\(\s*\d+(?:\s*,\s*\d+)*\s*\)
             |[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)

_INDEXED = re.compile(r"u(?:\[\s*(\d+)\s*\])?(?:_\(([\d\s,]+)\))?$")


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def resolve_name(name: str, space: JetSpace, pos: int | None = None) -> JetVar:
    """The coordinate of ``space`` called ``name``."""
    p, q = space.p, space.q
    var = None
    if name == "x" and p == 1:
        var = space.x(1)
    elif re.fullmatch(r"x\d+", name):
        i = int(name[1:])
        if 1 <= i <= p:
            var = space.x(i)
    elif name == "u" and q == 1:
        var = space.u(1)
    elif re.fullmatch(r"u\d+", name) and p == 1 and q == 1:
        var = space.u(1, (int(name[1:]),))
    else:
        m = _INDEXED.match(name.replace(" ", ""))
        if m and (m.group(1) or m.group(2)):
            alpha = int(m.group(1)) if m.group(1) else 1
            if m.group(1) is None and q != 1:
                raise ParseError(f"{name!r} needs a component index u[a]", pos)
            counts = tuple(int(c) for c in m.group(2).split(",")) if m.group(2) else (0,) * p
            if not 1 <= alpha <= q or len(counts) != p:
                raise ParseError(f"unknown identifier {name!r} for p={p}, q={q}", pos)
            var = space.u(alpha, counts)
    if var is None:
        raise ParseError(f"unknown identifier {name!r}", pos)
    if var.order > space.n:
        raise ParseError(f"{name} has order {var.order}, which exceeds the jet space order {space.n}", pos)
    return var


class _Parser:
    def __init__(self, text: str, space: JetSpace):
        self.tokens = tokenize(text)
        self.k = 0
        self.space = space

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self) -> RationalExpr:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        e = self.sum()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return e

    def sum(self):
        e = self.product()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.product()
            e = e + rhs if op == "+" else e - rhs
        return e

    def product(self):
        e = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                e = e * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                e = e / rhs
        return e

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        e = self.atom()
        while self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, val, pos = self.take()
            if kind != "num" or "." in val:
                raise ParseError("exponent must be an integer literal", pos)
            k = sign * int(val)
            if k < 0 and e.is_zero():
                raise ParseError("negative power of zero", pos)
            e = e ** k
        return e

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return RationalExpr.const(Fraction(val))
        if kind == "ident":
            return RationalExpr.var(resolve_name(val, self.space, pos))
        if val == "(":
            e = self.sum()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expr(text: str, space: JetSpace) -> RationalExpr:
    """Parse ``text`` into an exact expression over the coordinates of ``space``."""
    return _Parser(text, space).parse()


def print_expr(e: RationalExpr) -> str:
    """Inverse of :func:`parse_expr` up to value equality."""
    return str(e)


def parse_group(text: str, name: str = "group") -> LieAlgebraBasis:
    """Parse a group-definition file.

    The first non-blank line holds ``p q``; every further line is one
    generator given as ``xi_1 ; ... ; xi_p ; phi_1 ; ... ; phi_q``.
    ``#`` starts a comment.
    """
    header = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or not all(x.isdigit() for x in parts):
                raise GroupFileError("header must be two integers 'p q'", lineno, 1)
            p, q = int(parts[0]), int(parts[1])
            if p < 1 or q < 1:
                raise GroupFileError("p and q must be at least 1", lineno, 1)
            header = JetSpace(p, q, 0)
            continue
        fields = line.split(";")
        if len(fields) != header.p + header.q:
            raise GroupFileError(
                f"expected {header.p + header.q} ';'-separated components, found {len(fields)}", lineno)
        comps = []
        offset = 0
        for f in fields:
            try:
                comps.append(parse_expr(f, header))
            except ParseError as exc:
                col = offset + (exc.pos or 0) + 1
                raise GroupFileError(exc.message, lineno, col) from None
            offset += len(f) + 1
        gens.append(VectorField(header.p, header.q, comps[:header.p], comps[header.p:]))
    if header is None:
        raise GroupFileError("missing 'p q' header", 1)
    if not gens:
        raise GroupFileError("no generators defined", lineno)
    return LieAlgebraBasis(name, header.p, header.q, gens)


def load_group(source: str) -> LieAlgebraBasis:
    """A preset name or the path of a group-definition file."""
    if source in PRESETS:
        return get_preset(source)
    path = Path(source)
    if not path.exists():
        raise FileNotFoundError(f"{source!r} is neither a preset ({', '.join(PRESETS)}) nor a file")
    return parse_group(path.read_text(), name=path.stem)
