"""Expression language shared by every algebra in the package.

Grammar (``*`` never commutes anything; evaluation is left to right)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | 'E' '(' intlist ')' | '(' expr ')'

Atoms depend on the evaluation context: ``x1 d1 X1 t1`` in a Weyl algebra
(``X1`` is ``x1^-1``), ``Xp1 Xm1`` plus base variables in a GWA, base
variables and ``E(v)`` in a skew ring, and scalar parameters and ``zeta``
everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "ExprError", "LexError", "ParseError", "EvalError", "Expr", "tokenize", "parse",
    "evaluate", "to_text", "MAX_EXPONENT", "MAX_COMPOUND_EXPONENT",
]

MAX_EXPONENT = 32
# compound bases blow up quickly under powers; keep fuzzed input cheap
MAX_COMPOUND_EXPONENT = 8


class ExprError(ValueError):
    """Base class for expression errors; ``position`` is a 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class LexError(ExprError):
    pass


class ParseError(ExprError):
    pass


class EvalError(ExprError):
    pass


# ---------------------------------------------------------------------------
# lexer

_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, END
    text: str
    pos: int


def tokenize(text):
    out = []
    pos, n = 0, len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        ch = text[pos]
        if ch in "+-*/^(),":
            out.append(Token("OP", ch, pos))
            pos += 1
            continue
        m = _INT.match(text, pos)
        kind = "INT"
        if m is None:
            m = _NAME.match(text, pos)
            kind = "NAME"
        if m is None:
            raise LexError(f"unexpected character {ch!r}", pos)
        out.append(Token(kind, m.group(0), pos))
        pos = m.end()
    out.append(Token("END", "", n))
    return out


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Expr:
    pos: int


@dataclass(frozen=True)
class Num(Expr):
    value: int


@dataclass(frozen=True)
class Name(Expr):
    name: str


@dataclass(frozen=True)
class Lattice(Expr):
    vector: tuple


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.tok
        if t.kind != "OP" or t.text != text:
            found = t.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", t.pos)
        return self.next()

    def at(self, text):
        return self.tok.kind == "OP" and self.tok.text == text

    def parse(self):
        if self.tok.kind == "END":
            raise ParseError("empty expression", 0)
        e = self.expr()
        if self.tok.kind != "END":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self):
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.next()
            left = BinOp(op.pos, op.text, left, self.term())
        return left

    def term(self):
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.next()
            left = BinOp(op.pos, op.text, left, self.unary())
        return left

    def unary(self):
        if self.at("-"):
            t = self.next()
            return Neg(t.pos, self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            t = self.next()
            sign = 1
            if self.at("-"):
                self.next()
                sign = -1
            if self.tok.kind != "INT":
                raise ParseError("exponent must be an integer literal", self.tok.pos)
            k = sign * int(self.next().text)
            if abs(k) > MAX_EXPONENT:
                raise ParseError(f"exponent {k} exceeds the limit {MAX_EXPONENT}", t.pos)
            if self.at("^"):
                raise ParseError("chained exponents need parentheses", self.tok.pos)
            return Pow(t.pos, base, k)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "INT":
            self.next()
            return Num(t.pos, int(t.text))
        if t.kind == "NAME":
            self.next()
            if t.text == "E" and self.at("("):
                return Lattice(t.pos, self.intlist())
            return Name(t.pos, t.text)
        if self.at("("):
            self.next()
            e = self.expr()
            self.expect(")")
            return e
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.pos)

    def intlist(self):
        self.expect("(")
        out = []
        while True:
            sign = 1
            if self.at("-"):
                self.next()
                sign = -1
            if self.tok.kind != "INT":
                raise ParseError("lattice entries must be integers", self.tok.pos)
            v = sign * int(self.tok.text)
            if abs(v) > MAX_EXPONENT:
                raise ParseError(f"lattice entry {v} exceeds the limit {MAX_EXPONENT}", self.tok.pos)
            out.append(v)
            self.next()
            if self.at(","):
                self.next()
                continue
            self.expect(")")
            return tuple(out)


def parse(text) -> Expr:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation


class _Env:
    """Maps atoms and integers into a target algebra."""

    def __init__(self, context):
        from .gwa import GwaAlgebra
        from .ratfunc import VariableContext
        from .scalars import ScalarField
        from .skewring import SkewContext
        from .weyl import WeylAlgebra
        self.context = context
        if isinstance(context, WeylAlgebra):
            self.kind, self.field = "weyl", context.field
        elif isinstance(context, GwaAlgebra):
            self.kind, self.field = "gwa", context.field
        elif isinstance(context, SkewContext):
            self.kind, self.field = "skew", context.base.field
        elif isinstance(context, VariableContext):
            self.kind, self.field = "ratfunc", context.field
        elif isinstance(context, ScalarField):
            self.kind, self.field = "scalar", context
        else:
            raise TypeError(f"cannot evaluate expressions in {context!r}")

    def lift(self, s):
        """Scalar -> element of the target."""
        c = self.context
        if self.kind == "scalar":
            return s
        if self.kind in ("weyl", "gwa"):
            return c(s)
        if self.kind == "skew":
            return c.coeff(c.base(s))
        return c(s)

    def number(self, k):
        return self.lift(self.field(k))

    def name(self, name, pos):
        F = self.field
        if name in F.parameters:
            return self.lift(F.param(name))
        if name == "zeta":
            if F.cyclotomic_order == 1:
                raise EvalError("zeta needs a cyclotomic field", pos)
            return self.lift(F.zeta(1))
        c = self.context
        if self.kind == "weyl":
            m = re.fullmatch(r"([xdXt])(\d+)", name)
            if m:
                i = int(m.group(2))
                if not 1 <= i <= c.n:
                    raise EvalError(f"generator index {i} out of range 1..{c.n}", pos)
                kind = m.group(1)
                if kind == "X":
                    if not c.localized:
                        raise EvalError("negative exponent requires localized algebra", pos)
                    return c.xinv(i)
                return {"x": c.x, "d": c.d, "t": c.t}[kind](i)
        elif self.kind == "gwa":
            m = re.fullmatch(r"X([pm])(\d+)", name)
            if m:
                i = int(m.group(2))
                if not 1 <= i <= c.n:
                    raise EvalError(f"generator index {i} out of range 1..{c.n}", pos)
                return c.Xp(i) if m.group(1) == "p" else c.Xm(i)
            if name in c.base.names:
                return c.var(name)
        elif self.kind == "skew":
            if name in c.base.names:
                return c.coeff(c.base.var(name))
        elif self.kind == "ratfunc":
            if name in c.names:
                return c.var(name)
        raise EvalError(f"unknown atom {name!r}", pos)

    def lattice(self, v, pos):
        if self.kind != "skew":
            raise EvalError("E(...) is only available in a skew ring", pos)
        if len(v) != self.context.rank:
            raise EvalError(f"lattice vector must have {self.context.rank} entries", pos)
        return self.context.e(v)


def _terms(x):
    t = getattr(x, "terms", None)
    if t is not None:
        return len(t)
    num = getattr(x, "num", None)
    if num is not None:
        return len(num) + len(getattr(x, "den", {})) - 1
    return 1


def _eval(node, env):
    if isinstance(node, Num):
        return env.number(node.value)
    if isinstance(node, Name):
        return env.name(node.name, node.pos)
    if isinstance(node, Lattice):
        return env.lattice(node.vector, node.pos)
    if isinstance(node, Neg):
        return -_eval(node.arg, env)
    if isinstance(node, Pow):
        base = _eval(node.base, env)
        k = node.exponent
        if abs(k) > MAX_COMPOUND_EXPONENT and _terms(base) > 1:
            raise EvalError(f"exponent {k} too large for a compound base "
                            f"(limit {MAX_COMPOUND_EXPONENT})", node.pos)
        try:
            return base ** k
        except ZeroDivisionError:
            raise EvalError("division by zero", node.pos) from None
        except (ValueError, ArithmeticError) as exc:
            raise EvalError(str(exc), node.pos) from None
    if isinstance(node, BinOp):
        a = _eval(node.left, env)
        b = _eval(node.right, env)
        try:
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            return a * b.inverse()
        except ZeroDivisionError:
            raise EvalError("division by zero", node.pos) from None
        except (ValueError, ArithmeticError) as exc:
            raise EvalError(str(exc), node.pos) from None
    raise TypeError(f"unknown node {node!r}")


def evaluate(text, context):
    """Parse (if needed) and evaluate in ``context``.

    ``context`` is a :class:`~galoisweyl.weyl.WeylAlgebra`,
    :class:`~galoisweyl.gwa.GwaAlgebra`, :class:`~galoisweyl.skewring.SkewContext`,
    :class:`~galoisweyl.ratfunc.VariableContext` or
    :class:`~galoisweyl.scalars.ScalarField`.
    """
    node = parse(text) if isinstance(text, str) else text
    return _eval(node, _Env(context))


def to_text(element):
    """Canonical text; ``evaluate(to_text(e), ctx) == e``."""
    return str(element)
