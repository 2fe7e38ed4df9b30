"""Small expression language for eta-functions.

Grammar (LL(1), whitespace insensitive):

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := number | "i" | eta | ident | func "(" expr ")"
            | ident "(" args ")" | "(" expr ")" | "-" factor
    eta    := "e" digit+
    func   := "cos" | "sin" | "exp" | "dual" | "conj" | "normalize"
    number := decimal or rational "p/q"
    args   := signed_number ("," signed_number)*

Unknown identifiers resolve against the state registry; identifiers with
an argument list resolve against the parametric registry.  Errors carry a
1-based column and a stable error code.
"""
from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra, states
from .algebra import EtaFunction, apply_series, conjugate, hodge_dual, normalize
from .scalars import BackendError, QQi

FUNCTIONS = ("cos", "sin", "exp", "dual", "conj", "normalize")

#: stable error codes
E_SYNTAX = "syntax"
E_ETA_RANGE = "eta-range"
E_UNKNOWN_IDENT = "unknown-identifier"
E_ARITY = "arity"


class ParseError(ValueError):
    """Syntax or resolution error with a 1-based source column."""

    def __init__(self, message: str, column: int, code: str = E_SYNTAX):
        super().__init__(f"column {column}: {message}")
        self.column = column
        self.code = code


# -- AST -----------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction
    is_float: bool = False
    float_value: float = 0.0


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Eta:
    index: int
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Func:
    name: str
    arg: object
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Unary:
    op: str
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


_TOKEN_RE = _re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>\d+/\d+|\d+\.\d*|\.\d+|\d+)
  | (?P<ident>[A-Za-z_]\w*)
  | (?P<op>[-+*(),])
""", _re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1, E_SYNTAX)
        pos = m.end()
        kind = m.lastgroup
        if kind == "ws":
            continue
        out.append(Token(kind, m.group(), m.start() + 1))
    out.append(Token("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = n

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text:
            shown = tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {shown!r}", tok.column, E_SYNTAX)
        return self.advance()

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.column, E_SYNTAX)
        return node

    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek().text == "*":
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        tok = self.peek()
        if tok.text == "-":
            self.advance()
            return Unary("-", self.factor())
        if tok.text == "+":
            self.advance()
            return self.factor()
        if tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "number":
            self.advance()
            return _number_node(tok.text)
        if tok.kind == "ident":
            return self.identifier()
        shown = tok.text or "end of input"
        raise ParseError(f"unexpected {shown!r}", tok.column, E_SYNTAX)

    def identifier(self):
        tok = self.advance()
        name = tok.text
        if name == "i":
            return Imag()
        m = _re.fullmatch(r"e(\d+)", name)
        if m:
            index = int(m.group(1))
            if not 1 <= index <= self.n:
                raise ParseError(
                    f"eta index exceeds qubit count ({name}, n={self.n})",
                    tok.column, E_ETA_RANGE)
            return Eta(index, tok.column)
        if name in FUNCTIONS:
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Func(name, arg, tok.column)
        if name in states.PARAMETRIC:
            arity, _ = states.PARAMETRIC[name]
            self.expect("(")
            args = [self.signed_number()]
            while self.peek().text == ",":
                self.advance()
                args.append(self.signed_number())
            self.expect(")")
            if len(args) != arity:
                raise ParseError(
                    f"{name} takes {arity} argument(s), got {len(args)}",
                    tok.column, E_ARITY)
            return Call(name, tuple(args), tok.column)
        if name in states.REGISTRY:
            return Ident(name)
        raise ParseError(f"unknown identifier {name!r}", tok.column, E_UNKNOWN_IDENT)

    def signed_number(self):
        sign = 1
        while self.peek().text in ("+", "-"):
            if self.advance().text == "-":
                sign = -sign
        tok = self.peek()
        if tok.kind != "number":
            shown = tok.text or "end of input"
            raise ParseError(f"expected a numeric argument, found {shown!r}",
                             tok.column, E_SYNTAX)
        self.advance()
        node = _number_node(tok.text)
        if sign < 0:
            return Num(-node.value, node.is_float, -node.float_value)
        return node


def _number_node(text: str) -> Num:
    if "." in text:
        return Num(Fraction(0), True, float(text))
    return Num(Fraction(text), False)


def parse(text: str, n: int) -> object:
    """Parse an expression over n variables into an AST."""
    if not text or not text.strip():
        raise ParseError("empty expression", 1, E_SYNTAX)
    if not 1 <= n <= algebra.MAX_VARIABLES:
        raise ValueError(f"qubit count must be 1..{algebra.MAX_VARIABLES}")
    return _Parser(text, n).parse()


# -- printing (round-trips through parse) ----------------------------------

def unparse(node) -> str:
    if isinstance(node, Num):
        if node.is_float:
            return repr(node.float_value)
        q = node.value
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if isinstance(node, Imag):
        return "i"
    if isinstance(node, Eta):
        return f"e{node.index}"
    if isinstance(node, Ident):
        return node.name
    if isinstance(node, Call):
        return f"{node.name}({','.join(unparse(a) for a in node.args)})"
    if isinstance(node, Func):
        return f"{node.name}({unparse(node.arg)})"
    if isinstance(node, Unary):
        return f"(-{unparse(node.arg)})"
    if isinstance(node, BinOp):
        return f"({unparse(node.left)}{node.op}{unparse(node.right)})"
    raise TypeError(f"not an AST node: {node!r}")


# -- evaluation --------------------------------------------------------------

def evaluate(node, n: int, exact: bool = True) -> EtaFunction:
    """Evaluate an AST into an eta-function of n variables."""
    scalarize = (lambda q: QQi(q)) if exact else (lambda q: complex(float(q)))

    def const(value) -> EtaFunction:
        return EtaFunction(n, {0: value})

    def ev(nd) -> EtaFunction:
        if isinstance(nd, Num):
            if nd.is_float:
                if exact:
                    raise ValueError(
                        "decimal literals are not exact; write p/q rationals in exact mode")
                return const(complex(nd.float_value))
            return const(scalarize(nd.value))
        if isinstance(nd, Imag):
            return const(QQi(0, 1) if exact else 1j)
        if isinstance(nd, Eta):
            base = algebra.variable(n, nd.index)
            return base if exact else base.to_float()
        if isinstance(nd, Ident):
            return _state_fn(states.lookup(nd.name), exact, n)
        if isinstance(nd, Call):
            _, ctor = states.PARAMETRIC[nd.name]
            args = [a.float_value if a.is_float else a.value for a in nd.args]
            return _state_fn(ctor(*args), exact, n)
        if isinstance(nd, Func):
            inner = ev(nd.arg)
            try:
                if nd.name in ("cos", "sin", "exp"):
                    return apply_series(inner, nd.name)
                if nd.name == "dual":
                    return hodge_dual(inner)
                if nd.name == "conj":
                    return conjugate(inner)
                if nd.name == "normalize":
                    return normalize(inner)
            except BackendError as exc:
                raise type(exc)(f"column {nd.column}: {exc}") from None
            raise AssertionError(nd.name)
        if isinstance(nd, Unary):
            return -ev(nd.arg)
        if isinstance(nd, BinOp):
            left, right = ev(nd.left), ev(nd.right)
            if nd.op == "+":
                return left + right
            if nd.op == "-":
                return left - right
            return algebra.multiply(left, right)
        raise TypeError(f"not an AST node: {nd!r}")

    return ev(node)


def _state_fn(state, exact: bool, n: int) -> EtaFunction:
    fn = state.fn
    if fn.n != n:
        raise ValueError(
            f"state {state.label} has {fn.n} variables but the expression is over {n}")
    if exact and not fn.exact:
        raise ValueError(
            f"state {state.label} is float-backed; evaluate without --exact")
    if not exact and fn.exact:
        # normalized float image so float expressions see unit-norm states
        r = math.sqrt(float(state.norm_sq))
        return algebra.scale(1.0 / r, fn.to_float())
    return fn
