"""Parser and evaluator for hybrid multiset/algebraic signal expressions.

The language mixes ordinary arithmetic with the set-style signal operators,
spelled in ASCII: union ``\\/``, intersection ``/\\``, postfix complement
``~``, and the common product ``<>``. Precedence from loosest to tightest:

    \\/  <  /\\  <  + -  <  * <>  <  unary -  <  postfix ~  <  call/parens

with every binary operator left-associative, so ``a \\/ b /\\ c`` reads as
``a \\/ (b /\\ c)``. The function names sin, cos, abs, and sign are
reserved only in call position; anywhere else they are ordinary variables.

Grammar (EBNF):

    expr    := union ;            union  := inter ( "\\/" inter )* ;
    inter   := addsub ( "/\\" addsub )* ;  addsub := term ( ("+"|"-") term )* ;
    term    := unary ( ("*"|"<>") unary )* ;
    unary   := "-" unary | postfix ;      postfix := atom ( "~" )* ;
    atom    := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")" ;

``parse`` builds an AST, ``evaluate`` runs it elementwise over an
Environment of equally shaped signals, and ``pretty_print`` emits a fully
parenthesized canonical form with the round-trip guarantee
parse(pretty_print(a)) == a.
"""

from __future__ import annotations

import math
import re
import sys
from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np

from . import ops
from .errors import (
    BadParam,
    DepthExceeded,
    ExprSyntaxError,
    ShapeMismatch,
    UnboundVariable,
)
from .signal import Signal

MAX_DEPTH = 256
CALL_NAMES = ("sin", "cos", "abs", "sign")
UNARY_OPS = ("neg", "complement")
BINARY_OPS = ("add", "sub", "mul", "intersect", "union", "cprod")

_BINARY_SYMBOL = {
    "add": "+",
    "sub": "-",
    "mul": "*",
    "intersect": "/\\",
    "union": "\\/",
    "cprod": "<>",
}


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", self.name):
            raise BadParam(f"bad variable name {self.name!r}")


@dataclass(frozen=True)
class Const:
    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        if not math.isfinite(self.value):
            raise BadParam("constant must be finite")


@dataclass(frozen=True)
class Unary:
    op: str
    child: "Expr"

    def __post_init__(self):
        if self.op not in UNARY_OPS:
            raise BadParam(f"bad unary op {self.op!r}")


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"

    def __post_init__(self):
        if self.op not in BINARY_OPS:
            raise BadParam(f"bad binary op {self.op!r}")


@dataclass(frozen=True)
class Call:
    fn: str
    child: "Expr"

    def __post_init__(self):
        if self.fn not in CALL_NAMES:
            raise BadParam(f"bad function {self.fn!r}")


Expr = Union[Var, Const, Unary, Binary, Call]


class Environment:
    """Named signal bindings sharing one length/dt/t0 grid."""

    def __init__(self, bindings: Mapping[str, Signal]):
        items = dict(bindings)
        for name, sig in items.items():
            if not isinstance(sig, Signal):
                raise BadParam(f"binding {name!r} is not a Signal")
        first = next(iter(items.values()), None)
        if first is not None:
            for name, sig in items.items():
                if (len(sig), sig.dt, sig.t0) != (len(first), first.dt, first.t0):
                    raise ShapeMismatch(f"binding {name!r} does not match the others")
        self._bindings = items

    def __contains__(self, name: str) -> bool:
        return name in self._bindings

    def __len__(self) -> int:
        return len(self._bindings)

    def lookup(self, name: str) -> Signal:
        try:
            return self._bindings[name]
        except KeyError:
            raise UnboundVariable(name) from None

    def prototype(self) -> Signal:
        if not self._bindings:
            raise BadParam("environment is empty")
        return next(iter(self._bindings.values()))


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<op>\\/|/\\|<>|[-+*~()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "number":
            tokens.append(("number", m.group(), pos))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group(), pos))
        elif m.lastgroup == "op":
            tokens.append((m.group(), m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self._tokens = _tokenize(text)
        self._pos = 0
        self._depth = 0

    def _peek(self) -> tuple[str, str, int]:
        return self._tokens[self._pos]

    def _advance(self) -> tuple[str, str, int]:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _fail(self, expected: str):
        kind, text, offset = self._peek()
        got = "end of input" if kind == "end" else repr(text)
        raise ExprSyntaxError(f"expected {expected}, got {got}", offset)

    def _enter(self):
        self._depth += 1
        if self._depth > MAX_DEPTH:
            raise DepthExceeded(f"expression nesting exceeds {MAX_DEPTH}")

    def parse(self) -> Expr:
        node = self._union()
        if self._peek()[0] != "end":
            self._fail("end of input")
        return node

    def _union(self) -> Expr:
        self._enter()
        try:
            node = self._inter()
            while self._peek()[0] == "\\/":
                self._advance()
                node = Binary("union", node, self._inter())
            return node
        finally:
            self._depth -= 1

    def _inter(self) -> Expr:
        node = self._addsub()
        while self._peek()[0] == "/\\":
            self._advance()
            node = Binary("intersect", node, self._addsub())
        return node

    def _addsub(self) -> Expr:
        node = self._term()
        while self._peek()[0] in ("+", "-"):
            op = self._advance()[0]
            node = Binary("add" if op == "+" else "sub", node, self._term())
        return node

    def _term(self) -> Expr:
        node = self._unary()
        while self._peek()[0] in ("*", "<>"):
            op = self._advance()[0]
            node = Binary("mul" if op == "*" else "cprod", node, self._unary())
        return node

    def _unary(self) -> Expr:
        if self._peek()[0] == "-":
            self._advance()
            self._enter()
            try:
                return Unary("neg", self._unary())
            finally:
                self._depth -= 1
        return self._postfix()

    def _postfix(self) -> Expr:
        node = self._atom()
        while self._peek()[0] == "~":
            self._advance()
            node = Unary("complement", node)
        return node

    def _atom(self) -> Expr:
        kind, text, offset = self._peek()
        if kind == "number":
            self._advance()
            return Const(float(text))
        if kind == "ident":
            self._advance()
            if self._peek()[0] == "(":
                if text not in CALL_NAMES:
                    raise ExprSyntaxError(
                        f"unknown function {text!r} (expected one of {', '.join(CALL_NAMES)})",
                        offset,
                    )
                self._advance()
                arg = self._union()
                if self._peek()[0] != ")":
                    self._fail("')'")
                self._advance()
                return Call(text, arg)
            return Var(text)
        if kind == "(":
            self._advance()
            node = self._union()
            if self._peek()[0] != ")":
                self._fail("')'")
            self._advance()
            return node
        self._fail("a number, a name, or '('")


def parse(text: str) -> Expr:
    """Parse expression text into an AST.

    Raises ExprSyntaxError (carrying the character offset) on malformed
    input and DepthExceeded past 256 nesting levels.
    """
    # The descent costs a handful of interpreter frames per nesting level,
    # so the documented MAX_DEPTH needs more stack than the usual default.
    # The explicit depth counter, not the interpreter limit, rejects input.
    limit = sys.getrecursionlimit()
    need = 10 * MAX_DEPTH + 512
    if limit < need:
        sys.setrecursionlimit(need)
    try:
        return _Parser(text).parse()
    finally:
        sys.setrecursionlimit(limit)


def _arith(a: Signal, b: Signal, fn) -> Signal:
    return a.with_samples(fn(a.samples, b.samples))


def evaluate(ast: Expr, env: Environment) -> Signal:
    """Evaluate an AST elementwise over the environment's signals.

    Constants broadcast to the environment's common grid, which is also why
    a constant-only expression still needs a nonempty environment.
    """
    if isinstance(ast, Var):
        return env.lookup(ast.name)
    if isinstance(ast, Const):
        proto = env.prototype()
        return proto.with_samples(np.full(len(proto), ast.value))
    if isinstance(ast, Unary):
        child = evaluate(ast.child, env)
        if ast.op == "neg":
            return child.with_samples(-child.samples)
        return ops.complement(child)
    if isinstance(ast, Call):
        arg = evaluate(ast.child, env)
        if ast.fn == "sin":
            return arg.with_samples(np.sin(arg.samples))
        if ast.fn == "cos":
            return arg.with_samples(np.cos(arg.samples))
        if ast.fn == "abs":
            return ops.absolute(arg)
        return arg.with_samples(np.where(arg.samples >= 0.0, 1.0, -1.0))
    left = evaluate(ast.left, env)
    right = evaluate(ast.right, env)
    if ast.op == "add":
        return _arith(left, right, np.add)
    if ast.op == "sub":
        return _arith(left, right, np.subtract)
    if ast.op == "mul":
        return _arith(left, right, np.multiply)
    if ast.op == "intersect":
        return ops.intersection(left, right)
    if ast.op == "union":
        return ops.union(left, right)
    return ops.common_product(left, right)


def pretty_print(ast: Expr) -> str:
    """Fully parenthesized canonical rendering; parses back to the same AST."""
    if isinstance(ast, Var):
        return ast.name
    if isinstance(ast, Const):
        return repr(ast.value)
    if isinstance(ast, Unary):
        if ast.op == "neg":
            return "-" + pretty_print(ast.child)
        return "(" + pretty_print(ast.child) + ")~"
    if isinstance(ast, Call):
        return f"{ast.fn}({pretty_print(ast.child)})"
    return f"({pretty_print(ast.left)} {_BINARY_SYMBOL[ast.op]} {pretty_print(ast.right)})"
