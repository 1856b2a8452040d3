"""Arithmetic expression mini-language used by problem files.

Grammar (standard precedence, '^' binds tightest and is right-associative):

    expr    := term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := ('-')? power
    power   := primary ('^' factor)?
    primary := number | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'

There is no implicit multiplication: "2x" is a parse error.  Domain errors
(division by zero, sqrt of a negative, non-finite results) surface at
evaluation time, never at parse time.  Parse errors carry a 1-based byte
offset and the set of token spellings that were expected.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import EvalError, ParseError

__all__ = [
    "Expr",
    "Num",
    "Var",
    "Neg",
    "Bin",
    "Call",
    "parse",
    "evaluate",
    "to_source",
    "FUNCTIONS",
]


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expr", ...]


Expr = Union[Num, Var, Neg, Bin, Call]

# name -> (min arity, max arity); None = unbounded
FUNCTIONS: dict[str, tuple[int, int | None]] = {
    "abs": (1, 1),
    "min": (1, None),
    "max": (1, None),
    "exp": (1, 1),
    "sin": (1, 1),
    "cos": (1, 1),
    "sqrt": (1, 1),
    "tanh": (1, 1),
}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "ident" | literal op char | "end"
    text: str
    pos: int  # 0-based byte offset


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(src):
        m = _TOKEN_RE.match(src, i)
        if m is None:
            raise ParseError(f"unexpected character {src[i]!r}", i + 1)
        if m.lastgroup == "number":
            tokens.append(_Token("number", m.group(), i))
        elif m.lastgroup == "ident":
            tokens.append(_Token("ident", m.group(), i))
        elif m.lastgroup == "op":
            tokens.append(_Token(m.group(), m.group(), i))
        i = m.end()
    tokens.append(_Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        tok = self.cur
        what = "end of input" if tok.kind == "end" else f"token {tok.text!r}"
        raise ParseError(f"unexpected {what}", tok.pos + 1, expected)

    def expect(self, kind: str, expected: tuple[str, ...]):
        if self.cur.kind != kind:
            self.fail(expected)
        return self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        if self.cur.kind != "end":
            self.fail(("end of input",))
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.cur.kind in ("+", "-"):
            op = self.advance().kind
            e = Bin(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.cur.kind in ("*", "/"):
            op = self.advance().kind
            e = Bin(op, e, self.factor())
        return e

    def factor(self) -> Expr:
        if self.cur.kind == "-":
            self.advance()
            return Neg(self.power())
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if self.cur.kind == "^":
            self.advance()
            return Bin("^", base, self.factor())  # right-associative
        return base

    def primary(self) -> Expr:
        tok = self.cur
        if tok.kind == "number":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "ident":
            self.advance()
            if self.cur.kind == "(":
                return self.call(tok)
            return Var(tok.text)
        if tok.kind == "(":
            self.advance()
            e = self.expr()
            self.expect(")", (")",))
            return e
        self.fail(("number", "identifier", "("))

    def call(self, name_tok: _Token) -> Expr:
        name = name_tok.text
        if name not in FUNCTIONS:
            raise ParseError(f"unknown function {name!r}", name_tok.pos + 1,
                             tuple(sorted(FUNCTIONS)))
        self.advance()  # consume '('
        args = [self.expr()]
        while self.cur.kind == ",":
            self.advance()
            args.append(self.expr())
        self.expect(")", (",", ")"))
        lo, hi = FUNCTIONS[name]
        if len(args) < lo or (hi is not None and len(args) > hi):
            raise ParseError(
                f"function {name!r} takes "
                + (f"{lo} argument(s)" if hi == lo else f"at least {lo} argument(s)")
                + f", got {len(args)}",
                name_tok.pos + 1,
            )
        return Call(name, tuple(args))


def parse(src: str) -> Expr:
    """Parse expression text into an AST; raise ParseError on bad input."""
    if not src.strip():
        raise ParseError("empty input", 1)
    return _Parser(src).parse()


_UNARY_FN = {
    "abs": abs,
    "exp": math.exp,
    "sin": math.sin,
    "cos": math.cos,
    "sqrt": math.sqrt,
    "tanh": math.tanh,
}


def _ev(e: Expr, bindings: Mapping[str, float]) -> float:
    match e:
        case Num(value=v):
            return v
        case Var(name=name):
            try:
                return bindings[name]
            except KeyError:
                raise EvalError(f"unbound variable {name!r}") from None
        case Neg(operand=inner):
            return -_ev(inner, bindings)
        case Bin(op=op, left=left, right=right):
            a = _ev(left, bindings)
            b = _ev(right, bindings)
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            if op == "/":
                if b == 0.0:
                    raise EvalError("division by zero")
                return a / b
            try:
                return math.pow(a, b)
            except (ValueError, OverflowError) as exc:
                raise EvalError(f"pow({a!r}, {b!r}): {exc}") from None
        case Call(name=name, args=args):
            vals = [_ev(a, bindings) for a in args]
            if name == "min":
                return min(vals)
            if name == "max":
                return max(vals)
            try:
                return _UNARY_FN[name](vals[0])
            except (ValueError, OverflowError) as exc:
                raise EvalError(f"{name}({vals[0]!r}): {exc}") from None
    raise TypeError(f"not an Expr node: {e!r}")


def evaluate(e: Expr, bindings: Mapping[str, float]) -> float:
    """Evaluate an AST under the given variable bindings.

    Raises EvalError for unbound variables, division by zero, function
    domain errors, and non-finite (NaN/infinite) results.
    """
    result = _ev(e, bindings)
    if not math.isfinite(result):
        raise EvalError(f"non-finite result {result!r}")
    return result


def free_variables(e: Expr) -> set[str]:
    """Names of all variables referenced by the AST."""
    match e:
        case Num():
            return set()
        case Var(name=name):
            return {name}
        case Neg(operand=inner):
            return free_variables(inner)
        case Bin(left=left, right=right):
            return free_variables(left) | free_variables(right)
        case Call(args=args):
            out: set[str] = set()
            for a in args:
                out |= free_variables(a)
            return out
    raise TypeError(f"not an Expr node: {e!r}")


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 3}


def _prec(e: Expr) -> int:
    if isinstance(e, Bin):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return 1  # parses like a low-precedence prefix inside * and /
    return 9


def to_source(e: Expr) -> str:
    """Render an AST as text that parses back to the same tree."""
    match e:
        case Num(value=v):
            return repr(v) if v >= 0 else f"({v!r})"
        case Var(name=name):
            return name
        case Neg(operand=inner):
            body = to_source(inner)
            # '-number', '-ident', '-call' and '-a^b' all re-parse as this
            # Neg; any other operand (Bin of + - * /, nested Neg) needs parens
            if isinstance(inner, Neg) or (isinstance(inner, Bin) and inner.op != "^"):
                body = f"({body})"
            return f"-{body}"
        case Bin(op=op, left=left, right=right):
            lp = to_source(left)
            rp = to_source(right)
            if _prec(left) < _PREC[op] or (
                op == "^" and (isinstance(left, Neg) or (isinstance(left, Bin) and left.op == "^"))
            ):
                lp = f"({lp})"
            if isinstance(right, Neg):
                pass  # '-x' is a valid factor / '^' right operand
            elif _prec(right) < _PREC[op] or (op != "^" and _prec(right) == _PREC[op]):
                rp = f"({rp})"
            return f"{lp} {op} {rp}" if op != "^" else f"{lp}^{rp}"
        case Call(name=name, args=args):
            return f"{name}(" + ", ".join(to_source(a) for a in args) + ")"
    raise TypeError(f"not an Expr node: {e!r}")
