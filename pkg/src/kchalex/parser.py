"""Recursive-descent parser for polynomial and rational-function expressions.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := atom ('^' ['-'] INT)?
    atom   := INT | IDENT | '(' expr ')'

Unary minus binds looser than ``^`` so ``-mu^2`` is ``-(mu^2)``, which is what
the renderer emits.  In polynomial mode ``/`` is only accepted with a nonzero
constant on the right, enough to read back ``1/2*x`` coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .algebra.multipoly import RING_VARS, MultiPoly
from .algebra.unipoly import RatFunc, UniPoly


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        self.text = text
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{msg}{where}")


MAX_EXPONENT = 1000

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # only trailing whitespace left
        if m.group(1) is not None:
            toks.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("ident", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            toks.append(("op", ch, m.start(3)))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _PolyDomain:
    def __init__(self, symtab: Iterable[str]):
        self.gens = tuple(symtab)

    def const(self, n: int):
        return MultiPoly.constant(Fraction(n), self.gens)

    def ident(self, name: str, pos: int):
        if name not in self.gens:
            raise ParseError(f"unknown identifier {name!r}", pos)
        return MultiPoly.var(name, self.gens)

    def div(self, a, b, pos: int):
        if not b.is_constant() or b.is_zero():
            raise ParseError("division only by a nonzero constant", pos)
        return a.scale(1 / b.constant_term())

    def power(self, base, e: int, pos: int):
        if e < 0:
            if len(base.terms) != 1:
                raise ParseError("negative exponent on a non-monomial", pos)
            (exps, _), = base.terms.items()
            for g, k in zip(self.gens, exps):
                if k and g not in RING_VARS:
                    raise ParseError(f"negative exponent on chord variable {g!r}", pos)
        return base ** e


class _RatDomain:
    def __init__(self, var: str):
        self.var = var

    def const(self, n: int):
        return RatFunc(UniPoly([n], self.var))

    def ident(self, name: str, pos: int):
        if name != self.var:
            raise ParseError(f"unknown identifier {name!r} (expected {self.var!r})", pos)
        return RatFunc.x(self.var)

    def div(self, a, b, pos: int):
        if b.is_zero():
            raise ParseError("division by zero", pos)
        return a / b

    def power(self, base, e: int, pos: int):
        if e < 0 and base.is_zero():
            raise ParseError("zero to a negative power", pos)
        return base ** e


class _Parser:
    def __init__(self, text: str, domain):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.dom = domain

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value or kind == "end":
            found = "end of input" if kind == "end" else repr(v)
            raise ParseError(f"expected {value!r}, found {found}", pos, self.text)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, self.text)
        try:
            val = self.expr()
        except RecursionError:
            raise ParseError("expression nested too deeply", None, self.text) from None
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos, self.text)
        return val

    def expr(self):
        val = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            val = val * rhs if op == "*" else self.dom.div(val, rhs, pos)
        return val

    def unary(self):
        kind, v, _ = self.peek()
        if kind == "op" and v == "-":
            self.take()
            return -self.unary()
        return self.factor()

    def factor(self):
        base = self.atom()
        kind, v, pos = self.peek()
        if kind == "op" and v == "^":
            self.take()
            sign = 1
            kind, v, p2 = self.peek()
            if kind == "op" and v == "-":
                self.take()
                sign = -1
            kind, v, p2 = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer", p2, self.text)
            if len(v) > 4 or int(v) > MAX_EXPONENT:
                raise ParseError(f"exponent larger than {MAX_EXPONENT}", p2, self.text)
            return self.dom.power(base, sign * int(v), pos)
        return base

    def atom(self):
        kind, v, pos = self.take()
        if kind == "int":
            return self.dom.const(int(v))
        if kind == "ident":
            return self.dom.ident(v, pos)
        if kind == "op" and v == "(":
            val = self.expr()
            self.expect(")")
            return val
        found = "end of input" if kind == "end" else repr(v)
        raise ParseError(f"unexpected {found}", pos, self.text)


def parse_expr(text: str, symtab: Iterable[str]) -> MultiPoly:
    """Parse a polynomial expression over the given generators."""
    if not isinstance(text, str):
        raise ParseError(f"expression must be a string, got {type(text).__name__}")
    return _Parser(text, _PolyDomain(symtab)).parse()


def parse_ratfunc(text: str, var: str = "mu") -> RatFunc:
    """Parse a rational function in one variable, e.g. ``"(mu-1)/mu^2"``."""
    if not isinstance(text, str):
        raise ParseError(f"expression must be a string, got {type(text).__name__}")
    return _Parser(text, _RatDomain(var)).parse()


def parse_unipoly(text: str, var: str = "mu") -> UniPoly:
    r = parse_ratfunc(text, var)
    if not r.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial in {var}")
    return r.num
