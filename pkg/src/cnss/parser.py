"""Polynomial expression language.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ['^' INT]
    atom   := INT | 'x' INT | '(' expr ')'

Multiplication is always explicit; ``^`` takes a nonnegative integer literal.
"""

from __future__ import annotations

import re

from .errors import PolyParseError
from .field import check_prime
from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolyParseError(f"unexpected character {text[stripped]!r}", stripped, text)
        start = m.start(m.lastgroup)
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), start))
        elif m.group("var") is not None:
            tokens.append(("var", m.group("idx"), start))
        else:
            tokens.append((m.group("op"), m.group("op"), start))
        pos = m.end()
    tokens.append(("end", "", end))
    return tokens


class _Parser:
    def __init__(self, text: str, p: int, n: int):
        self.text = text
        self.p = p
        self.n = n
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}")
        self.i += 1
        return tok

    def fail(self, message: str):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value if kind != "var" else "x" + value)
        raise PolyParseError(f"{message}, found {found}", pos, self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return result

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        if self.peek()[0] in ("int", "var", "("):
            self.fail("missing '*' between factors")
        return result

    def factor(self) -> Polynomial:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            if self.peek()[0] != "int":
                self.fail("exponent must be a nonnegative integer literal")
            base = base.power(int(self.take()[1]))
            if self.peek()[0] == "^":
                self.fail("chained exponents are not allowed")
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return Polynomial.constant(self.p, self.n, int(value))
        if kind == "var":
            self.take()
            idx = int(value)
            if not 1 <= idx <= self.n:
                raise PolyParseError(f"variable index out of range: x{idx} with n={self.n}", pos, self.text)
            return Polynomial.variable(self.p, self.n, idx)
        if kind == "(":
            self.take()
            inner = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("expected a number, variable or '('")


def parse_poly(text: str, p: int, n: int) -> Polynomial:
    check_prime(p)
    if n < 0:
        raise ValueError("arity must be nonnegative")
    return _Parser(text, p, n).parse()


def _monomial_str(exps) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """Canonical text: graded-lex descending terms, coefficients in [0, p)."""
    if f.is_zero():
        return "0"
    out = []
    for exps, c in f.sorted_terms():
        mono = _monomial_str(exps)
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out)
