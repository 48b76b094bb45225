"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ['^' INT]
    atom   := INT | NAME | '(' expr ')'

Juxtaposition (``2x``, ``a b``) is rejected.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .polyfield import MAX_EXPONENT, Polynomial, PolyRing, poly_power

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            out.append(("op", op, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(ring.variables)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[0] != "op" or tok[1] != value:
            self.error(f"expected {value!r}", tok)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name") or tok[1] == "(":
                self.error("implicit multiplication is not allowed; use '*'")
            self.error(f"unexpected token {tok[1]!r}")
        return f

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[:2] == ("op", "+"):
            self.take()
        elif self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            f = f * self.factor()
        return f

    def factor(self) -> Polynomial:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal", tok)
            k = int(tok[1])
            if k > MAX_EXPONENT:
                self.error(f"exponent exceeds {MAX_EXPONENT}", tok)
            try:
                return poly_power(base, k)
            except OverflowError:
                self.error("exponent overflow", tok)
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            return self.ring.constant(int(value) % self.ring.p)
        if kind == "name":
            if value not in self.index:
                self.error(f"unknown identifier {value!r}", tok)
            return self.ring.gen(self.index[value])
        if value == "(":
            f = self.expr()
            self.expect(")")
            return f
        self.error(f"unexpected token {value!r}" if value else "unexpected end of input", tok)


def parse_polynomial(text: str, ring_or_vars, p: int | None = None) -> Polynomial:
    """Parse ``text`` into a canonical polynomial.

    ``ring_or_vars`` is either a :class:`PolyRing` or a sequence of variable
    names (then ``p`` is required and the order is grevlex).
    """
    if isinstance(ring_or_vars, PolyRing):
        ring = ring_or_vars
    else:
        if p is None:
            raise ValueError("p is required when passing variable names")
        ring = PolyRing(tuple(ring_or_vars), p)
    return _Parser(text, ring).parse()
