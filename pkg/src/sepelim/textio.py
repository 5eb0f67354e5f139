"""Polynomial text format.

Grammar (shared with the problem-file front end): integer and rational
`p/q` literals, indeterminate names, `+ - * ^` and parentheses.  Implicit
multiplication is not allowed.  Printing lists terms in descending
internal degrevlex and round-trips through the parser.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PolyParseError
from .poly import Polynomial
from .rings import GradedRing

_OPS = "+-*^()"


def _tokenize(text: str):
    tokens: list[tuple[str, str, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS or ch == "/":
            tokens.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, tokens, ring: GradedRing, text_len: int):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring
        self.text_len = text_len

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input", self.text_len)
        self.pos += 1
        return tok

    def expect_op(self, op):
        tok = self.next()
        if tok[0] != "op" or tok[1] != op:
            raise PolyParseError(f"expected {op!r}, found {tok[1]!r}", tok[2])

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok is not None:
            raise PolyParseError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.next()
            sign = -1 if tok[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                break
            self.next()
            q = self.term()
            p = p + q if tok[1] == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] != "*":
                break
            self.next()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        p = self.atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.next()
            etok = self.next()
            if etok[0] != "int":
                raise PolyParseError("exponent must be a non-negative integer", etok[2])
            p = p ** int(etok[1])
        return p

    def atom(self) -> Polynomial:
        tok = self.next()
        if tok[0] == "int":
            value = Fraction(int(tok[1]))
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                self.next()
                den = self.next()
                if den[0] != "int" or int(den[1]) == 0:
                    raise PolyParseError("invalid rational literal", den[2])
                value = value / int(den[1])
            return self.ring.const(value)
        if tok[0] == "name":
            try:
                return self.ring.var_named(tok[1])
            except KeyError:
                raise PolyParseError(f"unknown indeterminate {tok[1]!r}", tok[2]) from None
        if tok[0] == "op" and tok[1] == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise PolyParseError(f"unexpected token {tok[1]!r}", tok[2])


def parse_polynomial(text: str, ring: GradedRing) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial", 0)
    return _Parser(tokens, ring, len(text)).parse()


def _format_term(ring: GradedRing, exps, coeff) -> tuple[bool, str]:
    """Return (negative, rendered magnitude) for one term."""
    fld = ring.coeff_field
    neg = fld.is_negative_like(coeff)
    mag = fld.abs_like(coeff) if neg else coeff
    vars_part = "*".join(
        ring.names[i] if e == 1 else f"{ring.names[i]}^{e}"
        for i, e in enumerate(exps)
        if e > 0
    )
    if not vars_part:
        return neg, fld.format(mag)
    if mag == fld.one:
        return neg, vars_part
    return neg, f"{fld.format(mag)}*{vars_part}"


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    pieces = []
    for idx, (exps, coeff) in enumerate(f.terms):
        neg, body = _format_term(f.ring, exps, coeff)
        if idx == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


def format_tuple(polys) -> str:
    return "(" + ", ".join(format_polynomial(p) for p in polys) + ")"
