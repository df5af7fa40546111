"""Parsing of element literals like ``1+2*e1`` or ``3+u^2``."""

from __future__ import annotations

import re

from .rings import DescriptorError, Element, Ring

_TOKEN_RE = re.compile(r"\s*(\d+|[A-Za-z][A-Za-z0-9]*|\*\*|[-+*^()])")


class LiteralError(DescriptorError):
    """The element literal does not parse."""


def _tokenize(text):
    out = []
    text = text.rstrip()
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise LiteralError(f"bad element literal near {text[pos:]!r}")
        out.append("^" if m.group(1) == "**" else m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, ring: Ring, tokens):
        self.ring = ring
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self) -> Element:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Element:
        acc = self.factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.take()
                acc = acc * self.factor()
            elif nxt is not None and (nxt.isdigit() or nxt[0].isalpha() or nxt == "("):
                # implicit multiplication: "2e", "3(1+u)"
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Element:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise LiteralError("exponent must be a nonnegative integer")
            base = base ** int(tok)
        return base

    def atom(self) -> Element:
        tok = self.take()
        if tok is None:
            raise LiteralError("unexpected end of element literal")
        if tok == "-":
            return -self.factor()
        if tok == "+":
            return self.factor()
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise LiteralError("unbalanced parentheses in element literal")
            return inner
        if tok.isdigit():
            return self.ring.from_int(int(tok))
        if tok[0].isalpha():
            return self.ring.generator(tok)
        raise LiteralError(f"unexpected token {tok!r} in element literal")


def parse_element(ring: Ring, text: str) -> Element:
    tokens = _tokenize(text)
    if not tokens:
        raise LiteralError("empty element literal")
    parser = _Parser(ring, tokens)
    value = parser.expr()
    if parser.pos != len(tokens):
        raise LiteralError(f"trailing junk in element literal {text!r}")
    return value


def format_element(x: Element) -> str:
    return str(x)
