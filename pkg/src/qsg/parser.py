"""Expression parser for elements.

Grammar (whitespace-insensitive, positions reported 1-based):

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor (('*' | '/') factor | factor)*      # juxtaposition = product
    factor  := atom ['^' INT]
    atom    := INT | NAME | '(' expr ')'

NAME resolves through a symbol table (generators, h, q, composites).  '/'
only divides by scalar-valued expressions.  Printing an element and parsing
the result round-trips exactly.
"""

from __future__ import annotations

import difflib
import re

from .core import Element
from .errors import ParseError
from .scalars import Q

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|([+\-*/^()]))")


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip()) + 1
            raise ParseError(f"unexpected character {rest.strip()[0]!r}", bad)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1) + 1))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2) + 1))
        else:
            tokens.append(("op", m.group(3), m.start(3) + 1))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens, resolve):
        self.tokens = tokens
        self.i = 0
        self.resolve = resolve

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expr(self):
        negate = False
        if self._at_op("-"):
            self.next()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.factor()
                if val == "*":
                    acc = acc * rhs
                else:
                    try:
                        acc = acc / rhs
                    except (ValueError, ZeroDivisionError) as e:
                        raise ParseError(str(e), pos) from None
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self._at_op("^"):
            self.next()
            kind, val, pos = self.next()
            if kind != "int":
                raise ParseError("expected an integer exponent after '^'", pos)
            base = base**val
        return base

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            return self.resolve.integer(val)
        if kind == "name":
            return self.resolve.lookup(val, pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val, pos = self.next()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", pos)
            return inner
        raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input", pos)

    def _at_op(self, op):
        kind, val, _ = self.peek()
        return kind == "op" and val == op


class Resolver:
    """Maps names to elements over one table."""

    def __init__(self, table, names: dict[str, Element]):
        self.table = table
        self.names = names

    def integer(self, n: int) -> Element:
        return Element.scalar(self.table, n)

    def lookup(self, name: str, pos: int) -> Element:
        if name == "q":
            return Element.scalar(self.table, Q)
        if name == "h":
            return Element.h(self.table)
        hit = self.names.get(name)
        if hit is not None:
            return hit
        candidates = list(self.names) + ["h", "q"]
        close = difflib.get_close_matches(name, candidates, n=1)
        hint = f"; did you mean {close[0]!r}?" if close else ""
        raise ParseError(f"unknown symbol {name!r}{hint}", pos)


def parse(text: str, resolver: Resolver) -> Element:
    tokens = tokenize(text)
    p = _Parser(tokens, resolver)
    result = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", pos)
    return result
