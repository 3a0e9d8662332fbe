"""One-line expression language for diagrams.

Grammar::

    expr   := term ((";" | "∘") term)*
    term   := factor ("*" factor)*
    factor := atom | "(" expr ")"
    atom   := "id(" [k ("," k)*] ")" | "b(" k "," l ")" | "i(" k ")" | "e(" k ")"

``a ; b`` runs ``a`` first (diagrammatic order); ``a ∘ b`` runs ``b`` first.
Both associate to the left.  ``*`` is the tensor product and binds tighter.

>>> from chromatic_brauer.diagram import loop
>>> parse_expr("i(0) ; e(0)") == loop(0)
True
"""

from __future__ import annotations

import re
from typing import NamedTuple

from . import diagram as dg
from .diagram import Diagram
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[();,*∘]))")


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        tok = self.tok
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ParseError(f"expected {want}, got {got}", tok.pos)
        self.i += 1
        return tok

    def parse(self) -> Diagram:
        result = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return result

    def expr(self) -> Diagram:
        acc = self.term()
        while self.tok.text in (";", "∘"):
            op = self.take().text
            rhs = self.term()
            acc = dg.compose(rhs, acc) if op == ";" else dg.compose(acc, rhs)
        return acc

    def term(self) -> Diagram:
        acc = self.factor()
        while self.tok.text == "*":
            self.take()
            acc = dg.tensor(acc, self.factor())
        return acc

    def factor(self) -> Diagram:
        if self.tok.text == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        return self.atom()

    def colors(self) -> list[int]:
        out = []
        if self.tok.kind == "num":
            out.append(int(self.take().text))
            while self.tok.text == ",":
                self.take(",")
                out.append(int(self.take(kind="num").text))
        return out

    def atom(self) -> Diagram:
        name = self.take(kind="name")
        self.take("(")
        args = self.colors()
        close = self.take(")")
        arity = {"b": 2, "i": 1, "e": 1}
        if name.text == "id":
            return dg.identity(args)
        if name.text not in arity:
            raise ParseError(f"unknown generator {name.text!r}", name.pos)
        if len(args) != arity[name.text]:
            raise ParseError(
                f"{name.text}() takes {arity[name.text]} color(s), got {len(args)}", close.pos)
        if name.text == "b":
            return dg.braid(*args)
        return dg.unit(args[0]) if name.text == "i" else dg.counit(args[0])


def parse_expr(text: str) -> Diagram:
    """Parse a DSL expression into a diagram.

    Raises :class:`ParseError` on malformed text and
    :class:`~chromatic_brauer.errors.BoundaryMismatchError` when a composition
    does not type-check.
    """
    return _Parser(text).parse()
