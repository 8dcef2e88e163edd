"""Text syntax for presentations.

::

    presentation := '<' ident (',' ident)* '|' [relation (',' relation)*] '>'
    relation     := word ('=' word)?
    word         := '1' | factor+          (juxtaposition or '*')
    factor       := atom ('^' (integer | atom))?
    atom         := ident | '(' word ')' | '[' word ',' word ']'

``x^n`` with an integer is a power, ``x^y`` with an atom is ``y^-1 x y``.
Generators must be separated by whitespace or ``*`` (``ab`` is one name).
``#`` starts a comment running to the end of the line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError, UnknownGenerator
from .presentation import Presentation
from .words import Word, commutator, conjugate, power

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+|\#[^\n]*)"
    r"|(?P<ident>[a-z][a-z0-9_]*)"
    r"|(?P<int>-?[0-9]+)"
    r"|(?P<sym>[<>,|=()\[\]^*])"
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, generators: Iterable[str] | None = None):
        self.tokens = tokenize(text)
        self.i = 0
        self.generators = set(generators) if generators is not None else None

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{msg}, found {found}", tok.line, tok.col)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "sym" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            self.error(f"expected {text!r}")

    def ident(self) -> str:
        if self.tok.kind != "ident":
            self.error("expected a generator name")
        name = self.tok.text
        self.i += 1
        return name

    def starts_atom(self) -> bool:
        t = self.tok
        return t.kind == "ident" or (t.kind == "sym" and t.text in "([")

    def presentation(self) -> Presentation:
        self.expect("<")
        gens = [self.ident()]
        while self.accept(","):
            gens.append(self.ident())
        if len(set(gens)) != len(gens):
            self.error("duplicate generator")
        self.generators = set(gens)
        self.expect("|")
        rels = []
        if not (self.tok.kind == "sym" and self.tok.text == ">"):
            rels.append(self.relation())
            while self.accept(","):
                rels.append(self.relation())
        self.expect(">")
        if self.tok.kind != "eof":
            self.error("trailing input after '>'")
        return Presentation(tuple(gens), tuple(rels))

    def relation(self) -> Word:
        lhs = self.word()
        if self.accept("="):
            return lhs * ~self.word()
        return lhs

    def word(self) -> Word:
        if self.tok.kind == "int" and self.tok.text == "1":
            self.i += 1
            return Word()
        if not self.starts_atom():
            self.error("expected a word")
        w = self.factor()
        while True:
            if self.accept("*"):
                if not self.starts_atom():
                    self.error("expected a factor after '*'")
            elif not self.starts_atom():
                return w
            w = w * self.factor()

    def factor(self) -> Word:
        base = self.atom()
        if self.accept("^"):
            if self.tok.kind == "int":
                n = int(self.tok.text)
                self.i += 1
                return power(base, n)
            if self.starts_atom():
                return conjugate(base, self.atom())
            self.error("expected an integer or an atom after '^'")
        return base

    def atom(self) -> Word:
        tok = self.tok
        if tok.kind == "ident":
            name = self.ident()
            if self.generators is not None and name not in self.generators:
                raise UnknownGenerator(
                    f"unknown generator {name!r} (line {tok.line}, column {tok.col})"
                )
            return Word.gen(name)
        if self.accept("("):
            w = self.word()
            self.expect(")")
            return w
        if self.accept("["):
            x = self.word()
            self.expect(",")
            y = self.word()
            self.expect("]")
            return commutator(x, y)
        self.error("expected a generator, '(' or '['")


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


def parse_word(text: str, generators: Iterable[str] | None = ("a", "b")) -> Word:
    p = _Parser(text, generators)
    w = p.word()
    if p.tok.kind != "eof":
        p.error("trailing input")
    return w


def format_presentation(p: Presentation) -> str:
    return str(p)
