"""Concrete syntax for formulas, arrow terms and ``.pnc`` term files.

Formulas: letters are identifiers, ``~A`` is negation, ``A /\\ B`` and
``A \\/ B`` are the binary connectives.  A binary connective never chains
without parentheses, and ``~`` binds tightest.

Terms: ``name(F, ...)`` applies a generator to index formulas, ``f . g`` is
composition with ``g`` applied first (right-associative), and ``f /\\ g`` /
``f \\/ g`` are tensors, which again do not chain without parentheses.

Term files hold statements ``name := term;`` and ``formula name := F;``.
Later statements may refer to earlier names; ``#`` starts a comment.
"""
from __future__ import annotations

import re
from typing import Union

from .arrows import GENERATORS, ArrowTerm, Comp, Gen, Tensor
from .errors import ParseError
from .formula import AND, OR, Atom, Formula, Neg, binary, print_formula

Definition = Union[ArrowTerm, Formula]

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>:=|/\\|\\/|[~().,;])
""", re.VERBOSE)

_DESCRIBE = {"ident": "identifier", "eof": "end of input"}


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), line, pos - line_start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, definitions: dict[str, Definition] | None = None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.defs = definitions if definitions is not None else {}

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def at(self, *texts: str) -> bool:
        t = self.tok
        return t.kind == "op" and t.text in texts

    def fail(self, message: str, expected) -> ParseError:
        t = self.tok
        if t.kind == "ident":
            found = f"identifier {t.text!r}"
        else:
            found = _DESCRIBE.get(t.kind, repr(t.text))
        return ParseError(f"{message}, found {found}", t.line, t.col,
                          {_DESCRIBE.get(e, repr(e)) for e in expected})

    def expect(self, text: str) -> _Token:
        if not self.at(text):
            raise self.fail(f"expected {text!r}", [text])
        t = self.tok
        self.i += 1
        return t

    def ident(self) -> str:
        if self.tok.kind != "ident":
            raise self.fail("expected an identifier", ["ident"])
        t = self.tok
        self.i += 1
        return t.text

    # formulas

    def formula(self) -> Formula:
        left = self.unary()
        if self.at("/\\", "\\/"):
            op = AND if self.tok.text == "/\\" else OR
            self.i += 1
            right = self.unary()
            if self.at("/\\", "\\/"):
                raise self.fail("binary connectives need explicit parentheses", [",", ")", ";", "eof"])
            return binary(op, left, right)
        return left

    def unary(self) -> Formula:
        if self.at("~"):
            self.i += 1
            return Neg(self.unary())
        if self.at("("):
            self.i += 1
            inner = self.formula()
            self.expect(")")
            return inner
        if self.tok.kind == "ident":
            name = self.ident()
            bound = self.defs.get(name)
            return bound if isinstance(bound, Formula) else Atom(name)
        raise self.fail("expected a formula", ["~", "(", "ident"])

    # terms

    def term(self) -> ArrowTerm:
        left = self.tensor()
        if self.at("."):
            self.i += 1
            return Comp(left, self.term())
        return left

    def tensor(self) -> ArrowTerm:
        left = self.primary()
        if self.at("/\\", "\\/"):
            op = AND if self.tok.text == "/\\" else OR
            self.i += 1
            right = self.primary()
            if self.at("/\\", "\\/"):
                raise self.fail("tensors need explicit parentheses", [".", ")", ";", "eof"])
            return Tensor(op, left, right)
        return left

    def primary(self) -> ArrowTerm:
        if self.at("("):
            self.i += 1
            inner = self.term()
            self.expect(")")
            return inner
        if self.tok.kind != "ident":
            raise self.fail("expected a term", ["(", "ident"])
        start = self.tok
        name = self.ident()
        if self.at("("):
            spec = GENERATORS.get(name)
            if spec is None:
                raise ParseError(f"unknown generator {name!r}", start.line, start.col,
                                 sorted(GENERATORS))
            self.i += 1
            args = [self.formula()]
            while self.at(","):
                self.i += 1
                args.append(self.formula())
            self.expect(")")
            if len(args) != spec.arity:
                raise ParseError(f"{name} takes {spec.arity} indices, got {len(args)}",
                                 start.line, start.col)
            return Gen(name, tuple(args))
        bound = self.defs.get(name)
        if isinstance(bound, ArrowTerm):
            return bound
        raise ParseError(f"undefined term {name!r}", start.line, start.col, ["("])

    def end(self) -> None:
        if self.tok.kind != "eof":
            raise self.fail("unexpected trailing input", ["eof"])

    # files

    def statements(self) -> dict[str, Definition]:
        defined: dict[str, Definition] = {}
        while self.tok.kind != "eof":
            start = self.tok
            is_formula = start.kind == "ident" and start.text == "formula" \
                and self.tokens[self.i + 1].kind == "ident"
            if is_formula:
                self.i += 1
            name = self.ident()
            if name in self.defs:
                raise ParseError(f"{name!r} is already defined", start.line, start.col)
            self.expect(":=")
            value = self.formula() if is_formula else self.term()
            self.expect(";")
            self.defs[name] = value
            defined[name] = value
        return defined


def parse_formula(text: str, definitions: dict[str, Definition] | None = None) -> Formula:
    p = _Parser(text, definitions)
    out = p.formula()
    p.end()
    return out


def parse_arrow(text: str, definitions: dict[str, Definition] | None = None) -> ArrowTerm:
    p = _Parser(text, definitions)
    out = p.term()
    p.end()
    return out


def parse_file(text: str, definitions: dict[str, Definition] | None = None) -> dict[str, Definition]:
    """Parse a term file; ``definitions`` (if given) is extended in place."""
    return _Parser(text, definitions).statements()


def print_arrow(f: ArrowTerm) -> str:
    if isinstance(f, Gen):
        return f"{f.name}(" + ", ".join(print_formula(a) for a in f.args) + ")"
    if isinstance(f, Comp):
        left = print_arrow(f.left)
        if isinstance(f.left, Comp):
            left = f"({left})"
        return f"{left} . {print_arrow(f.right)}"
    if isinstance(f, Tensor):
        parts = []
        for side in (f.left, f.right):
            s = print_arrow(side)
            parts.append(f"({s})" if isinstance(side, (Comp, Tensor)) else s)
        return f"{parts[0]} {f.op.value} {parts[1]}"
    return repr(f)

