"""Formulas of the three object languages.

Formulas are immutable trees built from :class:`Atom`, :class:`Neg`,
:class:`Conj` and :class:`Disj`.  The Python operators ``&``, ``|`` and ``~``
build conjunctions, disjunctions and negations::

    >>> p, q = letters("p q")
    >>> print(~(p & q))
    ~(p /\\ q)
    >>> print(nnf(~(p & q)))
    ~p \\/ ~q
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar


class Conn(enum.Enum):
    AND = "/\\"
    OR = "\\/"

    @property
    def dual(self) -> Conn:
        return Conn.OR if self is Conn.AND else Conn.AND

    @property
    def symbol(self) -> str:
        return "∧" if self is Conn.AND else "∨"


AND = Conn.AND
OR = Conn.OR


class Formula:
    """Base class; use the concrete subclasses or the operators."""

    __slots__ = ()

    def __and__(self, other: Formula) -> Conj:
        return Conj(self, other)

    def __or__(self, other: Formula) -> Disj:
        return Disj(self, other)

    def __invert__(self) -> Neg:
        return Neg(self)

    def __str__(self) -> str:
        return print_formula(self)

    @cached_property
    def size(self) -> int:
        """Number of letter occurrences."""
        return letter_count(self)


@dataclass(frozen=True, order=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("letter names must be non-empty")


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula
    op: ClassVar[Conn]


@dataclass(frozen=True)
class Conj(Binary):
    op = Conn.AND


@dataclass(frozen=True)
class Disj(Binary):
    op = Conn.OR


def binary(op: Conn, left: Formula, right: Formula) -> Binary:
    return Conj(left, right) if op is Conn.AND else Disj(left, right)


def letters(names: str) -> tuple[Atom, ...]:
    """``letters("p q r")`` returns three atoms."""
    return tuple(Atom(n) for n in names.split())


def letter_count(a: Formula) -> int:
    if isinstance(a, Atom):
        return 1
    if isinstance(a, Neg):
        return letter_count(a.body)
    if isinstance(a, Binary):
        return letter_count(a.left) + letter_count(a.right)
    raise TypeError(f"not a formula: {a!r}")


def occurrences(a: Formula) -> list[tuple[Atom, bool]]:
    """All letter occurrences left to right, with their polarity under negation."""
    out: list[tuple[Atom, bool]] = []

    def walk(x: Formula, negated: bool) -> None:
        if isinstance(x, Atom):
            out.append((x, negated))
        elif isinstance(x, Neg):
            walk(x.body, not negated)
        else:
            walk(x.left, negated)
            walk(x.right, negated)

    walk(a, False)
    return out


def letter_at(a: Formula, k: int) -> tuple[Atom, bool]:
    """The occurrence at 0-based position ``k`` and whether it is negated."""
    occ = occurrences(a)
    if not 0 <= k < len(occ):
        raise IndexError(f"occurrence {k} out of range for {a} ({len(occ)} letters)")
    return occ[k]


def nnf(a: Formula) -> Formula:
    """Push negations onto letters by double negation and De Morgan."""
    if isinstance(a, Atom):
        return a
    if isinstance(a, Binary):
        return binary(a.op, nnf(a.left), nnf(a.right))
    body = a.body
    if isinstance(body, Atom):
        return a
    if isinstance(body, Neg):
        return nnf(body.body)
    return binary(body.op.dual, nnf(Neg(body.left)), nnf(Neg(body.right)))


def is_negated_atom(a: Formula) -> bool:
    return isinstance(a, Neg) and isinstance(a.body, Atom)


def in_language(a: Formula, negation: str) -> bool:
    """``negation`` is ``"none"``, ``"atomic"`` or ``"full"``."""
    if isinstance(a, Atom):
        return True
    if isinstance(a, Neg):
        if negation == "none":
            return False
        if negation == "atomic":
            return isinstance(a.body, Atom)
        return in_language(a.body, negation)
    return in_language(a.left, negation) and in_language(a.right, negation)


def subformulas(a: Formula):
    yield a
    if isinstance(a, Neg):
        yield from subformulas(a.body)
    elif isinstance(a, Binary):
        yield from subformulas(a.left)
        yield from subformulas(a.right)


def print_formula(a: Formula) -> str:
    if isinstance(a, Atom):
        return a.name
    if isinstance(a, Neg):
        return "~" + _operand(a.body)
    if isinstance(a, Binary):
        return f"{_operand(a.left)} {a.op.value} {_operand(a.right)}"
    # pattern nodes and other Formula subclasses print themselves
    return repr(a)


def _operand(a: Formula) -> str:
    text = print_formula(a)
    return f"({text})" if isinstance(a, Binary) else text


def pretty(a: Formula) -> str:
    """Unicode rendering with ∧, ∨ and ¬, for human-facing output."""
    if isinstance(a, Atom):
        return a.name
    if isinstance(a, Neg):
        inner = pretty(a.body)
        return "¬" + (f"({inner})" if isinstance(a.body, Binary) else inner)
    if isinstance(a, Binary):
        parts = []
        for side in (a.left, a.right):
            s = pretty(side)
            parts.append(f"({s})" if isinstance(side, Binary) else s)
        return parts[0] + a.op.symbol + parts[1]
    return repr(a)


class Theory(enum.Enum):
    """The six free categories, keyed by their command-line names."""

    DS = "ds"
    MDS = "mds"
    PN = "pn"
    MPN = "mpn"
    PN_NEG = "pn-neg"
    MPN_NEG = "mpn-neg"

    @property
    def negation(self) -> str:
        if self in (Theory.DS, Theory.MDS):
            return "none"
        if self in (Theory.PN, Theory.MPN):
            return "atomic"
        return "full"

    @property
    def has_mix(self) -> bool:
        return self in (Theory.MDS, Theory.MPN, Theory.MPN_NEG)

    @property
    def has_units(self) -> bool:
        """Whether the Δ∧ and Σ∨ families are available."""
        return self.negation != "none"

    @property
    def label(self) -> str:
        return {"ds": "DS", "mds": "MDS", "pn": "PN", "mpn": "MPN",
                "pn-neg": "PN¬", "mpn-neg": "MPN¬"}[self.value]


def check_language(a: Formula, theory: Theory) -> bool:
    return in_language(a, theory.negation)
