"""Arrow terms: syntax trees, typing, theory membership and derived generators.

A term is a :class:`Gen` leaf (a generator applied to index formulas), a
:class:`Comp` (``Comp(f, g)`` is f∘g, so ``g`` runs first) or a
:class:`Tensor`.  ``f & g`` and ``f | g`` build tensors; :func:`comp` chains
compositions right-associatively.

    >>> p, q, r = letters("p q r")
    >>> print(typeof(dist(p, q, r)))
    p /\\ (q \\/ r) ⊢ (p /\\ q) \\/ r
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, NamedTuple

from .errors import CompositionError
from .formula import (AND, OR, Atom, Conn, Formula, Theory, check_language,
                      letters, pretty, print_formula)

__all__ = [
    "ArrowTerm", "Gen", "Comp", "Tensor", "ArrowType", "GENERATORS", "Theory",
    "typeof", "check_theory", "theory_violation", "expand_derived", "comp",
    "leaves", "size", "letters",
]


class ArrowTerm:
    __slots__ = ()

    def __and__(self, other: ArrowTerm) -> Tensor:
        return Tensor(AND, self, other)

    def __or__(self, other: ArrowTerm) -> Tensor:
        return Tensor(OR, self, other)

    def __str__(self) -> str:
        from .syntax import print_arrow
        return print_arrow(self)


@dataclass(frozen=True)
class Gen(ArrowTerm):
    name: str
    args: tuple[Formula, ...]

    def __post_init__(self):
        spec = GENERATORS.get(self.name)
        if spec is None:
            raise ValueError(f"unknown generator {self.name!r}")
        if len(self.args) != spec.arity:
            raise ValueError(f"{self.name} takes {spec.arity} indices, got {len(self.args)}")

    @property
    def spec(self) -> GenSpec:
        return GENERATORS[self.name]


@dataclass(frozen=True)
class Comp(ArrowTerm):
    left: ArrowTerm
    right: ArrowTerm


@dataclass(frozen=True)
class Tensor(ArrowTerm):
    op: Conn
    left: ArrowTerm
    right: ArrowTerm


class ArrowType(NamedTuple):
    source: Formula
    target: Formula

    def __str__(self) -> str:
        return f"{print_formula(self.source)} ⊢ {print_formula(self.target)}"


class GenSpec(NamedTuple):
    name: str
    symbol: str
    arity: int
    typing: Callable[..., tuple[Formula, Formula]]
    family: str  # identity | structural | unit | negation | mix
    derived: bool


def _assoc(op: Conn, forward: bool):
    def typing(a, b, c):
        nested_right = _bin(op, a, _bin(op, b, c))
        nested_left = _bin(op, _bin(op, a, b), c)
        return (nested_right, nested_left) if forward else (nested_left, nested_right)
    return typing


def _bin(op: Conn, a: Formula, b: Formula) -> Formula:
    return a & b if op is AND else a | b


_SPECS = [
    GenSpec("id", "1", 1, lambda a: (a, a), "identity", False),
    GenSpec("assoc_and_r", "b∧→", 3, _assoc(AND, True), "structural", False),
    GenSpec("assoc_and_l", "b∧←", 3, _assoc(AND, False), "structural", False),
    GenSpec("assoc_or_r", "b∨→", 3, _assoc(OR, True), "structural", False),
    GenSpec("assoc_or_l", "b∨←", 3, _assoc(OR, False), "structural", False),
    GenSpec("c_and", "c∧", 2, lambda a, b: (a & b, b & a), "structural", False),
    GenSpec("c_or", "c∨", 2, lambda a, b: (b | a, a | b), "structural", False),
    GenSpec("dist", "d", 3, lambda a, b, c: (a & (b | c), (a & b) | c), "structural", False),
    GenSpec("distR", "d^R", 3, lambda c, b, a: ((c | b) & a, c | (b & a)), "structural", True),
    GenSpec("delta_and", "Δ∧", 2, lambda b, a: (a, a & (~b | b)), "unit", False),
    GenSpec("sigma_or", "Σ∨", 2, lambda b, a: ((b & ~b) | a, a), "unit", False),
    GenSpec("sigma_and", "Σ∧", 2, lambda b, a: (a, (~b | b) & a), "unit", True),
    GenSpec("delta_or", "Δ∨", 2, lambda b, a: (a | (b & ~b), a), "unit", True),
    GenSpec("delta_and_p", "Δ∧′", 2, lambda b, a: (a, a & (b | ~b)), "unit", True),
    GenSpec("sigma_or_p", "Σ∨′", 2, lambda b, a: ((~b & b) | a, a), "unit", True),
    GenSpec("sigma_and_p", "Σ∧′", 2, lambda b, a: (a, (b | ~b) & a), "unit", True),
    GenSpec("delta_or_p", "Δ∨′", 2, lambda b, a: (a | (~b & b), a), "unit", True),
    GenSpec("neg_elim", "n→", 1, lambda a: (~~a, a), "negation", True),
    GenSpec("neg_intro", "n←", 1, lambda a: (a, ~~a), "negation", True),
    GenSpec("dm_and_r", "r∧→", 2, lambda a, b: (~(a & b), ~a | ~b), "negation", True),
    GenSpec("dm_and_l", "r∧←", 2, lambda a, b: (~a | ~b, ~(a & b)), "negation", True),
    GenSpec("dm_or_r", "r∨→", 2, lambda a, b: (~(a | b), ~a & ~b), "negation", True),
    GenSpec("dm_or_l", "r∨←", 2, lambda a, b: (~a & ~b, ~(a | b)), "negation", True),
    GenSpec("mix", "m", 2, lambda a, b: (a & b, a | b), "mix", False),
]

GENERATORS: dict[str, GenSpec] = {s.name: s for s in _SPECS}


# -- constructors ---------------------------------------------------------

def gen(name: str, *args: Formula) -> Gen:
    return Gen(name, tuple(args))


def ident(a): return gen("id", a)
def assoc_r(op, a, b, c): return gen("assoc_and_r" if op is AND else "assoc_or_r", a, b, c)
def assoc_l(op, a, b, c): return gen("assoc_and_l" if op is AND else "assoc_or_l", a, b, c)
def c_and(a, b): return gen("c_and", a, b)
def c_or(a, b): return gen("c_or", a, b)
def dist(a, b, c): return gen("dist", a, b, c)
def dist_r(c, b, a): return gen("distR", c, b, a)
def delta_and(b, a): return gen("delta_and", b, a)
def sigma_or(b, a): return gen("sigma_or", b, a)
def sigma_and(b, a): return gen("sigma_and", b, a)
def delta_or(b, a): return gen("delta_or", b, a)
def delta_and_p(b, a): return gen("delta_and_p", b, a)
def sigma_or_p(b, a): return gen("sigma_or_p", b, a)
def sigma_and_p(b, a): return gen("sigma_and_p", b, a)
def delta_or_p(b, a): return gen("delta_or_p", b, a)
def neg_elim(a): return gen("neg_elim", a)
def neg_intro(a): return gen("neg_intro", a)
def dm_and_r(a, b): return gen("dm_and_r", a, b)
def dm_and_l(a, b): return gen("dm_and_l", a, b)
def dm_or_r(a, b): return gen("dm_or_r", a, b)
def dm_or_l(a, b): return gen("dm_or_l", a, b)
def mix(a, b): return gen("mix", a, b)


def tensor(op: Conn, f: ArrowTerm, g: ArrowTerm) -> Tensor:
    return Tensor(op, f, g)


def comp(*factors: ArrowTerm) -> ArrowTerm:
    """``comp(f, g, h)`` is f∘(g∘h); the last factor runs first."""
    if not factors:
        raise ValueError("comp needs at least one factor")
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = Comp(f, out)
    return out


# -- typing ---------------------------------------------------------------

def typeof(f: ArrowTerm) -> ArrowType:
    """Type of ``f``; raises :class:`CompositionError` on a bad composition."""
    return _typeof(f, ())


def _typeof(f: ArrowTerm, path: tuple[str, ...]) -> ArrowType:
    cached = f.__dict__.get("_type")
    if cached is not None:
        return cached
    if isinstance(f, Gen):
        t = ArrowType(*f.spec.typing(*f.args))
    elif isinstance(f, Comp):
        lower = _typeof(f.right, path + ("right",))
        upper = _typeof(f.left, path + ("left",))
        if lower.target != upper.source:
            raise CompositionError(path, upper.source, lower.target)
        t = ArrowType(lower.source, upper.target)
    elif isinstance(f, Tensor):
        a = _typeof(f.left, path + ("left",))
        b = _typeof(f.right, path + ("right",))
        t = ArrowType(_bin(f.op, a.source, b.source), _bin(f.op, a.target, b.target))
    else:
        t = f.arrow_type()  # pattern variables carry their declared type
    f.__dict__["_type"] = t
    return t


def source(f: ArrowTerm) -> Formula:
    return typeof(f).source


def target(f: ArrowTerm) -> Formula:
    return typeof(f).target


def is_well_typed(f: ArrowTerm) -> bool:
    try:
        typeof(f)
    except CompositionError:
        return False
    return True


# -- traversal ------------------------------------------------------------

def leaves(f: ArrowTerm) -> Iterator[Gen]:
    stack = [f]
    while stack:
        x = stack.pop()
        if isinstance(x, Gen):
            yield x
        elif isinstance(x, (Comp, Tensor)):
            stack.append(x.right)
            stack.append(x.left)


def size(f: ArrowTerm) -> int:
    """Number of generator leaves."""
    return sum(1 for _ in leaves(f))


# -- theories -------------------------------------------------------------

def theory_violation(f: ArrowTerm, theory: Theory) -> str | None:
    """First reason ``f`` is not a term of ``theory``, or None."""
    for g in leaves(f):
        fam = g.spec.family
        label = theory.label
        if fam == "mix" and not theory.has_mix:
            return f"{g.name} is not available in {label}"
        if fam in ("unit", "negation") and not theory.has_units:
            return f"{g.name} is not available in {label}"
        if fam == "negation" and theory.negation != "full":
            return f"{g.name} needs unrestricted negation, not available in {label}"
        if fam == "unit" and theory.negation == "atomic" and not isinstance(g.args[0], Atom):
            return f"{g.name} has crown {print_formula(g.args[0])}; {label} requires a letter"
        for a in g.args:
            if not check_language(a, theory):
                return f"index {print_formula(a)} of {g.name} is outside the language of {label}"
    return None


def check_theory(f: ArrowTerm, theory: Theory) -> bool:
    return theory_violation(f, theory) is None


# -- derived generators ---------------------------------------------------

def expand_derived(f: ArrowTerm) -> ArrowTerm:
    """Replace every derived generator by its defining primitive term."""
    if isinstance(f, Gen):
        if not f.spec.derived:
            return f
        return _expand_gen(f.name, f.args)
    if isinstance(f, Comp):
        return Comp(expand_derived(f.left), expand_derived(f.right))
    if isinstance(f, Tensor):
        return Tensor(f.op, expand_derived(f.left), expand_derived(f.right))
    return f


@lru_cache(maxsize=4096)
def _expand_gen(name: str, args: tuple[Formula, ...]) -> ArrowTerm:
    return expand_derived(DEFINITIONS[name](*args))


def _dist_r(c, b, a):
    return comp(c_or(c, b & a), c_and(a, b) | ident(c), dist(a, b, c),
                ident(a) & c_or(b, c), c_and(c | b, a))


def _dm_and_r(a, b):
    inner = comp(ident(a & b) | c_or(~a, ~b), assoc_l(OR, a & b, ~b, ~a),
                 comp(dist(a, b, ~b), delta_and_p(b, a)) | ident(~a))
    return comp(sigma_or_p(a & b, ~a | ~b), dist(~(a & b), a & b, ~a | ~b),
                ident(~(a & b)) & inner, delta_and_p(a, ~(a & b)))


def _dm_and_l(a, b):
    left = comp(comp(delta_or_p(b, ~a), dist_r(~a, ~b, b)) & ident(a),
                assoc_r(AND, ~a | ~b, b, a), ident(~a | ~b) & c_and(a, b))
    return comp(sigma_or_p(a, ~(a & b)), left | ident(~(a & b)),
                dist(~a | ~b, a & b, ~(a & b)), delta_and_p(a & b, ~a | ~b))


def _dm_or_r(a, b):
    inner = comp(c_or(a, b) | ident(~a & ~b), assoc_r(OR, b, a, ~a & ~b),
                 ident(b) | comp(dist_r(a, ~a, ~b), sigma_and_p(a, ~b)))
    return comp(sigma_or_p(a | b, ~a & ~b), dist(~(a | b), a | b, ~a & ~b),
                ident(~(a | b)) & inner, delta_and_p(b, ~(a | b)))


def _dm_or_l(a, b):
    left = comp(ident(~b) & comp(sigma_or_p(a, b), dist(~a, a, b)),
                assoc_l(AND, ~b, ~a, a | b), c_and(~a, ~b) & ident(a | b))
    return comp(sigma_or_p(b, ~(a | b)), left | ident(~(a | b)),
                dist(~a & ~b, a | b, ~(a | b)), delta_and_p(a | b, ~a & ~b))


DEFINITIONS: dict[str, Callable[..., ArrowTerm]] = {
    "distR": _dist_r,
    "sigma_and": lambda b, a: comp(c_and(a, ~b | b), delta_and(b, a)),
    "delta_or": lambda b, a: comp(sigma_or(b, a), c_or(b & ~b, a)),
    "delta_and_p": lambda b, a: comp(ident(a) & c_or(b, ~b), delta_and(b, a)),
    "sigma_or_p": lambda b, a: comp(sigma_or(b, a), c_and(~b, b) | ident(a)),
    "sigma_and_p": lambda b, a: comp(c_and(a, b | ~b), delta_and_p(b, a)),
    "delta_or_p": lambda b, a: comp(sigma_or_p(b, a), c_or(~b & b, a)),
    "neg_elim": lambda a: comp(sigma_or_p(~a, a), dist(~~a, ~a, a), delta_and(a, ~~a)),
    "neg_intro": lambda a: comp(sigma_or(a, ~~a), dist(a, ~a, ~~a), delta_and_p(~a, a)),
    "dm_and_r": _dm_and_r,
    "dm_and_l": _dm_and_l,
    "dm_or_r": _dm_or_r,
    "dm_or_l": _dm_or_l,
}


def pretty_arrow(f: ArrowTerm) -> str:
    """Subscript notation such as ``Σ∨_{q,p∧q}``."""
    if isinstance(f, Gen):
        index = ",".join(pretty(a) for a in f.args)
        return f.spec.symbol + ("_" + index if len(index) == 1 else "_{" + index + "}")
    if isinstance(f, Comp):
        left, right = pretty_arrow(f.left), pretty_arrow(f.right)
        if isinstance(f.left, (Comp, Tensor)):
            left = f"({left})"
        if isinstance(f.right, Tensor):
            right = f"({right})"
        return f"{left}∘{right}"
    if isinstance(f, Tensor):
        parts = []
        for side in (f.left, f.right):
            s = pretty_arrow(side)
            parts.append(f"({s})" if isinstance(side, (Comp, Tensor)) else s)
        return parts[0] + f.op.symbol + parts[1]
    return repr(f)
