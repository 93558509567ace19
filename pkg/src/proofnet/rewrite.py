"""Equation schemata, their instantiation, and developed normal forms.

Schemata are pattern terms over formula variables (:class:`FVar`) and arrow
variables (:class:`AVar`).  An arrow variable carries its declared type, so
binding it also binds the formula variables in that type.

    >>> e = schema_named("(c∧c∧)")
    >>> lhs, rhs = instantiate(e, Substitution({"A": Atom("p"), "B": Atom("q")}))
    >>> print(lhs, "=", rhs)
    c_and(q, p) . c_and(p, q) = id(p /\\ q)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .arrows import (AND, OR, ArrowTerm, ArrowType, Comp, Gen, Tensor, assoc_l, assoc_r,
                     c_and, c_or, comp, delta_and, delta_and_p, delta_or, dist, dist_r,
                     dm_and_l, dm_and_r, dm_or_l, dm_or_r, expand_derived, gen, ident, mix,
                     neg_elim, neg_intro, pretty_arrow, sigma_and, sigma_and_p, sigma_or,
                     sigma_or_p, theory_violation, typeof)
from .errors import SubstitutionError
from .formula import Atom, Binary, Conj, Disj, Formula, Neg, Theory, binary


@dataclass(frozen=True, repr=False)
class FVar(Formula):
    """Formula variable; ``letter`` variables only match letters."""

    name: str
    letter: bool = False

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True, repr=False)
class AVar(ArrowTerm):
    """Arrow variable with a declared type."""

    name: str
    source: Formula
    target: Formula

    def arrow_type(self) -> ArrowType:
        return ArrowType(self.source, self.target)

    def __repr__(self) -> str:
        return self.name


ALL = frozenset(Theory)
UNITS = frozenset({Theory.PN, Theory.MPN, Theory.PN_NEG, Theory.MPN_NEG})
FULL = frozenset({Theory.PN_NEG, Theory.MPN_NEG})
MIX = frozenset({Theory.MDS, Theory.MPN, Theory.MPN_NEG})


@dataclass(frozen=True)
class EquationSchema:
    name: str
    lhs: ArrowTerm
    rhs: ArrowTerm
    theories: frozenset
    # further terms equal to both sides, e.g. the second identity law
    extra: tuple[ArrowTerm, ...] = ()

    def __post_init__(self):
        t = typeof(self.lhs)
        for side in (self.rhs,) + self.extra:
            if typeof(side) != t:
                raise ValueError(f"schema {self.name}: sides have types {t} and {typeof(side)}")

    @property
    def sides(self) -> tuple[ArrowTerm, ...]:
        return (self.lhs, self.rhs) + self.extra

    @property
    def arrow_vars(self) -> list[AVar]:
        """Arrow variables in order of first occurrence along application order."""
        seen: dict[str, AVar] = {}
        for side in self.sides:
            for v in _arrow_vars(side):
                seen.setdefault(v.name, v)
        return list(seen.values())

    @property
    def formula_vars(self) -> list[FVar]:
        seen: dict[str, FVar] = {}
        for side in self.sides:
            for v in _formula_vars_of_term(side):
                seen.setdefault(v.name, v)
        return sorted(seen.values(), key=lambda v: v.name)

    @property
    def crown_vars(self) -> set[str]:
        """Formula variables standing directly as a crown index."""
        out = set()
        for side in self.sides:
            for g in _gens(side):
                if g.spec.family == "unit" and isinstance(g.args[0], FVar):
                    out.add(g.args[0].name)
        return out

    def __str__(self) -> str:
        return " = ".join(pretty_arrow(s) for s in self.sides)


@dataclass
class Substitution:
    formulas: dict[str, Formula] = field(default_factory=dict)
    arrows: dict[str, ArrowTerm] = field(default_factory=dict)


# -- pattern traversal ----------------------------------------------------

def _gens(f: ArrowTerm) -> Iterator[Gen]:
    if isinstance(f, Gen):
        yield f
    elif isinstance(f, (Comp, Tensor)):
        yield from _gens(f.left)
        yield from _gens(f.right)


def _arrow_vars(f: ArrowTerm) -> Iterator[AVar]:
    # right operand of a composition runs first
    if isinstance(f, AVar):
        yield f
    elif isinstance(f, Comp):
        yield from _arrow_vars(f.right)
        yield from _arrow_vars(f.left)
    elif isinstance(f, Tensor):
        yield from _arrow_vars(f.left)
        yield from _arrow_vars(f.right)


def pattern_vars(a: Formula) -> Iterator[FVar]:
    if isinstance(a, FVar):
        yield a
    elif isinstance(a, Neg):
        yield from pattern_vars(a.body)
    elif isinstance(a, Binary):
        yield from pattern_vars(a.left)
        yield from pattern_vars(a.right)


def _formula_vars_of_term(f: ArrowTerm) -> Iterator[FVar]:
    if isinstance(f, Gen):
        for a in f.args:
            yield from pattern_vars(a)
    elif isinstance(f, AVar):
        yield from pattern_vars(f.source)
        yield from pattern_vars(f.target)
    elif isinstance(f, (Comp, Tensor)):
        yield from _formula_vars_of_term(f.left)
        yield from _formula_vars_of_term(f.right)


# -- substitution and matching --------------------------------------------

def subst_formula(a: Formula, env: dict[str, Formula]) -> Formula:
    if isinstance(a, FVar):
        if a.name not in env:
            raise SubstitutionError(f"no value for formula variable {a.name}")
        return env[a.name]
    if isinstance(a, Neg):
        return Neg(subst_formula(a.body, env))
    if isinstance(a, Binary):
        return binary(a.op, subst_formula(a.left, env), subst_formula(a.right, env))
    return a


def subst_arrow(f: ArrowTerm, formulas: dict[str, Formula], arrows: dict[str, ArrowTerm]) -> ArrowTerm:
    if isinstance(f, AVar):
        if f.name not in arrows:
            raise SubstitutionError(f"no value for arrow variable {f.name}")
        return arrows[f.name]
    if isinstance(f, Gen):
        return Gen(f.name, tuple(subst_formula(a, formulas) for a in f.args))
    if isinstance(f, Comp):
        return Comp(subst_arrow(f.left, formulas, arrows), subst_arrow(f.right, formulas, arrows))
    return Tensor(f.op, subst_arrow(f.left, formulas, arrows), subst_arrow(f.right, formulas, arrows))


def match_formula(pattern: Formula, a: Formula, env: dict[str, Formula]) -> bool:
    """Extend ``env`` so that ``pattern`` becomes ``a``; False if impossible."""
    if isinstance(pattern, FVar):
        bound = env.get(pattern.name)
        if bound is not None:
            return bound == a
        if pattern.letter and not isinstance(a, Atom):
            return False
        env[pattern.name] = a
        return True
    if isinstance(pattern, Atom):
        return pattern == a
    if isinstance(pattern, Neg):
        return isinstance(a, Neg) and match_formula(pattern.body, a.body, env)
    return (type(a) is type(pattern)
            and match_formula(pattern.left, a.left, env)
            and match_formula(pattern.right, a.right, env))


def match_arrow(pattern: ArrowTerm, f: ArrowTerm, sub: Substitution) -> bool:
    if isinstance(pattern, AVar):
        bound = sub.arrows.get(pattern.name)
        if bound is not None:
            return bound == f
        sub.arrows[pattern.name] = f
        return True
    if isinstance(pattern, Gen):
        return (isinstance(f, Gen) and f.name == pattern.name
                and all(match_formula(p, a, sub.formulas) for p, a in zip(pattern.args, f.args)))
    if isinstance(pattern, Comp):
        return (isinstance(f, Comp) and match_arrow(pattern.left, f.left, sub)
                and match_arrow(pattern.right, f.right, sub))
    return (isinstance(f, Tensor) and f.op is pattern.op
            and match_arrow(pattern.left, f.left, sub) and match_arrow(pattern.right, f.right, sub))


def _bind_arrow_types(schema: EquationSchema, sub: Substitution) -> None:
    for v in schema.arrow_vars:
        if v.name not in sub.arrows:
            raise SubstitutionError(f"{schema.name}: no value for arrow variable {v.name}")
        t = typeof(sub.arrows[v.name])
        if not (match_formula(v.source, t.source, sub.formulas)
                and match_formula(v.target, t.target, sub.formulas)):
            raise SubstitutionError(
                f"{schema.name}: {v.name} must have type {v.source} ⊢ {v.target}, got {t}")


def instantiate_all(schema: EquationSchema, sub: Substitution) -> list[ArrowTerm]:
    """Closed instances of every side of ``schema``."""
    sub = Substitution(dict(sub.formulas), dict(sub.arrows))
    _bind_arrow_types(schema, sub)
    for v in schema.formula_vars:
        value = sub.formulas.get(v.name)
        if value is None:
            raise SubstitutionError(f"{schema.name}: no value for formula variable {v.name}")
        if v.letter and not isinstance(value, Atom):
            raise SubstitutionError(f"{schema.name}: {v.name} must be a letter")
    sides = [subst_arrow(s, sub.formulas, sub.arrows) for s in schema.sides]
    t = typeof(sides[0])
    for s in sides[1:]:
        if typeof(s) != t:
            raise SubstitutionError(f"{schema.name}: instance sides have different types")
    return sides


def instantiate(schema: EquationSchema, sub: Substitution) -> tuple[ArrowTerm, ArrowTerm]:
    sides = instantiate_all(schema, sub)
    return sides[0], sides[1]


def instance_violation(sides: list[ArrowTerm], theory: Theory) -> str | None:
    for s in sides:
        problem = theory_violation(s, theory)
        if problem:
            return problem
    return None


def rewrite_root(term: ArrowTerm, schema: EquationSchema, source_side: int,
                 target_side: int) -> ArrowTerm | None:
    """Replace ``term`` by the ``target_side`` instance if it matches ``source_side``.

    Returns None when the pattern does not match or the target side mentions a
    variable left unbound by the match and the arrow types.
    """
    sub = Substitution()
    if not match_arrow(schema.sides[source_side], term, sub):
        return None
    try:
        sides = instantiate_all(schema, sub)
    except SubstitutionError:
        return None
    if sides[source_side] != term:
        return None
    return sides[target_side]


# -- catalog --------------------------------------------------------------

A, B, C, D, E, F = (FVar(n) for n in "ABCDEF")
P = FVar("p", letter=True)


def _f(name, src, tgt):
    return AVar(name, src, tgt)


def _nat_vars():
    return _f("f", A, D), _f("g", B, E), _f("h", C, F)


def _bxi(op):
    return Conj if op is AND else Disj


def _ds_axioms() -> list[EquationSchema]:
    f, g, h = _nat_vars()
    out = []
    fab = _f("f", A, B)
    out.append(EquationSchema("(cat 1)", Comp(fab, ident(A)), fab, ALL, (Comp(ident(B), fab),)))
    f1, g1, h1 = _f("f", A, B), _f("g", B, C), _f("h", C, D)
    out.append(EquationSchema("(cat 2)", Comp(h1, Comp(g1, f1)), Comp(Comp(h1, g1), f1), ALL))
    x = "∧∨"
    for op in (AND, OR):
        out.append(EquationSchema(f"({x[op is OR]}1)", Tensor(op, ident(A), ident(B)),
                                  ident(_bxi(op)(A, B)), ALL))
    for op in (AND, OR):
        f1, g1 = _f("f1", A, B), _f("g1", B, C)
        f2, g2 = _f("f2", D, E), _f("g2", E, F)
        out.append(EquationSchema(f"({x[op is OR]}2)",
                                  Tensor(op, Comp(g1, f1), Comp(g2, f2)),
                                  Comp(Tensor(op, g1, g2), Tensor(op, f1, f2)), ALL))
    for op in (AND, OR):
        s = x[op is OR]
        out.append(EquationSchema(
            f"(b{s}→ nat)",
            Comp(Tensor(op, Tensor(op, f, g), h), assoc_r(op, A, B, C)),
            Comp(assoc_r(op, D, E, F), Tensor(op, f, Tensor(op, g, h))), ALL))
    out.append(EquationSchema("(c∧ nat)", Comp(g & f, c_and(A, B)), Comp(c_and(D, E), f & g), ALL))
    out.append(EquationSchema("(c∨ nat)", Comp(g | f, c_or(B, A)), Comp(c_or(E, D), f | g), ALL))
    out.append(EquationSchema("(d nat)", Comp((f & g) | h, dist(A, B, C)),
                              Comp(dist(D, E, F), f & (g | h)), ALL))
    for op in (AND, OR):
        s = x[op is OR]
        out.append(EquationSchema(f"(b{s}b{s}) ←∘→", Comp(assoc_l(op, A, B, C), assoc_r(op, A, B, C)),
                                  ident(_bxi(op)(A, _bxi(op)(B, C))), ALL))
        out.append(EquationSchema(f"(b{s}b{s}) →∘←", Comp(assoc_r(op, A, B, C), assoc_l(op, A, B, C)),
                                  ident(_bxi(op)(_bxi(op)(A, B), C)), ALL))
    for op in (AND, OR):
        s = x[op is OR]
        k = _bxi(op)
        out.append(EquationSchema(
            f"(b{s}5)",
            Comp(assoc_l(op, A, B, k(C, D)), assoc_l(op, k(A, B), C, D)),
            comp(Tensor(op, ident(A), assoc_l(op, B, C, D)), assoc_l(op, A, k(B, C), D),
                 Tensor(op, assoc_l(op, A, B, C), ident(D))), ALL))
    out.append(EquationSchema("(c∧c∧)", Comp(c_and(B, A), c_and(A, B)), ident(A & B), ALL))
    out.append(EquationSchema("(c∨c∨)", Comp(c_or(A, B), c_or(B, A)), ident(A | B), ALL))
    out.append(EquationSchema(
        "(b∧c∧)",
        comp(ident(B) & c_and(C, A), assoc_l(AND, B, C, A), c_and(A, B & C),
             assoc_l(AND, A, B, C), c_and(B, A) & ident(C)),
        assoc_l(AND, B, A, C), ALL))
    out.append(EquationSchema(
        "(b∨c∨)",
        comp(ident(B) | c_or(A, C), assoc_l(OR, B, C, A), c_or(B | C, A),
             assoc_l(OR, A, B, C), c_or(A, B) | ident(C)),
        assoc_l(OR, B, A, C), ALL))
    out.append(EquationSchema(
        "(d∧)",
        Comp(assoc_l(AND, A, B, C) | ident(D), dist(A & B, C, D)),
        comp(dist(A, B & C, D), ident(A) & dist(B, C, D), assoc_l(AND, A, B, C | D)), ALL))
    out.append(EquationSchema(
        "(d∨)",
        Comp(dist(D, C, B | A), ident(D) & assoc_l(OR, C, B, A)),
        comp(assoc_l(OR, D & C, B, A), dist(D, C, B) | ident(A), dist(D, C | B, A)), ALL))
    out.append(EquationSchema(
        "(db∧)",
        Comp(dist_r(A & B, C, D), dist(A, B, C) & ident(D)),
        comp(dist(A, B, C & D), ident(A) & dist_r(B, C, D), assoc_l(AND, A, B | C, D)), ALL))
    # an older variant of (db∨) follows from this one together with (b∨b∨)
    out.append(EquationSchema(
        "(db∨)",
        Comp(ident(D) | dist(C, B, A), dist_r(D, C, B | A)),
        comp(assoc_l(OR, D, C & B, A), dist_r(D, C, B) | ident(A), dist(D | C, B, A)), ALL))
    return out


def _pn_axioms() -> list[EquationSchema]:
    f = _f("f", A, D)
    return [
        EquationSchema("(Δ∧ nat)", Comp(f & ident(~B | B), delta_and(B, A)),
                       Comp(delta_and(B, D), f), UNITS),
        EquationSchema("(Σ∨ nat)", Comp(f, sigma_or(B, A)),
                       Comp(sigma_or(B, D), ident(B & ~B) | f), UNITS),
        EquationSchema("(b∧Δ∧)", Comp(assoc_l(AND, A, B, ~C | C), delta_and(C, A & B)),
                       ident(A) & delta_and(C, B), UNITS),
        EquationSchema("(b∨Σ∨)", Comp(sigma_or(C, B | A), assoc_l(OR, C & ~C, B, A)),
                       sigma_or(C, B) | ident(A), UNITS),
        EquationSchema("(dΣ∧)", Comp(dist(~A | A, B, C), sigma_and(A, B | C)),
                       sigma_and(A, B) | ident(C), UNITS),
        EquationSchema("(dΔ∨)", Comp(delta_or(A, C & B), dist(C, B, A & ~A)),
                       ident(C) & delta_or(A, B), UNITS),
        EquationSchema("(Σ∨Δ∧)", comp(sigma_or(A, A), dist(A, ~A, A), delta_and(A, A)),
                       ident(A), UNITS),
        EquationSchema("(Σ∨′Δ∧′)", comp(sigma_or_p(A, ~A), dist(~A, A, ~A), delta_and_p(A, ~A)),
                       ident(~A), UNITS),
    ]


def _mix_axioms() -> list[EquationSchema]:
    f, g = _f("f", A, D), _f("g", B, E)
    return [
        EquationSchema("(m nat)", Comp(f | g, mix(A, B)), Comp(mix(D, E), f & g), MIX),
        EquationSchema("(b∧m)", Comp(mix(A & B, C), assoc_r(AND, A, B, C)),
                       Comp(dist(A, B, C), ident(A) & mix(B, C)), MIX),
        EquationSchema("(b∨m)", Comp(assoc_r(OR, C, B, A), mix(C, B | A)),
                       Comp(mix(C, B) | ident(A), dist(C, B, A)), MIX),
        EquationSchema("(cm)", Comp(mix(B, A), c_and(A, B)), Comp(c_or(B, A), mix(A, B)), MIX),
    ]


_PRIMED = {"delta_and": "delta_and_p", "sigma_or": "sigma_or_p", "sigma_and": "sigma_and_p",
           "delta_or": "delta_or_p"}


def _prime_formula(a: Formula) -> Formula:
    # ¬X∨X becomes X∨¬X and X∧¬X becomes ¬X∧X
    if isinstance(a, Neg):
        return Neg(_prime_formula(a.body))
    if isinstance(a, Binary):
        if isinstance(a, Disj) and a.left == Neg(a.right):
            return Disj(a.right, a.left)
        if isinstance(a, Conj) and a.right == Neg(a.left):
            return Conj(a.right, a.left)
        return binary(a.op, _prime_formula(a.left), _prime_formula(a.right))
    return a


def _prime_term(f: ArrowTerm) -> ArrowTerm:
    if isinstance(f, Gen):
        return Gen(_PRIMED.get(f.name, f.name), tuple(_prime_formula(a) for a in f.args))
    if isinstance(f, AVar):
        return AVar(f.name, _prime_formula(f.source), _prime_formula(f.target))
    if isinstance(f, Comp):
        return Comp(_prime_term(f.left), _prime_term(f.right))
    return Tensor(f.op, _prime_term(f.left), _prime_term(f.right))


def primed(schema: EquationSchema, theories=UNITS) -> EquationSchema:
    """The analogue with every Δ/Σ arrow replaced by its primed variant."""
    name = schema.name
    for old, new in (("Δ∧", "Δ∧′"), ("Σ∨", "Σ∨′"), ("Σ∧", "Σ∧′"), ("Δ∨", "Δ∨′")):
        name = name.replace(old, new)
    return EquationSchema(name, _prime_term(schema.lhs), _prime_term(schema.rhs), theories,
                          tuple(_prime_term(e) for e in schema.extra))


def _ds_theorems() -> list[EquationSchema]:
    f, g, h = _nat_vars()
    out = []
    for op in (AND, OR):
        s = "∧∨"[op is OR]
        out.append(EquationSchema(
            f"(b{s}← nat)",
            Comp(Tensor(op, f, Tensor(op, g, h)), assoc_l(op, A, B, C)),
            Comp(assoc_l(op, D, E, F), Tensor(op, Tensor(op, f, g), h)), ALL))
    out.append(EquationSchema("(d^R nat)", Comp(h | (g & f), dist_r(C, B, A)),
                              Comp(dist_r(F, E, D), (h | g) & f), ALL))
    return out


def _pn_theorems() -> list[EquationSchema]:
    f = _f("f", A, D)
    nat = [
        EquationSchema("(Σ∧ nat)", Comp(ident(~B | B) & f, sigma_and(B, A)),
                       Comp(sigma_and(B, D), f), UNITS),
        EquationSchema("(Δ∨ nat)", Comp(f, delta_or(B, A)),
                       Comp(delta_or(B, D), f | ident(B & ~B)), UNITS),
    ]
    axioms = {e.name: e for e in _pn_axioms()}
    derived = [
        EquationSchema("(b∧Δ∧Σ∧)", Comp(assoc_l(AND, A, ~B | B, C), delta_and(B, A) & ident(C)),
                       ident(A) & sigma_and(B, C), UNITS),
        EquationSchema("(b∧Σ∧)", Comp(assoc_r(AND, ~C | C, B, A), sigma_and(C, B & A)),
                       sigma_and(C, B) & ident(A), UNITS),
        EquationSchema("(b∨Δ∨Σ∨)", Comp(delta_or(B, A) | ident(C), assoc_r(OR, A, B & ~B, C)),
                       ident(A) | sigma_or(B, C), UNITS),
        EquationSchema("(b∨Δ∨)", Comp(delta_or(C, A | B), assoc_r(OR, A, B, C & ~C)),
                       ident(A) | delta_or(C, B), UNITS),
        EquationSchema("(d^RΔ∧)", Comp(dist_r(C, B, ~A | A), delta_and(A, C | B)),
                       ident(C) | delta_and(A, B), UNITS),
        EquationSchema("(d^RΣ∨)", Comp(sigma_or(A, B & C), dist_r(A & ~A, B, C)),
                       sigma_or(A, B) & ident(C), UNITS),
    ]
    by_name = {e.name: e for e in derived}
    out = nat + derived
    out += [primed(axioms["(Δ∧ nat)"]), primed(axioms["(Σ∨ nat)"])]
    out += [primed(e) for e in nat]
    for name in ("(b∧Δ∧)", "(dΣ∧)", "(dΔ∨)", "(b∨Σ∨)"):
        out.append(primed(axioms[name]))
    for name in ("(b∧Δ∧Σ∧)", "(b∧Σ∧)", "(b∨Δ∨Σ∨)", "(b∨Δ∨)", "(d^RΔ∧)", "(d^RΣ∨)"):
        out.append(primed(by_name[name]))
    out.append(EquationSchema("(Δ∨′Σ∧′)", comp(gen("delta_or_p", A, A), dist_r(A, ~A, A),
                                                 sigma_and_p(A, A)), ident(A), UNITS))
    out.append(EquationSchema("(Δ∨Σ∧)", comp(delta_or(A, ~A), dist_r(~A, A, ~A),
                                               sigma_and(A, ~A)), ident(~A), UNITS))
    return out


def _stem_increasing() -> list[EquationSchema]:
    np_p = ~P | P
    pn_p = P & ~P
    return [
        EquationSchema("(1∧Δ∧)", ident(A) & delta_and(P, B),
                       Comp(assoc_l(AND, A, B, np_p), delta_and(P, A & B)), UNITS),
        EquationSchema("(Δ∧∧1)", delta_and(P, B) & ident(A),
                       comp(c_and(A, B & np_p), assoc_l(AND, A, B, np_p),
                            c_and(B, A) & ident(np_p), delta_and(P, B & A)), UNITS),
        EquationSchema("(1∨Δ∧)", ident(A) | delta_and(P, B),
                       Comp(dist_r(A, B, np_p), delta_and(P, A | B)), UNITS),
        EquationSchema("(Δ∧∨1)", delta_and(P, B) | ident(A),
                       comp(c_or(B & np_p, A), dist_r(A, B, np_p),
                            c_or(A, B) & ident(np_p), delta_and(P, B | A)), UNITS),
        EquationSchema("(Σ∨∨1)", sigma_or(P, B) | ident(A),
                       Comp(sigma_or(P, B | A), assoc_l(OR, pn_p, B, A)), UNITS),
        EquationSchema("(1∨Σ∨)", ident(A) | sigma_or(P, B),
                       comp(sigma_or(P, A | B), ident(pn_p) | c_or(A, B),
                            assoc_l(OR, pn_p, B, A), c_or(pn_p | B, A)), UNITS),
        EquationSchema("(Σ∨∧1)", sigma_or(P, B) & ident(A),
                       Comp(sigma_or(P, B & A), dist_r(pn_p, B, A)), UNITS),
        EquationSchema("(1∧Σ∨)", ident(A) & sigma_or(P, B),
                       comp(sigma_or(P, A & B), ident(pn_p) | c_and(B, A),
                            dist_r(pn_p, B, A), c_and(A, pn_p | B)), UNITS),
    ]


def _negation_theorems() -> list[EquationSchema]:
    return [
        EquationSchema("(n→n←)", Comp(neg_elim(A), neg_intro(A)), ident(A), FULL),
        EquationSchema("(n←n→)", Comp(neg_intro(A), neg_elim(A)), ident(~~A), FULL),
        EquationSchema("(r∧→r∧←)", Comp(dm_and_r(A, B), dm_and_l(A, B)), ident(~A | ~B), FULL),
        EquationSchema("(r∧←r∧→)", Comp(dm_and_l(A, B), dm_and_r(A, B)), ident(~(A & B)), FULL),
        EquationSchema("(r∨→r∨←)", Comp(dm_or_r(A, B), dm_or_l(A, B)), ident(~A & ~B), FULL),
        EquationSchema("(r∨←r∨→)", Comp(dm_or_l(A, B), dm_or_r(A, B)), ident(~(A | B)), FULL),
        EquationSchema("(Δ∧ n)", delta_and(~B, A),
                       Comp(ident(A) & (neg_intro(B) | ident(~B)), delta_and_p(B, A)), FULL),
        EquationSchema(
            "(Δ∧ r)", delta_and(B & C, A),
            Comp(ident(A) & comp(Comp(dm_and_l(B, C), c_or(~B, ~C)) | ident(B & C),
                                 assoc_r(OR, ~C, ~B, B & C),
                                 ident(~C) | Comp(dist_r(~B, B, C), sigma_and(B, C))),
                 delta_and(C, A)), FULL),
    ]


_DS_AXIOMS = _ds_axioms()
_PN_AXIOMS = _pn_axioms()
_MIX_AXIOMS = _mix_axioms()
_THEOREMS = _ds_theorems() + _pn_theorems() + _stem_increasing() + _negation_theorems()


def axiom_catalog(theory: Theory) -> list[EquationSchema]:
    return [e for e in _DS_AXIOMS + _PN_AXIOMS + _MIX_AXIOMS if theory in e.theories]


def theorem_catalog(theory: Theory) -> list[EquationSchema]:
    return [e for e in _THEOREMS if theory in e.theories]


def schema_named(name: str) -> EquationSchema:
    for e in _DS_AXIOMS + _PN_AXIOMS + _MIX_AXIOMS + _THEOREMS:
        if e.name == name:
            return e
    raise KeyError(name)


# -- development ----------------------------------------------------------

def _factors(f: ArrowTerm) -> list[ArrowTerm]:
    """Headed factors of ``f`` in application order."""
    if isinstance(f, Gen):
        return [] if f.name == "id" else [f]
    if isinstance(f, Comp):
        return _factors(f.right) + _factors(f.left)
    left, right = typeof(f.left), typeof(f.right)
    first = [Tensor(f.op, ident(left.source), x) for x in _factors(f.right)]
    then = [Tensor(f.op, x, ident(right.target)) for x in _factors(f.left)]
    return first + then


def factor_stack(f: ArrowTerm, keep_derived: bool = False) -> list[ArrowTerm]:
    """Factors of the developed form of ``f``, first-applied first.

    The first entry is the identity on the source; every later entry is headed.
    """
    base = f if keep_derived else expand_derived(f)
    return [ident(typeof(f).source)] + _factors(base)


def develop(f: ArrowTerm, keep_derived: bool = False) -> ArrowTerm:
    """An equal term f_n∘…∘f_1 with f_1 an identity and every other factor headed.

    With ``keep_derived`` the derived generators are left as heads.
    """
    return comp(*reversed(factor_stack(f, keep_derived)))


def head_count(f: ArrowTerm) -> int | None:
    """Number of non-identity generators if ``f`` is composition-free, else None."""
    if isinstance(f, Gen):
        return 0 if f.name == "id" else 1
    if isinstance(f, Tensor):
        a, b = head_count(f.left), head_count(f.right)
        return None if a is None or b is None else a + b
    return None


def _unfold(f: ArrowTerm) -> list[ArrowTerm]:
    out = []
    while isinstance(f, Comp):
        out.append(f.left)
        f = f.right
    out.append(f)
    return out


def is_developed(f: ArrowTerm, primitive_heads: bool = False) -> bool:
    """Whether ``f`` = f_n∘(…∘f_1) with f_1 a 1-term and f_2…f_n headed.

    With ``primitive_heads`` the heads must also be primitive generators.
    """
    factors = _unfold(f)
    if head_count(factors[-1]) != 0:
        return False
    for x in factors[:-1]:
        if head_count(x) != 1:
            return False
        if primitive_heads and any(g.spec.derived for g in _gens(x)):
            return False
    return True


# -- one-step rewriting ---------------------------------------------------

def _root_key(f: ArrowTerm):
    if isinstance(f, Gen):
        return f.name
    if isinstance(f, Comp):
        return "comp"
    if isinstance(f, Tensor):
        return f.op
    return None  # an arrow variable matches anything


_ORIENTED: dict[Theory, dict] = {}


def _oriented(theory: Theory) -> dict:
    """Oriented axiom sides of ``theory`` indexed by the root of the source side."""
    if theory not in _ORIENTED:
        index: dict = {}
        for e in axiom_catalog(theory):
            for i, side in enumerate(e.sides):
                for j in range(len(e.sides)):
                    if i != j:
                        index.setdefault(_root_key(side), []).append((e, i, j))
        _ORIENTED[theory] = index
    return _ORIENTED[theory]


def subterms(f: ArrowTerm, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], ArrowTerm]]:
    """Every subterm with its path; 0 selects the left operand, 1 the right."""
    yield path, f
    if isinstance(f, (Comp, Tensor)):
        yield from subterms(f.left, path + (0,))
        yield from subterms(f.right, path + (1,))


def replace_at(f: ArrowTerm, path: tuple[int, ...], new: ArrowTerm) -> ArrowTerm:
    if not path:
        return new
    head, rest = path[0], path[1:]
    left = replace_at(f.left, rest, new) if head == 0 else f.left
    right = replace_at(f.right, rest, new) if head == 1 else f.right
    return Comp(left, right) if isinstance(f, Comp) else Tensor(f.op, left, right)


def one_step_rewrites(f: ArrowTerm, theory: Theory,
                      rng=None) -> Iterator[tuple[str, tuple[int, ...], ArrowTerm]]:
    """Every term obtained from ``f`` by one oriented axiom instance of ``theory``.

    Yields (schema name, path of the rewritten subterm, resulting term), in
    an order shuffled by ``rng`` when one is given.
    """
    index = _oriented(theory)
    candidates = [(path, sub, e, i, j) for path, sub in subterms(f)
                  for e, i, j in index.get(_root_key(sub), []) + index.get(None, [])]
    if rng is not None:
        # schema first, then position, so catch-all sides do not crowd out the rest
        by_schema: dict[str, list] = {}
        for c in candidates:
            by_schema.setdefault(c[2].name, []).append(c)
        groups = list(by_schema.values())
        rng.shuffle(groups)
        candidates = []
        for group in groups:
            rng.shuffle(group)
            candidates += group
    for path, sub, e, i, j in candidates:
        new = rewrite_root(sub, e, i, j)
        if new is not None and theory_violation(new, theory) is None:
            yield e.name, path, replace_at(f, path, new)
