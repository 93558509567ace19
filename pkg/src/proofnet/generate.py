"""Random formulas, well-typed terms and schema substitutions for fuzzing.

Every generator takes an explicit :class:`random.Random` so runs are
reproducible from a seed.
"""
from __future__ import annotations

import random

from .arrows import (AND, OR, ArrowTerm, Comp, Tensor, assoc_l, assoc_r, c_and, c_or, comp,
                     delta_and, delta_and_p, delta_or, delta_or_p, dist, dist_r, dm_and_l,
                     dm_and_r, dm_or_l, dm_or_r, ident, mix, neg_elim, neg_intro, sigma_and,
                     sigma_and_p, sigma_or, sigma_or_p, size, typeof)
from .errors import SubstitutionError
from .formula import Atom, Conj, Disj, Formula, Neg, Theory, binary, letter_count
from .rewrite import (EquationSchema, Substitution, instantiate_all,
                      match_formula, one_step_rewrites, pattern_vars, subst_formula)

LETTERS = (Atom("p"), Atom("q"), Atom("r"))
# units may not grow a source beyond this many letters
GROWTH_CAP = 14


def random_formula(rng: random.Random, theory: Theory, depth: int = 3,
                   letters=LETTERS) -> Formula:
    """A formula of the theory's language with at most ``depth`` nested connectives."""
    if depth <= 0 or rng.random() < 0.3:
        a = rng.choice(letters)
        if theory.negation != "none" and rng.random() < 0.25:
            return Neg(a)
        return a
    if theory.negation == "full" and rng.random() < 0.2:
        return Neg(random_formula(rng, theory, depth - 1, letters))
    op = rng.choice((AND, OR))
    return binary(op, random_formula(rng, theory, depth - 1, letters),
                  random_formula(rng, theory, depth - 1, letters))


def random_crown(rng: random.Random, theory: Theory, depth: int = 1) -> Formula:
    if theory.negation == "full":
        return random_formula(rng, theory, depth)
    return rng.choice(LETTERS)


def random_source(rng: random.Random, theory: Theory, depth: int = 3) -> Formula:
    """A random formula that sometimes offers a counit redex at the root."""
    a = random_formula(rng, theory, depth)
    if theory.has_units and rng.random() < 0.3:
        b = random_crown(rng, theory)
        shape = rng.randrange(4)
        if shape == 0:
            return (b & ~b) | a
        if shape == 1:
            return (~b & b) | a
        if shape == 2:
            return a | (b & ~b)
        return a | (~b & b)
    return a


def _snake(a: Formula) -> ArrowTerm:
    return comp(sigma_or(a, a), dist(a, ~a, a), delta_and(a, a))


def _primitives(rng: random.Random, theory: Theory, a: Formula) -> list[ArrowTerm]:
    """Terms with a single head applicable at the root of ``a``."""
    out: list[ArrowTerm] = []
    if isinstance(a, (Conj, Disj)):
        op, x, y = a.op, a.left, a.right
        if type(y) is type(a):
            out.append(assoc_r(op, x, y.left, y.right))
        if type(x) is type(a):
            out.append(assoc_l(op, x.left, x.right, y))
        out.append(c_and(x, y) if op is AND else c_or(y, x))
        if op is AND and isinstance(y, Disj):
            out.append(dist(x, y.left, y.right))
        if op is AND and isinstance(x, Disj):
            out.append(dist_r(x.left, x.right, y))
        if op is AND and theory.has_mix:
            out.append(mix(x, y))
    if theory.has_units:
        atomic = theory.negation == "atomic"
        if isinstance(a, Disj):
            x, y = a.left, a.right
            for counit, crown_side, other in ((sigma_or, x, y), (delta_or, y, x)):
                if isinstance(crown_side, Conj):
                    b, nb = crown_side.left, crown_side.right
                    if nb == Neg(b) and not (atomic and not isinstance(b, Atom)):
                        out.append(counit(b, other))
            for counit, crown_side, other in ((sigma_or_p, x, y), (delta_or_p, y, x)):
                if isinstance(crown_side, Conj):
                    nb, b = crown_side.left, crown_side.right
                    if nb == Neg(b) and not (atomic and not isinstance(b, Atom)):
                        out.append(counit(b, other))
        if letter_count(a) + 2 <= GROWTH_CAP:
            unit = rng.choice((delta_and, delta_and_p, sigma_and, sigma_and_p))
            out.append(unit(random_crown(rng, theory), a))
        if not atomic or isinstance(a, Atom):
            out.append(_snake(a))
    if theory.negation == "full":
        if letter_count(a) <= GROWTH_CAP and not isinstance(a, Neg):
            out.append(neg_intro(a))
        if isinstance(a, Neg):
            b = a.body
            if isinstance(b, Neg):
                out.append(neg_elim(b.body))
            elif isinstance(b, Conj):
                out.append(dm_and_r(b.left, b.right))
            elif isinstance(b, Disj):
                out.append(dm_or_r(b.left, b.right))
        if isinstance(a, (Conj, Disj)) and isinstance(a.left, Neg) and isinstance(a.right, Neg):
            lower = dm_or_l if isinstance(a, Conj) else dm_and_l
            out.append(lower(a.left.body, a.right.body))
    return out


def random_term_from(rng: random.Random, theory: Theory, a: Formula, budget: int) -> ArrowTerm:
    """A well-typed term of ``theory`` with source ``a`` and at most ``budget`` heads
    (a snake counts as one)."""
    if budget <= 0:
        return ident(a)
    moves = ["prim"]
    if budget >= 2:
        moves.append("comp")
    if isinstance(a, (Conj, Disj)):
        moves.append("tensor")
    move = rng.choice(moves)
    if move == "comp":
        k = rng.randint(1, budget - 1)
        first = random_term_from(rng, theory, a, k)
        return Comp(random_term_from(rng, theory, typeof(first).target, budget - k), first)
    if move == "tensor":
        k = rng.randint(0, budget)
        return Tensor(a.op, random_term_from(rng, theory, a.left, k),
                      random_term_from(rng, theory, a.right, budget - k))
    options = _primitives(rng, theory, a)
    if not options:
        return ident(a)
    return rng.choice(options)


def random_term(rng: random.Random, theory: Theory, budget: int = 6,
                source: Formula | None = None, depth: int = 3) -> ArrowTerm:
    if source is None:
        source = random_source(rng, theory, depth)
    return random_term_from(rng, theory, source, budget)


def random_substitution(rng: random.Random, schema: EquationSchema, theory: Theory,
                        depth: int = 3, budget: int = 6, tries: int = 50) -> Substitution:
    """Values for every variable of ``schema`` drawn within ``theory``.

    Arrow variables are generated forward in application order, so a variable's
    source is fixed before its term is drawn and its target binds later ones.
    """
    crowns = schema.crown_vars
    atomic = theory.negation == "atomic"

    def fresh(name: str, letter: bool) -> Formula:
        if letter or (atomic and name in crowns):
            return rng.choice(LETTERS)
        return random_formula(rng, theory, depth)

    for _ in range(tries):
        formulas: dict[str, Formula] = {}
        arrows: dict[str, ArrowTerm] = {}
        ok = True
        for v in schema.arrow_vars:
            for fv in pattern_vars(v.source):
                if fv.name not in formulas:
                    formulas[fv.name] = fresh(fv.name, fv.letter)
            src = subst_formula(v.source, formulas)
            term = random_term_from(rng, theory, src, rng.randint(0, budget))
            if not match_formula(v.target, typeof(term).target, formulas):
                ok = False
                break
            arrows[v.name] = term
        if not ok:
            continue
        for fv in schema.formula_vars:
            if fv.name not in formulas:
                formulas[fv.name] = fresh(fv.name, fv.letter)
        return Substitution(formulas, arrows)
    raise SubstitutionError(f"{schema.name}: no substitution found in {tries} tries")


def random_instance(rng: random.Random, schema: EquationSchema, theory: Theory,
                    depth: int = 3, budget: int = 6) -> list[ArrowTerm]:
    return instantiate_all(schema, random_substitution(rng, schema, theory, depth, budget))


def random_walk(rng: random.Random, term: ArrowTerm, theory: Theory, steps: int = 20,
                max_size: int = 60) -> list[tuple[str, ArrowTerm]]:
    """Apply up to ``steps`` random oriented axiom instances; returns (schema, term) per step."""
    trail = []
    for _ in range(steps):
        step = next(((name, new) for name, _, new in one_step_rewrites(term, theory, rng)
                     if size(new) <= max_size), None)
        if step is None:
            break
        term = step[1]
        trail.append(step)
    return trail
