"""Translation of arrows with arbitrary negation into arrows with negated letters only.

:func:`f_arrow` maps a term into one whose crowns are letters, typed by
negation normal forms.  :func:`iso_i` and :func:`iso_i_inv` build the
isomorphisms between a formula and its normal form.
"""
from __future__ import annotations

from .arrows import (AND, OR, ArrowTerm, Comp, Tensor, assoc_l, assoc_r, c_and,
                     c_or, comp, delta_and, dist, dist_r, dm_and_l, dm_and_r, dm_or_l,
                     dm_or_r, expand_derived, gen, ident, neg_elim, neg_intro, sigma_or)
from .formula import Atom, Binary, Formula, Neg, nnf

f_object = nnf


def f_arrow(f: ArrowTerm) -> ArrowTerm:
    return _translate(expand_derived(f))


def f_neg_object(a: Formula) -> Formula:
    """Inclusion of letter-negated formulas among all formulas."""
    return a


def f_neg_arrow(f: ArrowTerm) -> ArrowTerm:
    """Inclusion of terms with letter crowns among all terms; F undoes it on primitives."""
    return f


def _translate(f: ArrowTerm) -> ArrowTerm:
    if isinstance(f, Comp):
        return Comp(_translate(f.left), _translate(f.right))
    if isinstance(f, Tensor):
        return Tensor(f.op, _translate(f.left), _translate(f.right))
    if f.name == "delta_and":
        crown, stem = f.args
        return unit_and(crown, nnf(stem))
    if f.name == "sigma_or":
        crown, stem = f.args
        return counit_or(crown, nnf(stem))
    return gen(f.name, *(nnf(a) for a in f.args))


def unit_and(crown: Formula, stem: Formula) -> ArrowTerm:
    """Translation of Δ∧ with the given crown over an already normal stem."""
    if isinstance(crown, Atom):
        return delta_and(crown, stem)
    if isinstance(crown, Neg):
        b = crown.body
        return comp(ident(stem) & c_or(nnf(b), nnf(crown)), unit_and(b, stem))
    b, c = crown.left, crown.right
    fb, fc, fnb, fnc = nnf(b), nnf(c), nnf(~b), nnf(~c)
    if crown.op is AND:
        inner = comp(c_or(fnb, fnc) | ident(fb & fc),
                     assoc_r(OR, fnc, fnb, fb & fc),
                     ident(fnc) | comp(dist_r(fnb, fb, fc), c_and(fc, fnb | fb), unit_and(b, fc)))
    else:
        inner = comp(c_and(fnc, fnb) | ident(fb | fc),
                     assoc_l(OR, fnc & fnb, fb, fc),
                     comp(dist(fnc, fnb, fb), unit_and(b, fnc)) | ident(fc))
    return comp(ident(stem) & inner, unit_and(c, stem))


def counit_or(crown: Formula, stem: Formula) -> ArrowTerm:
    """Translation of Σ∨ with the given crown over an already normal stem."""
    if isinstance(crown, Atom):
        return sigma_or(crown, stem)
    if isinstance(crown, Neg):
        b = crown.body
        return comp(counit_or(b, stem), c_and(nnf(crown), nnf(b)) | ident(stem))
    b, c = crown.left, crown.right
    fb, fc, fnb, fnc = nnf(b), nnf(c), nnf(~b), nnf(~c)
    if crown.op is AND:
        inner = comp(ident(fc) & comp(counit_or(b, fnc), dist(fb, fnb, fnc)),
                     assoc_l(AND, fc, fb, fnb | fnc),
                     c_and(fb, fc) & ident(fnb | fnc))
    else:
        inner = comp(comp(counit_or(b, fc), c_or(fb & fnb, fc), dist_r(fc, fb, fnb)) & ident(fnc),
                     assoc_r(AND, fc | fb, fnb, fnc),
                     c_or(fc, fb) & ident(fnb & fnc))
    return comp(counit_or(c, stem), inner | ident(stem))


def iso_i(a: Formula) -> ArrowTerm:
    """Isomorphism ``a ⊢ nnf(a)``."""
    if isinstance(a, Atom) or (isinstance(a, Neg) and isinstance(a.body, Atom)):
        return ident(a)
    if isinstance(a, Binary):
        return Tensor(a.op, iso_i(a.left), iso_i(a.right))
    b = a.body
    if isinstance(b, Neg):
        return Comp(iso_i(b.body), neg_elim(b.body))
    halves = Tensor(b.op.dual, iso_i(~b.left), iso_i(~b.right))
    mover = dm_and_r if b.op is AND else dm_or_r
    return Comp(halves, mover(b.left, b.right))


def iso_i_inv(a: Formula) -> ArrowTerm:
    """Isomorphism ``nnf(a) ⊢ a``."""
    if isinstance(a, Atom) or (isinstance(a, Neg) and isinstance(a.body, Atom)):
        return ident(a)
    if isinstance(a, Binary):
        return Tensor(a.op, iso_i_inv(a.left), iso_i_inv(a.right))
    b = a.body
    if isinstance(b, Neg):
        return Comp(neg_intro(b.body), iso_i_inv(b.body))
    halves = Tensor(b.op.dual, iso_i_inv(~b.left), iso_i_inv(~b.right))
    mover = dm_and_l if b.op is AND else dm_or_l
    return Comp(mover(b.left, b.right), halves)
