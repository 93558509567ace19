"""Equality of proofs in proof-net categories, decided by Brauerian graphs."""
from .arrows import (ArrowTerm, ArrowType, Comp, Gen, Tensor, check_theory, comp,
                     expand_derived, typeof)
from .brauer import Endpoint, SplitEquivalence, compose, identity, shift_union
from .decide import Verdict, commutes, equal_in
from .formula import AND, OR, Atom, Conj, Disj, Formula, Neg, Theory, letters, nnf
from .rewrite import (EquationSchema, Substitution, axiom_catalog, develop, factor_stack,
                      instantiate, is_developed, theorem_catalog)
from .semantics import g_arrow, g_object, linked
from .syntax import parse_arrow, parse_file, parse_formula, print_arrow
from .translate import f_arrow, f_object, iso_i, iso_i_inv

__all__ = [
    "ArrowTerm", "ArrowType", "Comp", "Gen", "Tensor", "check_theory", "comp",
    "expand_derived", "typeof", "Endpoint", "SplitEquivalence", "compose", "identity",
    "shift_union", "Verdict", "commutes", "equal_in", "AND", "OR", "Atom", "Conj",
    "Disj", "Formula", "Neg", "Theory", "letters", "nnf", "EquationSchema",
    "Substitution", "axiom_catalog", "develop", "factor_stack", "instantiate", "is_developed",
    "theorem_catalog", "g_arrow", "g_object",
    "linked", "parse_arrow", "parse_file", "parse_formula", "print_arrow", "f_arrow",
    "f_object", "iso_i", "iso_i_inv",
]
