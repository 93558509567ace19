import pytest
from hypothesis import given, strategies as st

from proofnet.arrows import (ArrowType, c_or, check_theory, comp, delta_and, dm_and_l, dm_and_r,
                             dm_or_l, dm_or_r, expand_derived, ident, neg_elim, neg_intro, typeof)
from proofnet.brauer import identity
from proofnet.formula import Theory, letters, nnf
from proofnet.generate import random_formula, random_term
from proofnet.semantics import g_arrow, g_object
from proofnet.syntax import parse_arrow, parse_formula
from proofnet.translate import (counit_or, f_arrow, f_neg_arrow, f_object, iso_i, iso_i_inv,
                                unit_and)

p, q, r = letters("p q r")


def F(text):
    return parse_formula(text)


def test_f_object():
    assert f_object(F("~~(p \\/ q)")) == F("p \\/ q")
    assert f_object(F("~(p \\/ q)")) == F("~p /\\ ~q")
    assert f_object(q) == q


def test_f_arrow_examples():
    assert f_arrow(delta_and(p, ~~q)) == delta_and(p, q)
    assert f_arrow(delta_and(~q, p)) == comp(ident(p) & c_or(q, ~q), delta_and(q, p))
    assert f_arrow(parse_arrow("c_and(~(p \\/ q), r)")) == parse_arrow("c_and(~p /\\ ~q, r)")


def test_iso_examples():
    assert iso_i(p & q) == ident(p) & ident(q)
    assert iso_i(~~p) == comp(ident(p), neg_elim(p))
    assert iso_i(F("~(p /\\ q)")) == comp(ident(~p) | ident(~q), dm_and_r(p, q))
    assert iso_i(~p) == ident(~p) == iso_i_inv(~p)


CROWNS = ["p", "~p", "p /\\ ~q", "p \\/ q", "~(p /\\ q)", "(p \\/ ~q) /\\ ~(q \\/ r)"]


@pytest.mark.parametrize("crown", CROWNS)
def test_unit_clause_types(crown):
    b, stem = F(crown), F("q \\/ ~r")
    assert typeof(unit_and(b, stem)) == ArrowType(stem, stem & (nnf(~b) | nnf(b)))
    assert check_theory(unit_and(b, stem), Theory.PN)


@pytest.mark.parametrize("crown", CROWNS)
def test_counit_clause_types(crown):
    b, stem = F(crown), F("q \\/ ~r")
    assert typeof(counit_or(b, stem)) == ArrowType((nnf(b) & nnf(~b)) | stem, stem)
    assert check_theory(counit_or(b, stem), Theory.PN)


@pytest.mark.parametrize("pair", [
    (neg_elim, neg_intro), (neg_intro, neg_elim), (dm_and_r, dm_and_l), (dm_and_l, dm_and_r),
    (dm_or_r, dm_or_l), (dm_or_l, dm_or_r)])
def test_inverse_pairs_under_the_graph(pair):
    outer, inner = pair
    args = (F("p /\\ ~q"),) if outer in (neg_elim, neg_intro) else (F("p \\/ q"), F("~r"))
    f = comp(outer(*args), inner(*args))
    assert g_arrow(f) == identity(g_object(typeof(f).source))


pn_neg_terms = st.builds(lambda rng, budget: random_term(rng, Theory.PN_NEG, budget),
                         st.randoms(use_true_random=False), st.integers(0, 10))


@given(pn_neg_terms)
def test_translation_type_and_theory(f):
    t = typeof(f)
    image = f_arrow(f)
    assert typeof(image) == ArrowType(f_object(t.source), f_object(t.target))
    assert check_theory(image, Theory.PN)


@given(pn_neg_terms)
def test_translation_keeps_graph(f):
    assert g_arrow(f_arrow(f), Theory.PN) == g_arrow(f, Theory.PN_NEG)


@given(pn_neg_terms)
def test_auxiliary_identity_under_the_graph(f):
    t = typeof(f)
    assert g_arrow(comp(iso_i_inv(t.target), f_arrow(f), iso_i(t.source))) == g_arrow(f)


@given(st.randoms(use_true_random=False))
def test_isomorphisms_are_mutually_inverse_under_the_graph(rng):
    a = random_formula(rng, Theory.PN_NEG, 4)
    n = g_object(a)
    assert typeof(iso_i(a)) == ArrowType(a, nnf(a))
    assert typeof(iso_i_inv(a)) == ArrowType(nnf(a), a)
    assert g_arrow(comp(iso_i_inv(a), iso_i(a))) == identity(n)
    assert g_arrow(comp(iso_i(a), iso_i_inv(a))) == identity(n)


@given(st.randoms(use_true_random=False))
def test_isomorphism_graph_is_identity(rng):
    # an observation rather than a contract: the serpentines straighten out
    a = random_formula(rng, Theory.PN_NEG, 4)
    assert g_arrow(iso_i(a)) == identity(g_object(a))


@given(st.randoms(use_true_random=False), st.integers(0, 10))
def test_translation_fixes_letter_crown_terms(rng, budget):
    f = random_term(rng, Theory.PN, budget)
    assert f_arrow(f_neg_arrow(f)) == expand_derived(f)
