import random

import pytest
from hypothesis import given, strategies as st

from proofnet.arrows import c_and, comp, dist, ident, sigma_or, typeof
from proofnet.errors import SubstitutionError
from proofnet.formula import Theory, letters
from proofnet.generate import random_instance, random_term, random_walk
from proofnet.rewrite import (AVar, FVar, EquationSchema, Substitution, axiom_catalog, develop,
                              factor_stack, instance_violation, instantiate, instantiate_all,
                              is_developed, primed, schema_named, theorem_catalog)
from proofnet.semantics import g_arrow
from proofnet.syntax import parse_arrow, parse_file, parse_formula

p, q, r = letters("p q r")


def T(text):
    return parse_arrow(text)


def names(catalog):
    return [e.name for e in catalog]


def test_catalog_sizes():
    assert len(axiom_catalog(Theory.DS)) == 25
    assert len(axiom_catalog(Theory.PN_NEG)) == 33
    assert len(axiom_catalog(Theory.PN)) == 33
    for theory in (Theory.MDS, Theory.MPN, Theory.MPN_NEG):
        assert len(axiom_catalog(theory)) == len(axiom_catalog(Theory.DS if theory is Theory.MDS
                                                               else Theory.PN)) + 4
    assert len(set(names(axiom_catalog(Theory.MPN_NEG)))) == 37


def test_catalog_contents():
    ds = {e.name: str(e) for e in axiom_catalog(Theory.DS)}
    assert ds["(d∧)"] == ("(b∧←_{A,B,C}∨1_D)∘d_{A∧B,C,D} = "
                          "d_{A,B∧C,D}∘(1_A∧d_{B,C,D})∘b∧←_{A,B,C∨D}")
    mpn_neg = {e.name: str(e) for e in axiom_catalog(Theory.MPN_NEG)}
    assert mpn_neg["(cm)"] == "m_{B,A}∘c∧_{A,B} = c∨_{B,A}∘m_{A,B}"
    pn_neg = {e.name: str(e) for e in axiom_catalog(Theory.PN_NEG)}
    assert pn_neg["(Σ∨Δ∧)"] == "Σ∨_{A,A}∘d_{A,¬A,A}∘Δ∧_{A,A} = 1_A"
    assert "(Σ∨Δ∧)" not in ds and "(cm)" not in pn_neg


def test_theorem_catalog_contents():
    pn = {e.name: str(e) for e in theorem_catalog(Theory.PN)}
    assert pn["(d^R nat)"] == "(h∨(g∧f))∘d^R_{C,B,A} = d^R_{F,E,D}∘((h∨g)∧f)"
    assert pn["(1∧Δ∧)"] == "1_A∧Δ∧_{p,B} = b∧←_{A,B,¬p∨p}∘Δ∧_{p,A∧B}"
    assert pn["(Δ∨Σ∧)"] == "Δ∨_{A,¬A}∘d^R_{¬A,A,¬A}∘Σ∧_{A,¬A} = 1_{¬A}"
    assert "(Δ∧ r)" not in pn
    assert "(Δ∧ r)" in names(theorem_catalog(Theory.PN_NEG))
    assert names(theorem_catalog(Theory.DS)) == ["(b∧← nat)", "(b∨← nat)", "(d^R nat)"]


def test_primed_analogue():
    e = primed(schema_named("(b∧Δ∧)"))
    assert e.name == "(b∧Δ∧′)"
    assert str(e) == "b∧←_{A,B,C∨¬C}∘Δ∧′_{C,A∧B} = 1_A∧Δ∧′_{C,B}"


def test_instantiate_examples():
    lhs, rhs = instantiate(schema_named("(Σ∨Δ∧)"), Substitution({"A": p}))
    assert lhs == comp(sigma_or(p, p), dist(p, ~p, p), T("delta_and(p, p)"))
    assert rhs == ident(p)
    lhs, rhs = instantiate(schema_named("(c∧c∧)"), Substitution({"A": p, "B": q}))
    assert (lhs, rhs) == (comp(c_and(q, p), c_and(p, q)), ident(p & q))
    d = dist(p, q, r)
    sides = instantiate_all(schema_named("(cat 1)"), Substitution(arrows={"f": d}))
    assert sides == [comp(d, ident(p & (q | r))), d, comp(ident((p & q) | r), d)]


def test_instantiate_errors():
    with pytest.raises(SubstitutionError):
        instantiate(schema_named("(c∧c∧)"), Substitution({"A": p}))
    with pytest.raises(SubstitutionError):
        # f must start where the composite does
        instantiate(schema_named("(Σ∨ nat)"),
                    Substitution({"A": q, "B": p}, {"f": ident(r)}))
    with pytest.raises(SubstitutionError):
        instantiate(schema_named("(1∧Δ∧)"), Substitution({"A": p, "B": q, "p": p & q}))


def test_crown_restriction_is_visible_after_instantiation():
    sides = instantiate_all(schema_named("(Σ∨Δ∧)"), Substitution({"A": p & q}))
    assert instance_violation(sides, Theory.PN)
    assert instance_violation(sides, Theory.PN_NEG) is None


def test_schema_sides_must_agree():
    A = FVar("A")
    with pytest.raises(ValueError):
        EquationSchema("bad", ident(A), ident(~A), frozenset(Theory))
    f = AVar("f", A, FVar("D"))
    assert EquationSchema("ok", comp(f, ident(A)), f, frozenset(Theory)).arrow_vars == [f]


def test_develop_examples():
    assert develop(ident(p)) == ident(p)
    f = T("c_and(p, q) /\\ dist(p, q, r)")
    expected = T("(c_and(p, q) /\\ id((p /\\ q) \\/ r)) . (id(p /\\ q) /\\ dist(p, q, r))"
                 " . id((p /\\ q) /\\ (p /\\ (q \\/ r)))")
    assert develop(f) == expected
    assert g_arrow(develop(f)) == g_arrow(f)


def test_is_developed_examples():
    assert is_developed(ident(p))
    assert not is_developed(T("c_and(p, q) /\\ dist(p, q, r)"))
    assert is_developed(T("sigma_or(q, p /\\ q) . id((q /\\ ~q) \\/ (p /\\ q))"))
    assert not is_developed(T("sigma_or(q, p /\\ q)"))
    assert is_developed(T("sigma_and(p, q) . id(q)"))
    assert not is_developed(T("sigma_and(p, q) . id(q)"), primitive_heads=True)


def test_eleven_factor_stack(golden_dir):
    import json
    defs = parse_file((golden_dir / "eleven_factor.pnc").read_text())
    expected = json.loads((golden_dir / "eleven_factor.json").read_text())
    stack = factor_stack(defs["eleven_factor"], keep_derived=True)
    assert stack[0] == ident(parse_formula("p /\\ q"))
    assert stack[1:] == [T(x) for x in expected["factors_first_applied_first"]]


terms = st.builds(lambda rng, theory, budget: random_term(rng, theory, budget),
                  st.randoms(use_true_random=False), st.sampled_from(list(Theory)),
                  st.integers(0, 8))


@given(terms)
def test_develop_shape_and_graph(f):
    d = develop(f)
    assert is_developed(d, primitive_heads=True)
    assert typeof(d) == typeof(f)
    assert g_arrow(d) == g_arrow(f)


@given(terms)
def test_develop_keeping_derived_heads(f):
    d = develop(f, keep_derived=True)
    assert is_developed(d)
    assert g_arrow(d) == g_arrow(f)


ALL_SCHEMATA = [(e, t) for t in Theory for e in axiom_catalog(t) + theorem_catalog(t)]


@pytest.mark.parametrize("schema, theory", ALL_SCHEMATA,
                         ids=[f"{t.value}-{e.name}" for e, t in ALL_SCHEMATA])
def test_schema_sound_under_the_graph(schema, theory):
    rng = random.Random(f"{theory.value}{schema.name}")
    for _ in range(5):
        sides = random_instance(rng, schema, theory)
        assert instance_violation(sides, theory) is None
        graphs = {g_arrow(s, theory) for s in sides}
        assert len(graphs) == 1


@given(st.randoms(use_true_random=False), st.sampled_from(list(Theory)))
def test_rewrite_walk_keeps_graph(rng, theory):
    f = random_term(rng, theory, rng.randint(1, 5))
    before = g_arrow(f)
    for _, g in random_walk(rng, f, theory, steps=8):
        assert typeof(g) == typeof(f)
        assert g_arrow(g, theory) == before
