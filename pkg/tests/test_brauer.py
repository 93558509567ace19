import pytest
from hypothesis import given, strategies as st

from conftest import load_json, random_brauerian
from proofnet.arrows import c_and, delta_and, dist, ident, sigma_or, tensor
from proofnet.brauer import (Endpoint, SplitEquivalence, compose, compose_with_loops, identity,
                             is_brauerian, permutation, shift_union)
from proofnet.formula import AND, letters
from proofnet.semantics import g_arrow

p, q, r = letters("p q r")
EMPTY = SplitEquivalence(0, 0, ())


def S(src, tgt, pairs):
    return SplitEquivalence.from_pairs(src, tgt, pairs)


def test_identity():
    assert identity(0) == EMPTY
    assert str(identity(2)) == "2 ⊢ 2: {{0s,0t},{1s,1t}}"
    assert identity(3).transversals() == [(0, 0), (1, 1), (2, 2)]


def test_worked_composition():
    data = load_json("composition.json")
    R = SplitEquivalence.from_json(data["R"])
    P = SplitEquivalence.from_json(data["P"])
    assert compose(P, R) == SplitEquivalence.from_json(data["P_after_R"])


def test_snake_composes_to_identity():
    snake = compose(g_arrow(sigma_or(p, p)), compose(g_arrow(dist(p, ~p, p)), g_arrow(delta_and(p, p))))
    assert snake == identity(1)


def test_compose_rejects_size_mismatch():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_shift_union():
    swap = S(2, 2, [(("s", 0), ("t", 1)), (("s", 1), ("t", 0))])
    expected = S(3, 3, [(("s", 0), ("t", 0)), (("s", 1), ("t", 2)), (("s", 2), ("t", 1))])
    assert shift_union(identity(1), swap) == expected
    assert shift_union(identity(1), swap) == g_arrow(tensor(AND, ident(p), c_and(q, r)))
    assert shift_union(EMPTY, swap) == swap
    assert shift_union(identity(1), identity(1)) == identity(2)


def test_is_brauerian():
    assert identity(2).is_brauerian
    assert not is_brauerian(2, 2, [(("s", 0), ("t", 0)), (("s", 1), ("t", 1)), (("s", 1), ("t", 0))])
    assert not is_brauerian(2, 1, [(("s", 0), ("t", 0))])
    assert is_brauerian(0, 2, [(("t", 0), ("t", 1))])


def test_validation():
    with pytest.raises(ValueError):
        SplitEquivalence.of(1, 1, [[("s", 0)], [("t", 1)]])
    with pytest.raises(ValueError):
        SplitEquivalence.of(2, 0, [[("s", 0)]])
    with pytest.raises(ValueError):
        S(3, 0, [[("s", 0), ("s", 1), ("s", 2)]])


def test_canonical_form():
    R = S(1, 3, [(("t", 2), ("t", 1)), (("t", 0), ("s", 0))])
    assert R.blocks == ((Endpoint("s", 0), Endpoint("t", 0)), (Endpoint("t", 1), Endpoint("t", 2)))
    assert R.caps() == [(1, 2)] and R.cups() == [] and R.transversals() == [(0, 0)]


def test_closed_loops_are_dropped_and_counted():
    cup = S(2, 0, [(("s", 0), ("s", 1))])
    cap = S(0, 2, [(("t", 0), ("t", 1))])
    assert compose_with_loops(cup, cap) == (EMPTY, 1)


def test_general_split_equivalences_compose():
    # a three-element block survives composition with an identity
    R = SplitEquivalence.of(2, 1, [[("s", 0), ("s", 1), ("t", 0)]])
    assert compose(identity(1), R) == R
    assert not R.is_brauerian


def test_permutation():
    assert permutation([1, 0]) == S(2, 2, [(("s", 0), ("t", 1)), (("s", 1), ("t", 0))])


def test_json_round_trip():
    R = S(1, 3, [(("s", 0), ("t", 0)), (("t", 1), ("t", 2))])
    assert SplitEquivalence.from_json(R.dumps()) == R
    assert R.to_json() == {"src": 1, "tgt": 3, "pairs": [[["s", 0], ["t", 0]], [["t", 1], ["t", 2]]]}


@st.composite
def triples(draw):
    rng = draw(st.randoms(use_true_random=False))
    parity = draw(st.integers(0, 1))
    w, x, y, z = (draw(st.integers(0, 6)) * 2 + parity for _ in range(4))
    return random_brauerian(rng, w, x), random_brauerian(rng, x, y), random_brauerian(rng, y, z)


@given(triples())
def test_associativity(t):
    R, Q, P = t
    assert compose(P, compose(Q, R)) == compose(compose(P, Q), R)


@given(triples())
def test_identity_laws_and_closure(t):
    R, Q, _ = t
    assert compose(identity(R.tgt), R) == R
    assert compose(R, identity(R.src)) == R
    assert compose(Q, R).is_brauerian


@given(triples())
def test_shift_union_associative(t):
    R, Q, P = t
    assert shift_union(R, shift_union(Q, P)) == shift_union(shift_union(R, Q), P)
