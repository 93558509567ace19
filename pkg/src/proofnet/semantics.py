"""The graph functor: formulas to letter counts, arrow terms to Brauerian graphs."""
from __future__ import annotations

from .arrows import ArrowTerm, Comp, Gen, Tensor, expand_derived, theory_violation, typeof
from .brauer import Endpoint, SplitEquivalence, compose, identity, shift_union
from .errors import TheoryError
from .formula import OR, Atom, Binary, Formula, Theory, letter_count, occurrences


def g_object(a: Formula) -> int:
    return letter_count(a)


def g_arrow(f: ArrowTerm, theory: Theory | None = None) -> SplitEquivalence:
    """Graph of ``f``; with ``theory`` given, ``f`` must be a term of it."""
    typeof(f)
    if theory is not None:
        problem = theory_violation(f, theory)
        if problem:
            raise TheoryError(problem)
    return _graph(expand_derived(f))


def _graph(f: ArrowTerm) -> SplitEquivalence:
    if isinstance(f, Comp):
        return compose(_graph(f.left), _graph(f.right))
    if isinstance(f, Tensor):
        return shift_union(_graph(f.left), _graph(f.right))
    return generator_graph(f)


def _pair(a: Endpoint, b: Endpoint) -> tuple[Endpoint, Endpoint]:
    return (a, b) if a < b else (b, a)


def generator_graph(g: Gen) -> SplitEquivalence:
    """Graph of a single primitive generator."""
    name = g.name
    if name in ("c_and", "c_or"):
        na, nb = (letter_count(x) for x in g.args)
        n = na + nb
        # pairs {m_s, n_t} for c∧ (mirrored for c∨) with (m-n-GA)(m-n+GB) = 0
        pairs = []
        for m in range(n):
            for k in range(n):
                if (m - k - na) * (m - k + nb) == 0:
                    if name == "c_and":
                        pairs.append(_pair(Endpoint("s", m), Endpoint("t", k)))
                    else:
                        pairs.append(_pair(Endpoint("s", k), Endpoint("t", m)))
        return SplitEquivalence(n, n, tuple(sorted(pairs)))
    if name == "delta_and":
        nb, na = (letter_count(x) for x in g.args)
        pairs = [(Endpoint("s", m), Endpoint("t", m)) for m in range(na)]
        pairs += [(Endpoint("t", na + k), Endpoint("t", na + nb + k)) for k in range(nb)]
        return SplitEquivalence(na, na + 2 * nb, tuple(sorted(pairs)))
    if name == "sigma_or":
        nb, na = (letter_count(x) for x in g.args)
        pairs = [(Endpoint("s", k), Endpoint("s", nb + k)) for k in range(nb)]
        pairs += [(Endpoint("s", 2 * nb + k), Endpoint("t", k)) for k in range(na)]
        return SplitEquivalence(2 * nb + na, na, tuple(sorted(pairs)))
    if g.spec.derived:
        return _graph(expand_derived(g))
    # identities, associativity, distribution and mix
    return identity(letter_count(typeof(g).source))


def linked(f: ArrowTerm, theory: Theory | None = None) -> list[tuple[int, int]]:
    """Transversals of the graph: (source occurrence, target occurrence), 0-based."""
    return g_arrow(f, theory).transversals()


def linked_letters(f: ArrowTerm, theory: Theory | None = None) -> list[tuple[int, int, str]]:
    src = occurrences(typeof(f).source)
    return [(i, j, src[i][0].name) for i, j in linked(f, theory)]


def _letter_pairs(a: Formula, op) -> list[tuple[int, int]]:
    """Occurrence positions (i, i+1) of subformulas ``x op y`` with letters x, y."""
    out = []

    def walk(x: Formula, offset: int) -> None:
        if isinstance(x, Binary):
            if x.op is op and isinstance(x.left, Atom) and isinstance(x.right, Atom):
                out.append((offset, offset + 1))
            walk(x.left, offset)
            walk(x.right, offset + letter_count(x.left))
        elif not isinstance(x, Atom):
            walk(x.body, offset)

    walk(a, 0)
    return out


def lemma_violations(f: ArrowTerm, source_op=OR) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Letter pairs joined by ``source_op`` in the source whose linked partners
    are joined by the dual connective in the target.

    ``source_op=OR`` finds the x₁∨x₂ / y₁∧y₂ configurations, ``AND`` the dual ones.
    Arrows of DS have none of either kind; arrows with mix have none with ``OR``.
    """
    t = typeof(f)
    link = dict(linked(f))
    target_pairs = {frozenset(p) for p in _letter_pairs(t.target, source_op.dual)}
    bad = []
    for i, j in _letter_pairs(t.source, source_op):
        if i in link and j in link and frozenset((link[i], link[j])) in target_pairs:
            bad.append(((i, j), tuple(sorted((link[i], link[j])))))
    return bad

