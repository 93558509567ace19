"""Deciding equality of arrow terms by comparing their graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .arrows import ArrowTerm, comp, theory_violation, typeof
from .brauer import Block
from .errors import CompositionError, ProofNetError, TheoryError
from .formula import Theory
from .semantics import g_arrow


@dataclass(frozen=True)
class Verdict:
    equal: bool
    reason: str  # "equal", "type-mismatch" or "graph-mismatch"
    witness: Block | None = None

    def __bool__(self) -> bool:
        return self.equal

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "reason": self.reason,
            "witness": None if self.witness is None else [[e.tag, e.pos] for e in self.witness],
        }

    def __str__(self) -> str:
        if self.witness is None:
            return self.reason
        return f"{self.reason}: {{{','.join(str(e) for e in self.witness)}}}"


def equal_in(f: ArrowTerm, g: ArrowTerm, theory: Theory) -> Verdict:
    """Whether ``f`` and ``g`` are equal arrows of ``theory``.

    The witness of a graph mismatch is the least block of ``f``'s graph that
    ``g``'s graph lacks.
    """
    for term in (f, g):
        problem = theory_violation(term, theory)
        if problem:
            raise TheoryError(problem)
    if typeof(f) != typeof(g):
        return Verdict(False, "type-mismatch")
    gf, gg = g_arrow(f), g_arrow(g)
    if gf == gg:
        return Verdict(True, "equal")
    only_f = sorted(set(gf.blocks) - set(gg.blocks))
    only_g = sorted(set(gg.blocks) - set(gf.blocks))
    return Verdict(False, "graph-mismatch", (only_f or only_g)[0])


def commutes(arrows: Mapping[str, ArrowTerm], path: Sequence[str], other: Sequence[str],
             theory: Theory) -> Verdict:
    """Whether two paths through a diagram agree.

    Paths list arrow names in the order they are traversed, so the first name
    is applied first.
    """
    composites = []
    for names in (path, other):
        if not names:
            raise ProofNetError("a path needs at least one arrow")
        missing = [n for n in names if n not in arrows]
        if missing:
            raise ProofNetError(f"unknown arrows in path: {', '.join(missing)}")
        term = comp(*(arrows[n] for n in reversed(names)))
        try:
            typeof(term)
        except CompositionError as exc:
            raise ProofNetError(f"path {' → '.join(names)} is not composable: {exc}") from exc
        composites.append(term)
    t1, t2 = typeof(composites[0]), typeof(composites[1])
    if t1 != t2:
        raise ProofNetError(f"paths have different endpoints: {t1} versus {t2}")
    return equal_in(composites[0], composites[1], theory)
