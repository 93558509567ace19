"""Split equivalences between finite ordinals and their composition.

An arrow ``n ⊢ m`` partitions the endpoints ``(s, 0..n-1)`` and
``(t, 0..m-1)`` into blocks.  It is Brauerian when every block is a pair:
a transversal (s-t), a cup (s-s) or a cap (t-t).

    >>> r = SplitEquivalence.from_pairs(1, 3, [(("s", 0), ("t", 0)), (("t", 1), ("t", 2))])
    >>> compose(identity(3), r) == r
    True
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class Endpoint(NamedTuple):
    tag: str  # "s" or "t"
    pos: int

    def __str__(self) -> str:
        return f"{self.pos}{self.tag}"


Block = tuple[Endpoint, ...]


@dataclass(frozen=True)
class SplitEquivalence:
    """Canonical form: endpoints sorted inside each block, blocks sorted."""

    src: int
    tgt: int
    blocks: tuple[Block, ...]

    @classmethod
    def of(cls, src: int, tgt: int, blocks: Iterable[Iterable]) -> SplitEquivalence:
        """Validate and canonicalize; every endpoint must lie in exactly one block."""
        canon = _canonical(blocks)
        seen: set[Endpoint] = set()
        for block in canon:
            for e in block:
                if e.tag not in ("s", "t"):
                    raise ValueError(f"bad endpoint tag {e.tag!r}")
                limit = src if e.tag == "s" else tgt
                if not 0 <= e.pos < limit:
                    raise ValueError(f"endpoint {e} out of range for {src} ⊢ {tgt}")
                if e in seen:
                    raise ValueError(f"endpoint {e} occurs in two blocks")
                seen.add(e)
        if len(seen) != src + tgt:
            raise ValueError(f"blocks do not cover all endpoints of {src} ⊢ {tgt}")
        return cls(src, tgt, canon)

    from_blocks = of

    @classmethod
    def from_pairs(cls, src: int, tgt: int, pairs: Iterable[Iterable]) -> SplitEquivalence:
        out = cls.of(src, tgt, pairs)
        if not out.is_brauerian:
            raise ValueError("not every block is a pair")
        return out

    @property
    def is_brauerian(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    @property
    def pairs(self) -> tuple[Block, ...]:
        return self.blocks

    def transversals(self) -> list[tuple[int, int]]:
        return [(b[0].pos, b[1].pos) for b in self.blocks
                if len(b) == 2 and b[0].tag == "s" and b[1].tag == "t"]

    def cups(self) -> list[tuple[int, int]]:
        return [(b[0].pos, b[1].pos) for b in self.blocks
                if len(b) == 2 and b[0].tag == b[1].tag == "s"]

    def caps(self) -> list[tuple[int, int]]:
        return [(b[0].pos, b[1].pos) for b in self.blocks
                if len(b) == 2 and b[0].tag == b[1].tag == "t"]

    def __str__(self) -> str:
        inner = ",".join("{" + ",".join(str(e) for e in b) + "}" for b in self.blocks)
        return f"{self.src} ⊢ {self.tgt}: {{{inner}}}"

    def to_json(self) -> dict:
        return {"src": self.src, "tgt": self.tgt,
                "pairs": [[[e.tag, e.pos] for e in b] for b in self.blocks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict | str) -> SplitEquivalence:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.of(data["src"], data["tgt"], data["pairs"])


def _canonical(blocks: Iterable[Iterable]) -> tuple[Block, ...]:
    out = [tuple(sorted(Endpoint(str(tag), int(pos)) for tag, pos in b)) for b in blocks]
    return tuple(sorted(b for b in out if b))


def is_brauerian(src: int, tgt: int, blocks: Iterable[Iterable]) -> bool:
    """Whether raw ``blocks`` pair up every endpoint of ``src ⊢ tgt`` exactly once."""
    seen: set[Endpoint] = set()
    for b in blocks:
        b = [Endpoint(str(tag), int(pos)) for tag, pos in b]
        if len(b) != 2:
            return False
        for e in b:
            limit = src if e.tag == "s" else tgt if e.tag == "t" else -1
            if not 0 <= e.pos < limit or e in seen:
                return False
            seen.add(e)
    return len(seen) == src + tgt


def identity(n: int) -> SplitEquivalence:
    return SplitEquivalence(n, n, tuple((Endpoint("s", m), Endpoint("t", m)) for m in range(n)))


class _UnionFind:
    """Disjoint sets over ``0..n-1`` with path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def compose_with_loops(outer: SplitEquivalence, inner: SplitEquivalence) -> tuple[SplitEquivalence, int]:
    """``outer ∗ inner`` (inner first) and the number of closed loops dropped."""
    if inner.tgt != outer.src:
        raise ValueError(f"cannot compose {inner.src} ⊢ {inner.tgt} with {outer.src} ⊢ {outer.tgt}")
    x, y, z = inner.src, inner.tgt, outer.tgt
    # elements: X^s at 0..x-1, middle at x..x+y-1, Z^t after
    uf = _UnionFind(x + y + z)

    def inner_index(e: Endpoint) -> int:
        return e.pos if e.tag == "s" else x + e.pos

    def outer_index(e: Endpoint) -> int:
        return x + e.pos if e.tag == "s" else x + y + e.pos

    for blocks, index in ((inner.blocks, inner_index), (outer.blocks, outer_index)):
        for b in blocks:
            first = index(b[0])
            for e in b[1:]:
                uf.union(first, index(e))

    groups: dict[int, list[Endpoint]] = {}
    for i in range(x):
        groups.setdefault(uf.find(i), []).append(Endpoint("s", i))
    for k in range(z):
        groups.setdefault(uf.find(x + y + k), []).append(Endpoint("t", k))
    roots_with_middle = {uf.find(x + j) for j in range(y)}
    loops = len(roots_with_middle - groups.keys())
    result = SplitEquivalence(x, z, tuple(sorted(tuple(g) for g in groups.values())))
    return result, loops


def compose(outer: SplitEquivalence, inner: SplitEquivalence) -> SplitEquivalence:
    """``outer ∗ inner``: apply ``inner`` first, then ``outer``."""
    return compose_with_loops(outer, inner)[0]


def shift_union(left: SplitEquivalence, right: SplitEquivalence) -> SplitEquivalence:
    """Place ``right`` beside ``left``, shifting its positions past ``left``'s."""
    ds, dt = left.src, left.tgt

    def shift(e: Endpoint) -> Endpoint:
        return Endpoint(e.tag, e.pos + (ds if e.tag == "s" else dt))

    moved = tuple(tuple(shift(e) for e in b) for b in right.blocks)
    return SplitEquivalence(left.src + right.src, left.tgt + right.tgt,
                            tuple(sorted(left.blocks + moved)))


def permutation(perm: Sequence[int]) -> SplitEquivalence:
    """The bijection sending source ``k`` to target ``perm[k]``."""
    return SplitEquivalence(len(perm), len(perm), tuple(sorted(
        (Endpoint("s", k), Endpoint("t", v)) for k, v in enumerate(perm))))
