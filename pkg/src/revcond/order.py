"""Finite partial orders and order queries on countable structures.

Countable structures live in :mod:`revcond.structures`; the functions here
either work on an explicit :class:`FinitePoset` or delegate to a structure
after parsing string encodings.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Sequence

from .errors import PosetError


@dataclass(frozen=True)
class FinitePoset:
    """Explicit ground set with a total boolean ``leq`` table.

    ``index`` holds the enumeration index used for tie-breaking; it defaults to
    list position.
    """

    elements: tuple
    leq: tuple  # tuple of tuples of bool
    index: tuple = ()

    def __post_init__(self):
        if not self.index:
            object.__setattr__(self, "index", tuple(range(len(self.elements))))
        if len(self.leq) != len(self.elements) or any(
            len(row) != len(self.elements) for row in self.leq
        ):
            raise PosetError("order table shape does not match element count")
        if len(set(self.elements)) != len(self.elements):
            raise PosetError("duplicate elements")

    def __len__(self):
        return len(self.elements)

    @classmethod
    def from_structure(cls, structure, elements: Iterable) -> "FinitePoset":
        elems = sorted(set(elements), key=structure.index_of)
        table = tuple(tuple(structure.leq(x, y) for y in elems) for x in elems)
        return cls(tuple(elems), table, tuple(structure.index_of(x) for x in elems))

    @classmethod
    def from_relation(cls, elements: Sequence, pairs: Iterable[tuple]) -> "FinitePoset":
        """Reflexive order generated by ``pairs`` (x <= y), no closure taken."""
        pos = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        table = [[i == j for j in range(n)] for i in range(n)]
        for x, y in pairs:
            table[pos[x]][pos[y]] = True
        return cls(tuple(elements), tuple(tuple(r) for r in table))

    def position(self, x) -> int:
        return self.elements.index(x)

    def le(self, x, y) -> bool:
        return self.leq[self.position(x)][self.position(y)]

    def violations(self) -> list[str]:
        """Reflexivity / antisymmetry / transitivity failures (triple loops)."""
        n, t, out = len(self), self.leq, []
        for i in range(n):
            if not t[i][i]:
                out.append(f"not reflexive at {self.elements[i]!r}")
        for i in range(n):
            for j in range(n):
                if i != j and t[i][j] and t[j][i]:
                    out.append(
                        f"not antisymmetric at {self.elements[i]!r}, {self.elements[j]!r}"
                    )
        for i in range(n):
            for j in range(n):
                if not t[i][j]:
                    continue
                for k in range(n):
                    if t[j][k] and not t[i][k]:
                        out.append(
                            "not transitive at "
                            f"{self.elements[i]!r}, {self.elements[j]!r}, {self.elements[k]!r}"
                        )
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def check(self) -> None:
        bad = self.violations()
        if bad:
            raise PosetError(bad[0])


@dataclass
class LevelDecomposition:
    levels: list  # list of frozensets
    height: dict = field(default_factory=dict)


def levels(fp: FinitePoset) -> LevelDecomposition:
    """Peel minimal elements repeatedly: L_0 = Min, L_k = Min(rest)."""
    fp.check()
    n = len(fp)
    remaining = set(range(n))
    out, height = [], {}
    while remaining:
        layer = {
            i for i in remaining
            if not any(j != i and fp.leq[j][i] for j in remaining)
        }
        for i in layer:
            height[fp.elements[i]] = len(out)
        out.append(frozenset(fp.elements[i] for i in layer))
        remaining -= layer
    return LevelDecomposition(out, height)


def linear_extension(fp: FinitePoset) -> list:
    """Kahn topological sort; among available elements the least index goes first."""
    n = len(fp)
    indeg = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and fp.leq[i][j]:
                indeg[j] += 1
    heap = [(fp.index[i], i) for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, i = heapq.heappop(heap)
        out.append(fp.elements[i])
        for j in range(n):
            if i != j and fp.leq[i][j]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, (fp.index[j], j))
    if len(out) != n:
        raise PosetError("order table has a cycle")
    return out


# Structure-level queries. Elements may be given as raw values or encodings.

def _coerce(structure, x: Any):
    return structure.parse(x) if isinstance(x, str) else x


def leq(structure, x, y) -> bool:
    return structure.leq(_coerce(structure, x), _coerce(structure, y))


def enumerate_element(structure, n: int):
    return structure.enumerate(n)


def index_of(structure, x) -> int:
    return structure.index_of(_coerce(structure, x))


def principal_ideal(structure, p) -> frozenset:
    return structure.principal_ideal(_coerce(structure, p))


def down_closure(structure, S: Iterable) -> frozenset:
    out: set[Hashable] = set()
    for s in S:
        out |= structure.principal_ideal(_coerce(structure, s))
    return frozenset(out)


def immediate_successors(structure, p, budget: int):
    return structure.immediate_successors(_coerce(structure, p), budget)
