"""On-demand growth of a countable homogeneous-universal poset.

Vertices are created one at a time; each new vertex is a one-point extension
realizing a triple (L, G, U) with L < p < G and p incomparable to U. Adding
such a vertex never changes the order between existing vertices.
"""
from __future__ import annotations

import random
import re

from .base import EXTENSION_AXIOMS, Structure
from ..errors import ParseError, PosetError, PreconditionError


class RandomPosetState:
    def __init__(self):
        self.below: list[set] = []
        self.above: list[set] = []

    def __len__(self):
        return len(self.below)

    @property
    def vertices(self) -> range:
        return range(len(self.below))

    def lt(self, x, y) -> bool:
        return x in self.below[y]

    def leq(self, x, y) -> bool:
        return x == y or x in self.below[y]

    def _check_vertices(self, xs):
        for x in xs:
            if not (isinstance(x, int) and 0 <= x < len(self)):
                raise PreconditionError(f"unknown vertex {x!r}")

    def check_triple(self, L, G, U) -> None:
        L, G, U = set(L), set(G), set(U)
        self._check_vertices(L | G | U)
        for a, b, name in ((L, G, "L/G"), (L, U, "L/U"), (G, U, "G/U")):
            common = a & b
            if common:
                raise PreconditionError(f"{name} not disjoint: v{min(common)}")
        for l in sorted(L):
            for g in sorted(G):
                if not self.lt(l, g):
                    raise PreconditionError(f"(C1) fails: v{l} is not below v{g}")
        for u in sorted(U):
            for l in sorted(L):
                if self.lt(u, l):
                    raise PreconditionError(f"(C2) fails: v{u} < v{l}")
            for g in sorted(G):
                if self.lt(g, u):
                    raise PreconditionError(f"(C3) fails: v{g} < v{u}")

    def witness(self, L=(), G=(), U=()) -> int:
        """Add a fresh p with L < p < G and p incomparable to every u in U."""
        self.check_triple(L, G, U)
        down, up = set(), set()
        for l in L:
            down.add(l)
            down |= self.below[l]
        for g in G:
            up.add(g)
            up |= self.above[g]
        touched = set(U) & (down | up)
        if touched:
            raise PosetError(f"closure reaches v{min(touched)} in U; the state is not transitive")
        p = len(self)
        self.below.append(down)
        self.above.append(up)
        for x in down:
            self.above[x].add(p)
        for y in up:
            self.below[y].add(p)
        return p

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for y in self.vertices for x in sorted(self.below[y])]

    def violations(self) -> list[str]:
        out = []
        for x in self.vertices:
            if x in self.below[x]:
                out.append(f"v{x} < v{x}")
            for y in self.below[x]:
                if x not in self.above[y]:
                    out.append(f"below/above tables disagree at v{y}, v{x}")
                if not self.below[y] <= self.below[x]:
                    z = min(self.below[y] - self.below[x])
                    out.append(f"not transitive: v{z} < v{y} < v{x}")
        return out

    def copy(self) -> "RandomPosetState":
        new = RandomPosetState()
        new.below = [set(s) for s in self.below]
        new.above = [set(s) for s in self.above]
        return new

    def to_json(self) -> dict:
        return {
            "vertices": [f"v{k}" for k in self.vertices],
            "strict_pairs": [[f"v{x}", f"v{y}"] for x, y in sorted(self.strict_pairs())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RandomPosetState":
        names = data["vertices"]
        if names != [f"v{k}" for k in range(len(names))]:
            raise ParseError("vertices must be v0, v1, ... in creation order")
        st = cls()
        st.below = [set() for _ in names]
        st.above = [set() for _ in names]
        for x, y in data["strict_pairs"]:
            i, j = parse_vertex(x), parse_vertex(y)
            if not (i < len(names) and j < len(names)):
                raise ParseError(f"unknown vertex in pair {x}, {y}")
            st.below[j].add(i)
            st.above[i].add(j)
        return st


def rp_witness(state: RandomPosetState, L=(), G=(), U=()):
    p = state.witness(L, G, U)
    return state, p


def rp_leq(state: RandomPosetState, x, y) -> bool:
    state._check_vertices([x, y])
    return state.leq(x, y)


_VERTEX = re.compile(r"v(0|[1-9][0-9]*)")


def parse_vertex(s: str) -> int:
    m = _VERTEX.fullmatch(s)
    if not m:
        raise ParseError(f"not a vertex name: {s!r}")
    return int(m.group(1))


class RandomPoset(Structure):
    """The grown fragment, with seeded background growth for unseen indices."""

    id = "random-poset"
    capabilities = frozenset({EXTENSION_AXIOMS})
    strategies = ("universal",)
    summary = "the random poset is not reversible (finite approximations, extension axioms)"

    def __init__(self, seed: int = 0, state: RandomPosetState | None = None, frozen=False):
        self.state = state if state is not None else RandomPosetState()
        self.rng = random.Random(seed)
        self.frozen = frozen

    def leq(self, x, y):
        return self.state.leq(x, y)

    def lt(self, x, y):
        return self.state.lt(x, y)

    def enumerate(self, n):
        while len(self.state) <= n:
            if self.frozen:
                raise IndexError(f"v{n} has not been created")
            self.grow()
        return n

    def index_of(self, x):
        return x

    def encode(self, x):
        return f"v{x}"

    def _parse(self, s):
        k = parse_vertex(s)
        if k >= len(self.state):
            raise ParseError(f"unknown vertex {s!r}")
        return k

    def witness(self, L=(), G=(), U=()):
        return self.state.witness(L, G, U)

    def random_triple(self, rng: random.Random, size: int = 2):
        """A triple satisfying (C1)-(C3), drawn from the existing vertices."""
        st = self.state
        V = list(st.vertices)
        if not V:
            return set(), set(), set()
        L = set(rng.sample(V, rng.randint(0, min(size, len(V)))))
        cand_g = [v for v in V if v not in L and all(st.lt(l, v) for l in L)]
        G = set(rng.sample(cand_g, rng.randint(0, min(size, len(cand_g)))))
        cand_u = [
            v for v in V
            if v not in L and v not in G
            and not any(st.lt(v, l) for l in L)
            and not any(st.lt(g, v) for g in G)
        ]
        U = set(rng.sample(cand_u, rng.randint(0, min(size, len(cand_u)))))
        return L, G, U

    def grow(self) -> int:
        return self.state.witness(*self.random_triple(self.rng))
