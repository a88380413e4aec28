"""Finite partial condensations: injective maps preserving <= forward."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class Violation:
    invariant: str  # functional | injective | homomorphism
    first: tuple
    second: tuple
    message: str

    def to_json(self) -> dict:
        return {"invariant": self.invariant, "message": self.message}


@dataclass(frozen=True)
class BadWitness:
    x1: object
    x2: object
    y1: object
    y2: object

    def pairs(self):
        return ((self.x1, self.y1), (self.x2, self.y2))

    def holds_in(self, structure) -> bool:
        return not structure.leq(self.x1, self.x2) and structure.leq(self.y1, self.y2)

    def to_json(self, structure) -> dict:
        enc = structure.encode
        return {"x1": enc(self.x1), "x2": enc(self.x2), "y1": enc(self.y1), "y2": enc(self.y2)}

    @classmethod
    def from_json(cls, structure, data) -> "BadWitness":
        p = structure.parse
        return cls(p(data["x1"]), p(data["x2"]), p(data["y1"]), p(data["y2"]))


class PartialCondensation:
    """Finite list of pairs ``(x, y)`` over one structure.

    Construction does not validate; use :func:`verify_partial_condensation`.
    Instances are treated as immutable: :meth:`extend` returns a new map.
    """

    __slots__ = ("structure", "pairs", "_fwd", "_bwd")

    def __init__(self, structure, pairs: Iterable = ()):
        self.structure = structure
        self.pairs = tuple(tuple(p) for p in pairs)
        self._fwd = dict(self.pairs)
        self._bwd = {y: x for x, y in self.pairs}

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair):
        x, y = pair
        return x in self._fwd and self._fwd[x] == y

    def __eq__(self, other):
        return isinstance(other, PartialCondensation) and set(self.pairs) == set(other.pairs)

    def __hash__(self):
        return hash(frozenset(self.pairs))

    def __repr__(self):
        enc = self.structure.encode
        body = ", ".join(f"{enc(x)}->{enc(y)}" for x, y in self.pairs)
        return f"PartialCondensation({self.structure.id}: {body})"

    @property
    def dom(self):
        return self._fwd.keys()

    @property
    def ran(self):
        return self._bwd.keys()

    def __call__(self, x):
        return self._fwd[x]

    def get(self, x, default=None):
        return self._fwd.get(x, default)

    def preimage(self, y, default=None):
        return self._bwd.get(y, default)

    def extend(self, added) -> "PartialCondensation":
        return PartialCondensation(self.structure, self.pairs + tuple(tuple(p) for p in added))

    def restrict(self, xs) -> "PartialCondensation":
        xs = set(xs)
        return PartialCondensation(self.structure, [p for p in self.pairs if p[0] in xs])

    def image(self, xs) -> list:
        return [self._fwd[x] for x in xs]

    def to_json(self) -> list:
        enc = self.structure.encode
        return [[enc(x), enc(y)] for x, y in self.pairs]

    @classmethod
    def from_json(cls, structure, data) -> "PartialCondensation":
        return cls(structure, [(structure.parse(x), structure.parse(y)) for x, y in data])


@dataclass
class Report:
    """Outcome of a check; ``failures`` are human-readable, one per problem."""

    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, msg: str) -> None:
        self.failures.append(msg)

    def extend(self, other: "Report", prefix: str = "") -> None:
        self.failures.extend(prefix + f for f in other.failures)

    def __bool__(self):
        return self.ok


def pair_violations(structure, new_pairs, old_pairs=()) -> list[Violation]:
    """Violations among ``new_pairs`` and between new and old pairs."""
    enc = structure.encode
    leq = structure.leq
    out = []
    new_pairs = list(new_pairs)
    old_pairs = list(old_pairs)
    for i, (x1, y1) in enumerate(new_pairs):
        for x2, y2 in old_pairs + new_pairs[:i]:
            shown = ((x1, y1), (x2, y2))
            if x1 == x2:
                out.append(Violation("functional", *shown, f"{enc(x1)} has two images {enc(y1)}, {enc(y2)}"))
                continue
            if y1 == y2:
                out.append(Violation("injective", *shown, f"{enc(x1)} and {enc(x2)} both map to {enc(y1)}"))
                continue
            if leq(x1, x2) and not leq(y1, y2):
                out.append(Violation("homomorphism", *shown,
                                     f"{enc(x1)} <= {enc(x2)} but {enc(y1)} </= {enc(y2)}"))
            if leq(x2, x1) and not leq(y2, y1):
                out.append(Violation("homomorphism", (x2, y2), (x1, y1),
                                     f"{enc(x2)} <= {enc(x1)} but {enc(y2)} </= {enc(y1)}"))
    return out


def verify_partial_condensation(m: PartialCondensation) -> list[Violation]:
    """All invariant failures over all ordered pairs of entries; empty means ok."""
    return pair_violations(m.structure, m.pairs)


def is_partial_condensation(m: PartialCondensation) -> bool:
    return not verify_partial_condensation(m)


def find_bad_witness(m: PartialCondensation):
    """Least pair (by index of x1, then x2) with x1 </= x2 but f(x1) <= f(x2)."""
    s = m.structure
    dom = sorted(m.dom, key=s.index_of)
    for x1 in dom:
        y1 = m(x1)
        for x2 in dom:
            if x1 != x2 and not s.leq(x1, x2) and s.leq(y1, m(x2)):
                return BadWitness(x1, x2, y1, m(x2))
    return None


def is_extension(small: PartialCondensation, big: PartialCondensation) -> bool:
    return all(p in big for p in small.pairs)
