from __future__ import annotations

from .base import DIRECTED, DOWNWARD_DIRECTED, Structure, join_encoded, split_top
from .coding import pair, unpair
from ..errors import ParseError


class Product(Structure):
    """Direct product with the componentwise order.

    Index of (x0, x1, ..., xk) is pair(i0, index of the tail), nested to the right.
    """

    strategies = ()

    def __init__(self, factors):
        if len(factors) < 2:
            raise ValueError("a product needs at least two factors")
        self.factors = tuple(factors)
        self.id = "product(" + ",".join(f.id for f in self.factors) + ")"
        self.capabilities = frozenset.intersection(
            *(f.capabilities for f in self.factors)
        ) & {DIRECTED, DOWNWARD_DIRECTED}
        self.summary = "product of posets with a non-reversible first factor"

    def leq(self, x, y):
        return all(f.leq(a, b) for f, a, b in zip(self.factors, x, y))

    def _indices_to_element(self, n, factors):
        if len(factors) == 1:
            return (factors[0].enumerate(n),)
        i, j = unpair(n)
        return (factors[0].enumerate(i),) + self._indices_to_element(j, factors[1:])

    def enumerate(self, n):
        return self._indices_to_element(n, self.factors)

    def _index(self, x, factors):
        if len(factors) == 1:
            return factors[0].index_of(x[0])
        return pair(factors[0].index_of(x[0]), self._index(x[1:], factors[1:]))

    def index_of(self, x):
        return self._index(x, self.factors)

    def encode(self, x):
        return join_encoded(f.encode(a) for f, a in zip(self.factors, x))

    def _parse(self, s):
        parts = split_top(s)
        if len(parts) != len(self.factors):
            raise ParseError(f"{self.id}: expected {len(self.factors)} components in {s!r}")
        return tuple(f.parse(p) for f, p in zip(self.factors, parts))
