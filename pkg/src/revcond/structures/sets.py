"""Finite subsets of the naturals under inclusion, and level-restricted suborders."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable

from .base import (
    DIRECTED,
    HAS_MIN_SET,
    LOCALLY_FINITE_BELOW,
    ROOTED,
    SELF_EMBEDDING_ABOVE,
    Structure,
)
from ..errors import ParseError


def set_code(s) -> int:
    return sum(1 << i for i in s)


def code_set(n: int) -> frozenset:
    out, i = [], 0
    while n:
        if n & 1:
            out.append(i)
        n >>= 1
        i += 1
    return frozenset(out)


def encode_set(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def parse_set(s: str) -> frozenset:
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError(f"expected {{...}}: {s!r}")
    body = s[1:-1]
    if not body:
        return frozenset()
    vals = [int(v) for v in body.split(",")]
    if any(v < 0 for v in vals):
        raise ParseError(f"negative member in {s!r}")
    return frozenset(vals)


def least_unused(s) -> int:
    m = 0
    while m in s:
        m += 1
    return m


def subsets(s):
    items = sorted(s)
    for r in range(len(items) + 1):
        for c in combinations(items, r):
            yield frozenset(c)


class FiniteSets(Structure):
    """Finite subsets of omega; the set with bit-code n is the n-th element."""

    id = "finite-sets"
    capabilities = frozenset(
        {LOCALLY_FINITE_BELOW, ROOTED, DIRECTED, HAS_MIN_SET, SELF_EMBEDDING_ABOVE}
    )
    strategies = ("well-founded", "rooted-directed")
    summary = "[omega]^<omega under inclusion is not reversible"
    root = frozenset()

    def leq(self, x, y):
        return x <= y

    def enumerate(self, n):
        return code_set(n)

    def index_of(self, x):
        return set_code(x)

    def encode(self, x):
        return encode_set(x)

    def _parse(self, s):
        return parse_set(s)

    def principal_ideal(self, p):
        return frozenset(subsets(p))

    def layer_one(self):
        m = 0
        while True:
            yield frozenset({m})
            m += 1

    def upper_bound(self, S):
        return frozenset().union(*S)

    def strict_upper_bound(self, S):
        u = frozenset().union(*S)
        return u | {least_unused(u)}

    def least_cover(self, p):
        return p | {least_unused(p)}

    def embed_ideal_above(self, a, p):
        shift = max(p) + 1 if p else 0
        return {A: p | {x + shift for x in A} for A in subsets(a)}


@dataclass(frozen=True)
class SizeSet:
    """A decidable infinite set of sizes containing 0."""

    name: str
    contains: Callable[[int], bool]

    @classmethod
    def parse(cls, name: str) -> "SizeSet":
        if name == "all":
            return cls(name, lambda n: n >= 0)
        if name == "even":
            return cls(name, lambda n: n % 2 == 0)
        if name == "odd0":
            return cls(name, lambda n: n == 0 or n % 2 == 1)
        if name.startswith("mod:"):
            k = int(name[4:])
            if k < 1:
                raise ParseError(f"bad size set {name!r}")
            return cls(name, lambda n: n % k == 0)
        raise ParseError(f"unknown size set {name!r} (use all, even, odd0, mod:K)")

    def next_after(self, n: int) -> int:
        m = n + 1
        while not self.contains(m):
            m += 1
        return m


def _same_popcount_successor(c: int) -> int:
    # Gosper's hack: next integer with the same number of 1-bits
    low = c & -c
    ripple = c + low
    return ripple | (((c ^ ripple) >> 2) // low)


class LevelRestricted(Structure):
    """Finite sets whose size lies in ``sizes``, ordered by inclusion.

    Enumeration lists the admissible bit-codes in increasing order.
    """

    capabilities = frozenset({LOCALLY_FINITE_BELOW, ROOTED, DIRECTED, HAS_MIN_SET})
    strategies = ("well-founded",)
    root = frozenset()

    def __init__(self, sizes: SizeSet | str = "all"):
        if isinstance(sizes, str):
            sizes = SizeSet.parse(sizes)
        self.sizes = sizes
        self.id = f"level-restricted({sizes.name})"
        self.first_size = sizes.next_after(0)
        self.summary = (
            f"suborder of [omega]^<omega with sizes in {sizes.name} is not reversible"
        )

    def _ok(self, s) -> bool:
        return self.sizes.contains(len(s))

    def leq(self, x, y):
        return x <= y

    def count_below(self, N: int) -> int:
        """Number of admissible codes c with c < N."""
        total, ones = 0, 0
        for i in range(N.bit_length() - 1, -1, -1):
            if N >> i & 1:
                total += sum(comb(i, k) for k in range(i + 1) if self.sizes.contains(ones + k))
                ones += 1
        return total

    def index_of(self, x):
        return self.count_below(set_code(x))

    def enumerate(self, n):
        hi = 1
        while self.count_below(hi) <= n:
            hi *= 2
        lo = 0
        # least c with count_below(c + 1) > n
        while lo < hi:
            mid = (lo + hi) // 2
            if self.count_below(mid + 1) > n:
                hi = mid
            else:
                lo = mid + 1
        return code_set(lo)

    def encode(self, x):
        return encode_set(x)

    def _parse(self, s):
        x = parse_set(s)
        if not self._ok(x):
            raise ParseError(f"{self.id}: size {len(x)} not admissible")
        return x

    def principal_ideal(self, p):
        return frozenset(A for A in subsets(p) if self._ok(A))

    def layer_one(self):
        c = (1 << self.first_size) - 1
        while True:
            yield code_set(c)
            c = _same_popcount_successor(c)

    def _pad(self, u):
        u = set(u)
        while not self._ok(u):
            u.add(least_unused(u))
        return frozenset(u)

    def upper_bound(self, S):
        return self._pad(frozenset().union(*S))

    def strict_upper_bound(self, S):
        u = frozenset().union(*S)
        return self._pad(u | {least_unused(u)})

    def least_cover(self, p):
        return self.strict_upper_bound([p])
