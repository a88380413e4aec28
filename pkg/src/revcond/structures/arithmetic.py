from __future__ import annotations

from math import lcm

from .base import (
    DIRECTED,
    DOWNWARD_DIRECTED,
    HAS_MIN_SET,
    LOCALLY_FINITE_BELOW,
    ROOTED,
    SELF_EMBEDDING_ABOVE,
    Structure,
)
from .coding import int_to_nat, nat_to_int
from ..errors import ParseError


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes():
    n = 2
    while True:
        if is_prime(n):
            yield n
        n += 1


class Divisibility(Structure):
    """Positive integers ordered by divisibility; enumeration n -> n + 1."""

    id = "divisibility"
    capabilities = frozenset(
        {LOCALLY_FINITE_BELOW, ROOTED, DIRECTED, HAS_MIN_SET, SELF_EMBEDDING_ABOVE}
    )
    strategies = ("well-founded", "rooted-directed")
    summary = "(N, |) is not reversible: rooted well-founded directed poset with finite ideals"
    root = 1

    def leq(self, x, y):
        return y % x == 0

    def enumerate(self, n):
        return n + 1

    def index_of(self, x):
        return x - 1

    def encode(self, x):
        return str(x)

    def _parse(self, s):
        n = int(s)
        if n < 1:
            raise ParseError(f"divisibility: {s!r} is not a positive integer")
        return n

    def principal_ideal(self, p):
        return frozenset(divisors(p))

    def layer_one(self):
        return primes()

    def upper_bound(self, S):
        return lcm(*S)

    def strict_upper_bound(self, S):
        return 2 * lcm(*S)

    def step_up(self, x):
        return 2 * x

    def least_cover(self, p):
        return 2 * p

    def embed_ideal_above(self, a, p):
        # multiplication by p preserves and reflects divisibility
        return {x: p * x for x in divisors(a)}


class IntegerLine(Structure):
    """The integers as a linear order; used as a product factor."""

    id = "z"
    capabilities = frozenset({DIRECTED, DOWNWARD_DIRECTED})
    summary = "linear order (reversible); product factor only"

    def leq(self, x, y):
        return x <= y

    def enumerate(self, n):
        return nat_to_int(n)

    def index_of(self, x):
        return int_to_nat(x)

    def encode(self, x):
        return str(x)

    def _parse(self, s):
        return int(s)

    def upper_bound(self, S):
        return max(S)

    def strict_upper_bound(self, S):
        return max(S) + 1

    def exact_covers(self, p):
        return {p + 1}
