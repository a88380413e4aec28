"""Integer and rational planes with the componentwise order, and the half-plane m+n >= 0."""
from __future__ import annotations

from fractions import Fraction

from .base import (
    DIRECTED,
    DOWNWARD_DIRECTED,
    HAS_MIN_SET,
    INTERVAL_EMBEDDINGS,
    LOCALLY_FINITE_BELOW,
    SELF_EMBEDDING_ABOVE,
    Structure,
    split_top,
)
from .coding import int_to_nat, nat_to_int, nat_to_rational, pair, rational_to_nat, unpair
from ..errors import ParseError


def vadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def vsub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def vmin(points):
    points = list(points)
    return (min(p[0] for p in points), min(p[1] for p in points))


def vmax(points):
    points = list(points)
    return (max(p[0] for p in points), max(p[1] for p in points))


def in_box(z, lo, hi) -> bool:
    return lo[0] <= z[0] <= hi[0] and lo[1] <= z[1] <= hi[1]


def box_points(lo, hi):
    """Lattice points of [lo, hi] in lexicographic order (integer planes only)."""
    for m in range(lo[0], hi[0] + 1):
        for n in range(lo[1], hi[1] + 1):
            yield (m, n)


class _Plane(Structure):
    capabilities = frozenset({DIRECTED, DOWNWARD_DIRECTED, INTERVAL_EMBEDDINGS})
    strategies = ("convex",)
    one = 1

    def leq(self, x, y):
        return x[0] <= y[0] and x[1] <= y[1]

    def _coord(self, s):
        raise NotImplementedError

    def encode(self, x):
        return f"({x[0]},{x[1]})"

    def _parse(self, s):
        parts = split_top(s)
        if len(parts) != 2:
            raise ParseError(f"{self.id}: expected a pair: {s!r}")
        return (self._coord(parts[0]), self._coord(parts[1]))

    def upper_bound(self, S):
        return vmax(S)

    def strict_upper_bound(self, S):
        return vadd(vmax(S), (self.one, self.one))

    def lower_bound(self, S):
        return vmin(S)

    def strict_lower_bound(self, S):
        return vsub(vmin(S), (self.one, self.one))

    def interval_embed(self, p, q, direction: str, r):
        """Translation carrying [p, q] into (.., r] ("below") or [r, ..) ("above")."""
        if not self.leq(p, q):
            raise ValueError(f"interval_embed needs p <= q, got {p}, {q}")
        if direction == "below":
            return vsub(r, q)
        if direction == "above":
            return vsub(r, p)
        raise ValueError(f"direction must be 'below' or 'above', not {direction!r}")

    def incomparable_to_box(self, p, q):
        if not self.leq(p, q):
            raise ValueError(f"incomparable_to_box needs p <= q, got {p}, {q}")
        return (p[0] - self.one, q[1] + self.one)


class ZxZ(_Plane):
    """Z^2; enumerated by square shells around the origin, lexicographic in a shell."""

    id = "zxz"
    summary = "Z^2 is not reversible (convex domains, bounded field, translations)"

    def _coord(self, s):
        return int(s)

    def enumerate(self, n):
        if n == 0:
            return (0, 0)
        s = 1
        while (2 * s + 1) ** 2 <= n:
            s += 1
        k = n - (2 * s - 1) ** 2
        side = 2 * s + 1
        if k < side:
            return (-s, -s + k)
        k -= side
        middle = 2 * (2 * s - 1)
        if k < middle:
            return (-s + 1 + k // 2, -s if k % 2 == 0 else s)
        k -= middle
        return (s, -s + k)

    def index_of(self, x):
        m, n = x
        s = max(abs(m), abs(n))
        if s == 0:
            return 0
        base = (2 * s - 1) ** 2
        side = 2 * s + 1
        if m == -s:
            return base + (n + s)
        if m == s:
            return base + side + 2 * (2 * s - 1) + (n + s)
        return base + side + 2 * (m + s - 1) + (0 if n == -s else 1)

    def exact_covers(self, p):
        return {vadd(p, (1, 0)), vadd(p, (0, 1))}


class QxQ(_Plane):
    """Q^2; a point is the Cantor pairing of the indices of its coordinates."""

    id = "qxq"
    summary = "Q^2 is not reversible (convex domains, bounded field, translations)"
    one = Fraction(1)

    def _coord(self, s):
        return Fraction(s)

    def enumerate(self, n):
        i, j = unpair(n)
        return (nat_to_rational(i), nat_to_rational(j))

    def index_of(self, x):
        return pair(rational_to_nat(Fraction(x[0])), rational_to_nat(Fraction(x[1])))

    def encode(self, x):
        return f"({Fraction(x[0])},{Fraction(x[1])})"

    def exact_covers(self, p):
        return set()  # dense


class HalfPlane(Structure):
    """{(m, n) in Z^2 : m + n >= 0}; index = pair(m + n, zigzag(m))."""

    id = "half-plane"
    capabilities = frozenset(
        {LOCALLY_FINITE_BELOW, DIRECTED, HAS_MIN_SET, SELF_EMBEDDING_ABOVE}
    )
    strategies = ("rooted-directed",)
    summary = "the half-plane m + n >= 0 of Z^2 is not reversible (rootless variant)"

    def leq(self, x, y):
        return x[0] <= y[0] and x[1] <= y[1]

    def enumerate(self, n):
        d, j = unpair(n)
        m = nat_to_int(j)
        return (m, d - m)

    def index_of(self, x):
        return pair(x[0] + x[1], int_to_nat(x[0]))

    def encode(self, x):
        return f"({x[0]},{x[1]})"

    def _parse(self, s):
        parts = split_top(s)
        if len(parts) != 2:
            raise ParseError(f"half-plane: expected a pair: {s!r}")
        x = (int(parts[0]), int(parts[1]))
        if x[0] + x[1] < 0:
            raise ParseError(f"half-plane: {s!r} has m + n < 0")
        return x

    def principal_ideal(self, p):
        m, n = p
        return frozenset((x, y) for x in range(-n, m + 1) for y in range(-x, n + 1))

    def layer_one(self):
        j = 0
        while True:
            m = nat_to_int(j)
            yield (m, -m)
            j += 1

    def upper_bound(self, S):
        return vmax(S)

    def strict_upper_bound(self, S):
        return vadd(vmax(S), (1, 1))

    def exact_covers(self, p):
        return {vadd(p, (1, 0)), vadd(p, (0, 1))}

    def embed_ideal_above(self, a, p):
        # diagonal translation; every x <= a in the half-plane has x >= (-a1, -a0)
        t = max(0, p[0] + a[1], p[1] + a[0])
        return {x: vadd(x, (t, t)) for x in self.principal_ideal(a)}
