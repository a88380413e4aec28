"""Finite partial functions omega -> omega, and finitely supported functions.

Both are stored as sorted tuples of ``(key, value)`` pairs. The enumeration
reads the function as the sequence e_0, e_1, ... (last entry nonzero) and
codes it with :func:`coding.trailing_seq_to_nat`.
"""
from __future__ import annotations

from itertools import product

from .base import (
    DIRECTED,
    HAS_MIN_SET,
    LOCALLY_FINITE_BELOW,
    ROOTED,
    SELF_EMBEDDING_ABOVE,
    Structure,
)
from .coding import nat_to_trailing_seq, trailing_seq_to_nat
from ..errors import ParseError


def fn(mapping) -> tuple:
    return tuple(sorted(dict(mapping).items()))


def encode_fn(f) -> str:
    return "{" + ",".join(f"{k}:{v}" for k, v in f) + "}"


def parse_fn(s: str) -> tuple:
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError(f"expected {{k:v,...}}: {s!r}")
    body = s[1:-1]
    if not body:
        return ()
    items = []
    for part in body.split(","):
        k, v = part.split(":")
        items.append((int(k), int(v)))
    if any(k < 0 or v < 0 for k, v in items):
        raise ParseError(f"negative entry in {s!r}")
    if len({k for k, _ in items}) != len(items):
        raise ParseError(f"repeated key in {s!r}")
    return tuple(sorted(items))


def _least_unused_key(f) -> int:
    keys = {k for k, _ in f}
    m = 0
    while m in keys:
        m += 1
    return m


def _pointwise_max(S) -> dict:
    out: dict = {}
    for f in S:
        for k, v in f:
            out[k] = max(out.get(k, v), v)
    return out


class FnOmega(Structure):
    """Fn(omega, omega): f <= g iff dom f is inside dom g and f <= g pointwise there."""

    id = "fn-omega"
    capabilities = frozenset({LOCALLY_FINITE_BELOW, ROOTED, DIRECTED, HAS_MIN_SET})
    strategies = ("well-founded",)
    summary = "finite partial functions Fn(omega, omega) are not reversible"
    root = ()

    def leq(self, f, g):
        gd = dict(g)
        return all(k in gd and v <= gd[k] for k, v in f)

    def enumerate(self, n):
        e = nat_to_trailing_seq(n)
        return tuple((i, x - 1) for i, x in enumerate(e) if x > 0)

    def index_of(self, f):
        if not f:
            return 0
        e = [0] * (f[-1][0] + 1)
        for k, v in f:
            e[k] = v + 1
        return trailing_seq_to_nat(e)

    def encode(self, f):
        return encode_fn(f)

    def _parse(self, s):
        return parse_fn(s)

    def principal_ideal(self, f):
        options = [[None] + list(range(v + 1)) for _, v in f]
        keys = [k for k, _ in f]
        return frozenset(
            tuple((k, v) for k, v in zip(keys, choice) if v is not None)
            for choice in product(*options)
        )

    def layer_one(self):
        a = 0
        while True:
            yield ((a, 0),)
            a += 1

    def upper_bound(self, S):
        return fn(_pointwise_max(S))

    def strict_upper_bound(self, S):
        ub = _pointwise_max(S)
        ub[_least_unused_key(ub.items())] = 0
        return fn(ub)

    def step_up(self, f):
        if not f:
            return ((0, 0),)
        (k, v), rest = f[0], f[1:]
        return ((k, v + 1),) + rest

    def covers(self, f):
        d = dict(f)
        out = [fn({**d, k: v + 1}) for k, v in f]
        top = f[-1][0] + 1 if f else 0
        out += [fn({**d, k: 0}) for k in range(top + 1) if k not in d]
        return out

    def least_cover(self, f):
        return min(self.covers(f), key=self.index_of)

    @staticmethod
    def height(f) -> int:
        return len(f) + sum(v for _, v in f)


class FinSupport(Structure):
    """Functions omega -> omega with finite support, ordered pointwise."""

    id = "fin-support"
    capabilities = frozenset(
        {LOCALLY_FINITE_BELOW, ROOTED, DIRECTED, HAS_MIN_SET, SELF_EMBEDDING_ABOVE}
    )
    strategies = ("rooted-directed", "well-founded")
    summary = "finitely supported functions omega -> omega are not reversible"
    root = ()

    def leq(self, f, g):
        gd = dict(g)
        return all(v <= gd.get(k, 0) for k, v in f)

    def enumerate(self, n):
        e = nat_to_trailing_seq(n)
        return tuple((i, x) for i, x in enumerate(e) if x > 0)

    def index_of(self, f):
        if not f:
            return 0
        e = [0] * (f[-1][0] + 1)
        for k, v in f:
            e[k] = v
        return trailing_seq_to_nat(e)

    def encode(self, f):
        return encode_fn(f)

    def _parse(self, s):
        f = parse_fn(s)
        if any(v == 0 for _, v in f):
            raise ParseError(f"fin-support lists only nonzero values: {s!r}")
        return f

    def principal_ideal(self, f):
        keys = [k for k, _ in f]
        return frozenset(
            tuple((k, v) for k, v in zip(keys, choice) if v)
            for choice in product(*[range(v + 1) for _, v in f])
        )

    def layer_one(self):
        a = 0
        while True:
            yield ((a, 1),)
            a += 1

    def upper_bound(self, S):
        return fn(_pointwise_max(S))

    def strict_upper_bound(self, S):
        ub = _pointwise_max(S)
        ub[_least_unused_key(ub.items())] = 1
        return fn(ub)

    def step_up(self, f):
        if not f:
            return ((0, 1),)
        (k, v), rest = f[0], f[1:]
        return ((k, v + 1),) + rest

    @staticmethod
    def add(f, g):
        out = dict(f)
        for k, v in g:
            out[k] = out.get(k, 0) + v
        return fn(out)

    def embed_ideal_above(self, a, p):
        return {g: self.add(p, g) for g in self.principal_ideal(a)}

    def least_cover(self, f):
        top = f[-1][0] + 1 if f else 0
        return min(
            (self.add(f, ((k, 1),)) for k in range(top + 1)), key=self.index_of
        )
