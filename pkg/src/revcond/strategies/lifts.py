"""Transfers of a bad condensation to bigger posets.

product_lift:  F(x0, x1, ...) = (f0(x0), x1, ...) on a product with first factor X0.
subset_lift:   F(A) = f~(A & Y) | (A - Y) on finite sets, where f~ is f moved
               onto the subset Y along its increasing enumeration.

Both evaluate F on an enumeration prefix and emit a certificate whose steps
add one pair per evaluable prefix element, in enumeration order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..certificate import Certificate
from ..condensation import BadWitness, PartialCondensation
from ..engine import coverage_prefix
from ..errors import SeedError, StrategyError
from ..invariants import NONE
from ..structures.product import Product
from ..structures.registry import get_structure
from ..structures.sets import FiniteSets


def _load(cert: Certificate):
    s = cert.build_structure()
    f = dict(PartialCondensation.from_json(s, cert.final).pairs)
    w = BadWitness.from_json(s, cert.bad_witness)
    if not w.holds_in(s) or any(f.get(x) != y for x, y in w.pairs()):
        raise SeedError("source certificate has no valid bad witness; nothing to lift")
    return s, f, w


def _certificate(structure, strategy, seed_pairs, pairs, witness, extras):
    enc = structure.encode
    seed_dom = {x for x, _ in seed_pairs}
    steps = [{"kind": "dom", "target": enc(x), "added": [[enc(x), enc(y)]]}
             for x, y in pairs if x not in seed_dom]
    final = list(seed_pairs) + [(x, y) for x, y in pairs if x not in seed_dom]
    return Certificate(
        structure=structure.id,
        strategy=strategy,
        invariant=NONE,
        seed=[[enc(x), enc(y)] for x, y in seed_pairs],
        steps=steps,
        final=[[enc(x), enc(y)] for x, y in final],
        bad_witness=witness.to_json(structure),
        coverage={
            "dom_prefix": coverage_prefix(structure, {x for x, _ in final}),
            "ran_prefix": coverage_prefix(structure, {y for _, y in final}),
        },
        extras=extras,
    )


def product_lift(f0: Certificate, factors, prefix: int) -> Certificate:
    """Lift f0 across X0 x factors[0] x ..., evaluated on ``prefix`` product elements."""
    x0, f, w = _load(f0)
    facs = [get_structure(s) if isinstance(s, str) else s for s in factors]
    P = Product([x0] + facs)
    tail = tuple(fac.enumerate(0) for fac in facs)

    def F(x):
        return (f[x[0]],) + tuple(x[1:])

    a, b = (w.x1,) + tail, (w.x2,) + tail
    seed = [(a, F(a)), (b, F(b))]
    pairs, partial = [], []
    for n in range(prefix):
        x = P.enumerate(n)
        if x[0] in f:
            pairs.append((x, F(x)))
        else:
            partial.append(P.encode(x))
    if not pairs:
        raise StrategyError("no element of the product prefix is evaluable")
    lifted = BadWitness(a, b, F(a), F(b))
    return _certificate(P, "product-lift", seed, pairs, lifted, {"partial": partial})


@dataclass(frozen=True)
class Subset:
    """An infinite, co-infinite decidable subset Y of omega with y_i its i-th member."""

    name: str
    contains: Callable[[int], bool]
    nth: Callable[[int], int]
    rank: Callable[[int], int]


SUBSETS = {
    "even": Subset("even", lambda n: n % 2 == 0, lambda i: 2 * i, lambda y: y // 2),
    "odd": Subset("odd", lambda n: n % 2 == 1, lambda i: 2 * i + 1, lambda y: y // 2),
}


def transport(Y: Subset, f: dict) -> Callable:
    """f~ on finite subsets of Y: relabel i <-> y_i on both sides of f."""
    def ft(B):
        pre = frozenset(Y.rank(y) for y in B)
        if pre not in f:
            return None
        return frozenset(Y.nth(j) for j in f[pre])
    return ft


def subset_lift(f_cert: Certificate, Y: str | Subset = "even", prefix: int = 128) -> Certificate:
    """F(A) = f~(A & Y) | (A - Y) on the sets with bit-codes 0 .. prefix-1."""
    s, f, w = _load(f_cert)
    if not isinstance(s, FiniteSets):
        raise SeedError(f"subset lift needs a finite-sets certificate, not {s.id}")
    Y = SUBSETS[Y] if isinstance(Y, str) else Y
    ft = transport(Y, f)

    def F(A):
        img = ft(frozenset(x for x in A if Y.contains(x)))
        if img is None:
            return None
        return img | frozenset(x for x in A if not Y.contains(x))

    a = frozenset(Y.nth(i) for i in w.x1)
    b = frozenset(Y.nth(i) for i in w.x2)
    seed = [(a, F(a)), (b, F(b))]
    pairs, partial = [], []
    for n in range(prefix):
        A = s.enumerate(n)
        img = F(A)
        if img is None:
            partial.append(s.encode(A))
        else:
            pairs.append((A, img))
    if not pairs:
        raise StrategyError("no set of the prefix is evaluable")
    lifted = BadWitness(a, b, F(a), F(b))
    return _certificate(s, "subset-lift", seed, pairs, lifted,
                        {"partial": partial, "subset": Y.name})
