"""Domain invariants kept by the strategies, as independent checks.

Each function returns a list of failure strings (empty when the invariant
holds). ``new`` restricts the work to what changed since the last check,
assuming the previous state already passed.
"""
from __future__ import annotations

import bisect
import random
from fractions import Fraction

from .structures.base import LOCALLY_FINITE_BELOW
from .structures.planes import in_box, vadd

NONE = "none"
OPEN_DOMAIN = "open-domain"
OPEN_BOUNDED = "open-domain+bounded-field"
CONVEX_BOUNDED = "convex+bounded-field"
INVARIANTS = (NONE, OPEN_DOMAIN, OPEN_BOUNDED, CONVEX_BOUNDED)

CONVEX_SAMPLES = 100
INTERVAL_CAP = 1_000_000


def open_domain_failures(structure, dom, new=None) -> list[str]:
    if not structure.has(LOCALLY_FINITE_BELOW):
        return [f"{structure.id}: open-domain needs locally finite principal ideals"]
    dom = set(dom)
    out = []
    for x in structure.sorted(dom if new is None else new):
        missing = [y for y in structure.principal_ideal(x) if y not in dom]
        if missing:
            y = min(missing, key=structure.index_of)
            out.append(f"dom not downward closed: {structure.encode(y)} <= "
                       f"{structure.encode(x)} is missing")
    return out


def closed_bound_failures(structure, q, field) -> list[str]:
    enc = structure.encode
    return [f"{enc(x)} is not below the bound {enc(q)}"
            for x in structure.sorted(field) if not structure.leq(x, q)]


def open_box_failures(structure, p, q, field) -> list[str]:
    enc = structure.encode
    return [f"{enc(x)} is not inside ({enc(p)}, {enc(q)})"
            for x in structure.sorted(field)
            if not (structure.lt(p, x) and structure.lt(x, q))]


# -- convexity ------------------------------------------------------------

class Regions:
    """Notional domain pieces that were not materialized (dense planes).

    A region is a list of boxes ``(lo, hi)`` with a translation ``shift``.
    A point's value comes from the first region containing it.
    """

    def __init__(self):
        self.items: list[tuple[list, tuple]] = []

    def add(self, boxes, shift):
        self.items.append((list(boxes), shift))

    def find(self, x):
        for k, (boxes, _) in enumerate(self.items):
            if any(in_box(x, lo, hi) for lo, hi in boxes):
                return k
        return None

    def shift_of(self, k):
        return self.items[k][1]

    def boxes(self):
        for boxes, shift in self.items:
            for lo, hi in boxes:
                yield lo, hi, shift

    def corners(self):
        """Box corners and their images; these bound the notional field."""
        for lo, hi, shift in self.boxes():
            yield from (lo, hi, vadd(lo, shift), vadd(hi, shift))


def _leq2(x, y):
    return x[0] <= y[0] and x[1] <= y[1]


def convex_lattice_failures(dom, new=None, cap: int = INTERVAL_CAP) -> list[str]:
    """Exact convexity in Z^2: enumerate every interval [x, y], x <= y in dom.

    With ``new`` given, only intervals with an endpoint in ``new`` are
    enumerated; intervals between older points were covered before.
    """
    dom = set(dom)
    new = dom if new is None else set(new)
    out = []
    seen = set()
    for n in sorted(new):
        for d in sorted(dom):
            if _leq2(d, n):
                lo, hi = d, n
            elif _leq2(n, d):
                lo, hi = n, d
            else:
                continue
            if (lo, hi) in seen:
                continue
            seen.add((lo, hi))
            size = (hi[0] - lo[0] + 1) * (hi[1] - lo[1] + 1)
            if size > cap:
                out.extend(_staircase_failures(dom, lo, hi))
                continue
            for m in range(lo[0], hi[0] + 1):
                for k in range(lo[1], hi[1] + 1):
                    if (m, k) not in dom:
                        out.append(f"not convex: ({m},{k}) lies in [{lo}, {hi}] but not in dom")
                        break
                else:
                    continue
                break
    return out


def _staircase_failures(dom, lo, hi) -> list[str]:
    # large intervals: a convex set is closed under unit steps that stay below
    # a member, so walking from lo suffices
    inside = {z for z in dom if _leq2(lo, z) and _leq2(z, hi)}
    xs = sorted(inside)
    keys = [z[0] for z in xs]
    suffix = [0] * (len(xs) + 1)
    suffix[len(xs)] = None
    for i in range(len(xs) - 1, -1, -1):
        best = suffix[i + 1]
        suffix[i] = xs[i][1] if best is None else max(best, xs[i][1])

    def below_member(z):
        i = bisect.bisect_left(keys, z[0])
        return i < len(xs) and suffix[i] >= z[1]

    for z in xs:
        for e in ((1, 0), (0, 1)):
            w = vadd(z, e)
            if _leq2(w, hi) and below_member(w) and w not in inside:
                return [f"not convex: {w} lies in [{lo}, {hi}] but not in dom"]
    return []


def notional_member(points, regions: Regions, z) -> bool:
    return z in points or regions.find(z) is not None


def _random_between(rng: random.Random, lo, hi):
    out = []
    for a, b in zip(lo, hi):
        t = Fraction(rng.randrange(1, 1 << 20), 1 << 20)
        out.append(a + (b - a) * t)
    return tuple(out)


def convex_sampled_failures(points, regions: Regions, new, rng: random.Random,
                            samples: int = CONVEX_SAMPLES, shortcut: bool = True) -> list[str]:
    """Sampled convexity in Q^2 for pairs x <= y of materialized domain points.

    ``samples`` random rational points of [x, y] must lie in the notional
    domain: the materialized points plus the recorded regions.
    """
    out = []
    pts = sorted(points)
    for n in sorted(new):
        for d in pts:
            if d == n:
                continue
            if _leq2(d, n):
                lo, hi = d, n
            elif _leq2(n, d):
                lo, hi = n, d
            else:
                continue
            near = Regions()
            for blo, bhi, shift in regions.boxes():
                if _leq2(blo, hi) and _leq2(lo, bhi):
                    near.add([(blo, bhi)], shift)
            # an interval inside one glued box passes every sample; skip drawing
            if shortcut and any(_leq2(blo, lo) and _leq2(hi, bhi) for blo, bhi, _ in near.boxes()):
                continue
            for _ in range(samples):
                z = _random_between(rng, lo, hi)
                if z not in points and near.find(z) is None:
                    out.append(f"not convex: ({z[0]},{z[1]}) lies in [{lo}, {hi}] "
                               f"but not in the domain")
                    break
    return out

