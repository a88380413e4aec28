"""Convex domain and bounded field on Z^2 and Q^2.

The field always sits inside an open box (p, q). A new domain point a is
either above part of dom (glue the interval between dom and a by the
translation sending p to q), below part of dom (dual, q to p), or
incomparable to dom (send it outside the box).

On Z^2 every glued lattice point is materialized. On Q^2 the glued set is
infinite, so only the target is materialized and the region is recorded;
later targets falling inside a region take its translation.
"""
from __future__ import annotations

from ..errors import StrategyError
from ..invariants import (
    CONVEX_BOUNDED,
    Regions,
    convex_lattice_failures,
    convex_sampled_failures,
    open_box_failures,
)
from ..structures.planes import QxQ, box_points, vadd, vsub
from .base import StepResult, Strategy

import random


def _minimal(points):
    pts = sorted(set(points))
    return [x for x in pts if not any(y != x and y[0] <= x[0] and y[1] <= x[1] for y in pts)]


def _maximal(points):
    pts = sorted(set(points))
    return [x for x in pts if not any(y != x and x[0] <= y[0] and x[1] <= y[1] for y in pts)]


class Convex(Strategy):
    id = "convex"
    invariant = CONVEX_BOUNDED
    seed_names = ("a0", "a1", "b0")

    def __init__(self, structure, seed_spec=None):
        self.lazy = isinstance(structure, QxQ)
        self.regions = Regions()
        super().__init__(structure, seed_spec)

    def default_choices(self):
        s = self.structure
        zero, one = s.one - s.one, s.one
        a0, a1 = (zero, one), (one, zero)
        return {"a0": a0, "a1": a1, "b0": s.upper_bound([a0, a1])}

    def seed_pairs(self, c):
        return [(c["a0"], c["b0"]), (c["a1"], c["a0"])]

    def invariant_failures(self, m):
        if self.lazy:
            return convex_sampled_failures(set(m.dom), self.regions, m.dom, random.Random(0))
        return convex_lattice_failures(m.dom)

    def start(self, seed):
        s = self.structure
        fld = list(seed.dom) + list(seed.ran)
        self.p = s.strict_lower_bound(fld)
        self.q = s.strict_upper_bound(fld)
        self.points = dict(seed.pairs)
        self.values = {y: x for x, y in seed.pairs}

    def bounds(self):
        enc = self.structure.encode
        return {"p": enc(self.p), "q": enc(self.q)}

    def _expand(self, pts):
        s = self.structure
        pts = list(pts)
        self.p = s.strict_lower_bound([self.p] + pts)
        self.q = s.strict_upper_bound([self.q] + pts)

    def _materialize(self, pairs):
        for x, y in pairs:
            self.points[x] = y
            self.values[y] = x

    # -- notional map (materialized points plus recorded regions) --------
    def in_dom(self, x):
        return x in self.points or self.regions.find(x) is not None

    def value(self, x):
        if x in self.points:
            return self.points[x]
        return vadd(x, self.regions.shift_of(self.regions.find(x)))

    def preimage(self, y):
        if y in self.values:
            return self.values[y]
        for k, (_, shift) in enumerate(self.regions.items):
            x = vsub(y, shift)
            if x not in self.points and self.regions.find(x) == k:
                return x
        return None

    # -- (bf1) -----------------------------------------------------------
    def extend_dom(self, phi, a):
        self.require_new_dom(phi, a)
        s = self.structure
        if self.in_dom(a):
            pair = (a, self.value(a))
            self._materialize([pair])
            return StepResult([pair], self.bounds())
        below = [x for x in self.points if s.lt(x, a)]
        above = [x for x in self.points if s.lt(a, x)]
        for lo, hi, _ in self.regions.boxes():
            if s.leq(lo, a):
                below.append(lo)
            if s.leq(a, hi):
                above.append(hi)
        if below and above:
            raise StrategyError(f"dom is not convex around {s.encode(a)}")
        if below:
            # case 1: glue dom-up-set below a, translated into [q, .)
            boxes = [(lo, a) for lo in _minimal(below)]
            shift = s.interval_embed(self.p, a, "above", self.q)
        elif above:
            # case 2: dual, translated into (., p]
            boxes = [(a, hi) for hi in _maximal(above)]
            shift = s.interval_embed(a, self.q, "below", self.p)
        else:
            # case 3: a is incomparable to dom; send it outside the box
            pair = (a, s.incomparable_to_box(self.p, self.q))
            self._materialize([pair])
            self._expand(pair)
            return StepResult([pair], self.bounds())
        if self.lazy:
            self.regions.add(boxes, shift)
            added = [(a, vadd(a, shift))]
            corners = [c for lo, hi in boxes for c in (lo, hi, vadd(lo, shift), vadd(hi, shift))]
            region = {
                "boxes": [[s.encode(lo), s.encode(hi)] for lo, hi in boxes],
                "shift": s.encode(shift),
            }
        else:
            fresh = {z for lo, hi in boxes for z in box_points(lo, hi) if z not in self.points}
            added = [(z, vadd(z, shift)) for z in s.sorted(fresh)]
            corners, region = [], None
        self._materialize(added)
        self._expand([z for pr in added for z in pr] + corners)
        return StepResult(added, self.bounds(), region)

    # -- (bf2) -----------------------------------------------------------
    def extend_ran(self, phi, b):
        self.require_new_ran(phi, b)
        s = self.structure
        x = self.preimage(b)
        if x is not None:
            self._materialize([(x, b)])
            return StepResult([(x, b)], self.bounds())
        pair = (s.incomparable_to_box(self.p, self.q), b)
        self._materialize([pair])
        self._expand(pair)
        return StepResult([pair], self.bounds())
