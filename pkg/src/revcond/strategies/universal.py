"""Back-and-forth inside the random poset, grown on demand.

Every extension asks the poset for a one-point extension witness, so the
witness is always a fresh vertex. Before each step one background vertex
is grown from a seeded generator, so the schedule also meets vertices the
construction did not create itself.
"""
from __future__ import annotations

from ..errors import CapabilityError
from ..invariants import NONE
from ..structures.random_poset import RandomPoset
from .base import StepResult, Strategy


class Universal(Strategy):
    id = "universal"
    invariant = NONE
    seed_names = ("a0", "a1", "b0", "b1")

    def __init__(self, structure, seed_spec=None, background: bool = True):
        if not isinstance(structure, RandomPoset):
            raise CapabilityError(f"{structure.id} has no one-point extension witnesses")
        self.background = background
        if len(structure.state) == 0:
            # a0 || a1, and b0 < b1 with both incomparable to a0, a1
            w = structure.witness
            v0 = w()
            v1 = w(U=[v0])
            v2 = w(U=[v0, v1])
            w(L=[v2], U=[v0, v1])
        super().__init__(structure, seed_spec)

    def default_choices(self):
        return {"a0": 0, "a1": 1, "b0": 2, "b1": 3}

    def seed_pairs(self, c):
        return [(c["a0"], c["b0"]), (c["a1"], c["b1"])]

    def before_step(self):
        if self.background:
            self.structure.grow()

    def extend_dom(self, phi, a):
        self.require_new_dom(phi, a)
        s = self.structure
        low = {phi(x) for x in phi.dom if s.lt(x, a)}
        high = {phi(x) for x in phi.dom if s.lt(a, x)}
        # keep b incomparable to every other range element the axioms allow
        free = [
            y for y in phi.ran
            if y not in low and y not in high
            and not any(s.lt(y, l) for l in low)
            and not any(s.lt(g, y) for g in high)
        ]
        b = s.witness(low, high, free)
        return StepResult([(a, b)])

    def extend_ran(self, phi, b):
        self.require_new_ran(phi, b)
        a = self.structure.witness((), (), phi.dom)
        return StepResult([(a, b)])

    def extras(self):
        return {"poset": self.structure.state.to_json()}
