"""Open-domain strategies for rooted well-founded posets.

Both keep dom downward closed. The rooted-directed variant also keeps the
whole field below a recorded bound q, so the next domain extension can be
glued far above everything with a self-embedding of the principal ideal.
"""
from __future__ import annotations

from ..invariants import (
    OPEN_BOUNDED,
    OPEN_DOMAIN,
    closed_bound_failures,
    open_domain_failures,
)
from ..order import FinitePoset, linear_extension
from ..errors import StrategyError
from .base import StepResult, Strategy


def _two_minimal(structure):
    layer = structure.layer_one()
    return next(layer), next(layer)


class WellFounded(Strategy):
    id = "well-founded"
    invariant = OPEN_DOMAIN
    seed_names = ("r", "a0", "a1", "b0")

    def default_choices(self):
        s = self.structure
        a0, a1 = _two_minimal(s)
        return {"r": s.root, "a0": a0, "a1": a1, "b0": s.least_cover(a0)}

    def seed_pairs(self, c):
        return [(c["r"], c["r"]), (c["a0"], c["b0"]), (c["a1"], c["a0"])]

    def invariant_failures(self, m):
        return open_domain_failures(self.structure, m.dom)

    def extend_dom(self, phi, a):
        self.require_new_dom(phi, a)
        s = self.structure
        ideal = s.principal_ideal(a)
        fresh = [x for x in ideal if x not in phi.dom]
        below = [phi(x) for x in ideal if x in phi.dom]
        if not below:
            raise StrategyError(f"root missing below {s.encode(a)}")
        p = s.upper_bound(below)
        chain = s.increasing_chain_above(p, phi.ran, len(fresh))
        order = linear_extension(FinitePoset.from_structure(s, fresh))
        return StepResult(list(zip(order, chain)))

    def extend_ran(self, phi, b):
        self.require_new_ran(phi, b)
        a = self.structure.fresh_min_avoiding(phi.dom)
        return StepResult([(a, b)])


class RootedDirected(Strategy):
    id = "rooted-directed"
    invariant = OPEN_BOUNDED

    @property
    def seed_names(self):
        return ("a0", "a1", "b0") if self.structure.root is None else ("r", "a0", "a1", "b0")

    def default_choices(self):
        s = self.structure
        a0, a1 = _two_minimal(s)
        c = {"a0": a0, "a1": a1, "b0": s.least_cover(a0)}
        if s.root is not None:
            c["r"] = s.root
        return c

    def seed_pairs(self, c):
        out = [(c["r"], c["r"])] if "r" in c else []
        return out + [(c["a0"], c["b0"]), (c["a1"], c["a0"])]

    def invariant_failures(self, m):
        return open_domain_failures(self.structure, m.dom)

    def start(self, seed):
        self.q = self.structure.upper_bound(list(seed.dom) + list(seed.ran))

    def bounds(self):
        return {"q": self.structure.encode(self.q)}

    def extend_dom(self, phi, a):
        self.require_new_dom(phi, a)
        s = self.structure
        p = s.strict_upper_bound([self.q])
        eta = s.embed_ideal_above(a, p)
        added = [(x, eta[x]) for x in s.sorted(eta) if x not in phi.dom]
        self.q = s.strict_upper_bound([a, eta[a], self.q])
        return StepResult(added, self.bounds())

    def extend_ran(self, phi, b):
        self.require_new_ran(phi, b)
        s = self.structure
        a = next(x for x in s.layer_one() if not s.leq(x, self.q))
        self.q = s.strict_upper_bound([a, b, self.q])
        return StepResult([(a, b)], self.bounds())

    def field_failures(self, m):
        return closed_bound_failures(self.structure, self.q, list(m.dom) + list(m.ran))
