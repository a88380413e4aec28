"""Generic run driver, certificate verification and closure-operator laws.

The driver is the omega-instance of a generic filter: it alternates the
dense sets "a is in dom" and "b is in ran", always taking the least-index
element not yet handled.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .certificate import Certificate, CertificateFormatError
from .condensation import (
    BadWitness,
    PartialCondensation,
    find_bad_witness,
    pair_violations,
)
from .errors import ParseError, RevcondError, StrategyError
from .invariants import (
    CONVEX_BOUNDED,
    INVARIANTS,
    OPEN_BOUNDED,
    OPEN_DOMAIN,
    Regions,
    convex_lattice_failures,
    convex_sampled_failures,
    open_domain_failures,
)
from .structures.planes import in_box, vadd

TRANSFERS = ("product-lift", "subset-lift")


def coverage_prefix(structure, have) -> int:
    """Largest k such that the first k enumerated elements are all in ``have``."""
    k = 0
    while True:
        try:
            x = structure.enumerate(k)
        except IndexError:
            return k
        if x not in have:
            return k
        k += 1


def _least_missing(structure, have, start: int) -> int:
    while structure.enumerate(start) in have:
        start += 1
    return start


def run_generic(strategy, n_targets: int) -> Certificate:
    if n_targets < 0:
        raise ValueError("n_targets must be >= 0")
    s = strategy.structure
    enc = s.encode
    phi = strategy.seed
    ptr = {"dom": 0, "ran": 0}
    steps = []
    for i in range(n_targets):
        strategy.before_step()
        kind = "dom" if i % 2 == 0 else "ran"
        have = phi.dom if kind == "dom" else phi.ran
        ptr[kind] = _least_missing(s, have, ptr[kind])
        target = s.enumerate(ptr[kind])
        try:
            if kind == "dom":
                res = strategy.extend_dom(phi, target)
            else:
                res = strategy.extend_ran(phi, target)
        except RevcondError as exc:
            raise StrategyError(f"step {i} ({kind} {enc(target)}): {exc}") from exc
        phi = phi.extend(res.added)
        if target not in (phi.dom if kind == "dom" else phi.ran):
            raise StrategyError(f"step {i} ({kind} {enc(target)}): target not covered")
        step = {"kind": kind, "target": enc(target),
                "added": [[enc(x), enc(y)] for x, y in res.added]}
        if res.bounds is not None:
            step["bounds"] = res.bounds
        if res.region is not None:
            step["region"] = res.region
        steps.append(step)
    witness = find_bad_witness(strategy.seed)
    return Certificate(
        structure=s.id,
        strategy=strategy.id,
        invariant=strategy.invariant,
        seed=strategy.seed.to_json(),
        steps=steps,
        final=phi.to_json(),
        bad_witness=witness.to_json(s),
        coverage={
            "dom_prefix": coverage_prefix(s, phi.dom),
            "ran_prefix": coverage_prefix(s, phi.ran),
        },
        bounds=strategy.bounds(),
        extras=strategy.extras(),
    )


# -- verification ---------------------------------------------------------

CHECKS = ("parse", "replay", "condensation", "seed", "bad-witness", "invariant", "coverage")


@dataclass
class VerificationReport:
    checks: dict = field(default_factory=lambda: {c: [] for c in CHECKS})
    sample_seed: int = 0

    def fail(self, check: str, msg: str) -> None:
        self.checks[check].append(msg)

    @property
    def ok(self) -> bool:
        return not any(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [c for c, f in self.checks.items() if f]

    def lines(self, limit: int = 5) -> list[str]:
        out = []
        for c, fails in self.checks.items():
            if not fails:
                out.append(f"PASS {c}")
                continue
            out.append(f"FAIL {c}: {len(fails)} problem(s)")
            out.extend(f"  {m}" for m in fails[:limit])
            if len(fails) > limit:
                out.append(f"  ... {len(fails) - limit} more")
        return out

    def to_json(self) -> dict:
        return {"ok": self.ok, "sample_seed": self.sample_seed, "checks": self.checks}


class _Bounds:
    """Parsed bound record plus the monotonicity check between steps."""

    def __init__(self, s, invariant, raw):
        self.s = s
        self.closed = invariant == OPEN_BOUNDED
        keys = {"q"} if self.closed else {"p", "q"}
        if not isinstance(raw, dict) or set(raw) != keys:
            raise ParseError(f"bounds must have keys {sorted(keys)}")
        self.q = s.parse(raw["q"])
        self.p = None if self.closed else s.parse(raw["p"])

    def widens(self, old: "_Bounds") -> bool:
        s = self.s
        if not s.leq(old.q, self.q):
            return False
        return self.closed or s.leq(self.p, old.p)

    def contains(self, x) -> bool:
        s = self.s
        if self.closed:
            return s.leq(x, self.q)
        return s.lt(self.p, x) and s.lt(x, self.q)

    def describe(self):
        enc = self.s.encode
        return f"(., {enc(self.q)}]" if self.closed else f"({enc(self.p)}, {enc(self.q)})"


def verify_certificate(cert: Certificate, sample_seed: int = 0,
                       sample_shortcut: bool = True) -> VerificationReport:
    """Re-check a certificate from its encoded contents alone.

    ``sample_shortcut`` lets the Q^2 convexity check skip drawing points for
    an interval contained in a single glued box (all draws would pass).
    """
    rep = VerificationReport(sample_seed=sample_seed)
    try:
        s = cert.build_structure()
        seed = PartialCondensation.from_json(s, cert.seed)
        final = PartialCondensation.from_json(s, cert.final)
        steps = []
        for st in cert.steps:
            steps.append((
                st["kind"], s.parse(st["target"]),
                [(s.parse(x), s.parse(y)) for x, y in st["added"]],
            ))
        witness = BadWitness.from_json(s, cert.bad_witness)
    except (ParseError, KeyError, TypeError) as exc:
        rep.fail("parse", str(exc))
        return rep
    if cert.invariant not in INVARIANTS:
        rep.fail("invariant", f"unknown invariant {cert.invariant!r}")
        return rep
    enc = s.encode
    transfer = cert.strategy in TRANSFERS
    inv = cert.invariant
    lazy = s.id == "qxq"
    rng = random.Random(sample_seed)

    # seed
    for v in pair_violations(s, seed.pairs):
        rep.fail("seed", f"seed: {v.invariant}: {v.message}")
    if find_bad_witness(seed) is None:
        rep.fail("seed", "seed has no bad pair")
    if not witness.holds_in(s):
        rep.fail("bad-witness", "recorded witness is not bad: "
                 f"{enc(witness.x1)} <= {enc(witness.x2)} or {enc(witness.y1)} </= {enc(witness.y2)}")
    if not all(p in seed for p in witness.pairs()):
        rep.fail("bad-witness", "recorded witness pairs are not in the seed")

    cur: dict = {}
    cur_ran: dict = {}
    regions = Regions()
    bounds = None

    def check_invariant(label, new_pairs):
        new = [x for x, _ in new_pairs]
        if inv in (OPEN_DOMAIN, OPEN_BOUNDED):
            for f in open_domain_failures(s, cur, new):
                rep.fail("invariant", f"{label}: {f}")
        if inv == CONVEX_BOUNDED:
            if lazy:
                fails = convex_sampled_failures(cur, regions, new, rng, shortcut=sample_shortcut)
            else:
                fails = convex_lattice_failures(cur, new)
            for f in fails:
                rep.fail("invariant", f"{label}: {f}")

    def check_field(label, pts):
        for x in pts:
            if not bounds.contains(x):
                rep.fail("invariant", f"{label}: {enc(x)} is outside {bounds.describe()}")

    def read_bounds(label, raw):
        try:
            return _Bounds(s, inv, raw)
        except (ParseError, TypeError, KeyError) as exc:
            rep.fail("parse", f"{label}: bounds: {exc}")
            return None

    # replay
    for x, y in seed.pairs:
        cur[x] = y
        cur_ran[y] = x
    check_invariant("seed", seed.pairs)
    bounded = inv in (OPEN_BOUNDED, CONVEX_BOUNDED)
    if bounded:
        first = cert.steps[0].get("bounds") if cert.steps else cert.bounds
        # the seed field must sit inside the first recorded bounds
        bounds = read_bounds("seed", first)
        if bounds is not None:
            check_field("seed", [z for pr in seed.pairs for z in pr])

    ptr = {"dom": 0, "ran": 0}
    last_index = -1
    for i, ((kind, target, added), raw) in enumerate(zip(steps, cert.steps)):
        label = f"step {i}"
        if transfer:
            if kind != "dom":
                rep.fail("replay", f"{label}: transfer steps are dom steps, got {kind!r}")
            if s.index_of(target) <= last_index:
                rep.fail("replay", f"{label}: target {enc(target)} out of enumeration order")
            last_index = s.index_of(target)
        else:
            want = "dom" if i % 2 == 0 else "ran"
            if kind != want:
                rep.fail("replay", f"{label}: expected a {want} step, got {kind!r}")
            side = cur if kind == "dom" else cur_ran
            try:
                ptr[kind] = _least_missing(s, side, ptr[kind])
                expected = s.enumerate(ptr[kind])
                if expected != target:
                    rep.fail("replay", f"{label}: target {enc(target)} is not the least "
                             f"missing element {enc(expected)}")
            except IndexError:
                rep.fail("replay", f"{label}: enumeration exhausted")
        # lazily glued points must take their region's translation
        if lazy:
            for x, y in added:
                k = regions.find(x)
                if x not in cur and k is not None and vadd(x, regions.shift_of(k)) != y:
                    rep.fail("replay", f"{label}: {enc(x)} lies in a glued region but "
                             f"maps to {enc(y)}")
        for v in pair_violations(s, added, list(cur.items())):
            rep.fail("condensation", f"{label}: {v.invariant}: {v.message}")
        for x, y in added:
            cur.setdefault(x, y)
            cur_ran.setdefault(y, x)
        covered = target in cur if kind == "dom" else target in cur_ran
        if not covered:
            rep.fail("replay", f"{label}: target {enc(target)} is not covered after the step")
        if not all(cur.get(x) == y for x, y in witness.pairs()):
            rep.fail("bad-witness", f"{label}: witness pairs missing")
        if lazy and "region" in raw:
            try:
                reg = raw["region"]
                boxes = [(s.parse(lo), s.parse(hi)) for lo, hi in reg["boxes"]]
                shift = s.parse(reg["shift"])
            except (ParseError, KeyError, TypeError, ValueError) as exc:
                rep.fail("parse", f"{label}: region: {exc}")
            else:
                regions.add(boxes, shift)
                if (target, vadd(target, shift)) not in added or not any(
                    in_box(target, lo, hi) for lo, hi in boxes
                ):
                    rep.fail("replay", f"{label}: region does not carry the target")
        check_invariant(label, added)
        if bounded:
            nb = read_bounds(label, raw.get("bounds"))
            if nb is None:
                continue
            if bounds is not None and not nb.widens(bounds):
                rep.fail("invariant", f"{label}: bounds shrank")
            bounds = nb
            pts = [z for pr in added for z in pr]
            if lazy and "region" in raw:
                pts += list(regions.corners())
            check_field(label, pts)

    if bounded and cert.steps:
        if cert.bounds != cert.steps[-1].get("bounds"):
            rep.fail("invariant", "final bounds differ from the last step's bounds")

    if set(cur.items()) != set(final.pairs) or len(final.pairs) != len(cur):
        rep.fail("replay", "replaying the steps does not reproduce the final map")
    if not all(p in final for p in seed.pairs):
        rep.fail("seed", "seed is not contained in the final map")
    if not all(p in final for p in witness.pairs()):
        rep.fail("bad-witness", "final map lacks the recorded witness")

    for key, have in (("dom_prefix", cur), ("ran_prefix", cur_ran)):
        actual = coverage_prefix(s, have)
        if cert.coverage.get(key) != actual:
            rep.fail("coverage", f"{key} claims {cert.coverage.get(key)} but is {actual}")
    return rep


def load_and_verify(path, sample_seed: int = 0):
    """(certificate, report); raises CertificateFormatError on malformed input."""
    cert = Certificate.read(path)
    return cert, verify_certificate(cert, sample_seed)


# -- closure operators ----------------------------------------------------

@dataclass(frozen=True)
class ClosureOperator:
    name: str
    apply: Callable[[frozenset], frozenset]


def down_closure_operator(structure) -> ClosureOperator:
    def apply(S):
        out = set()
        for x in S:
            out |= structure.principal_ideal(x)
        return frozenset(out)
    return ClosureOperator(f"down-closure on {structure.id}", apply)


def identity_operator() -> ClosureOperator:
    return ClosureOperator("identity", frozenset)


def add_element_operator(x) -> ClosureOperator:
    return ClosureOperator(f"add {x!r}", lambda S: frozenset(S) | {x})


def check_closure_laws(cl: ClosureOperator, samples) -> list[str]:
    """(cl1) on every sample, (cl2) on every pair of samples."""
    samples = [frozenset(S) for S in samples]
    out = []
    for S in samples:
        if not S <= cl.apply(S):
            out.append(f"(cl1) fails for {sorted(S, key=repr)}")
    for A, B in combinations(samples, 2):
        if cl.apply(A | B) != cl.apply(A) | cl.apply(B):
            out.append(f"(cl2) fails for {sorted(A, key=repr)}, {sorted(B, key=repr)}")
    return out
