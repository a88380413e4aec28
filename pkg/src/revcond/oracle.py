"""Brute-force oracles: finite endomorphism scans, step re-checks, witness conformance."""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations, permutations, product

from .condensation import PartialCondensation, pair_violations
from .errors import CapabilityError, PosetError, PreconditionError
from .invariants import (
    CONVEX_BOUNDED,
    OPEN_BOUNDED,
    OPEN_DOMAIN,
    Regions,
    convex_lattice_failures,
    convex_sampled_failures,
)
from .order import FinitePoset, down_closure
from .structures.base import (
    DIRECTED,
    INTERVAL_EMBEDDINGS,
    LOCALLY_FINITE_BELOW,
    ROOTED,
    SELF_EMBEDDING_ABOVE,
    Structure,
)
from .structures.random_poset import RandomPoset

SCAN_LIMIT = 8
GENERATOR_LIMIT = 6


# -- finite posets ----------------------------------------------------------

@dataclass
class ScanReport:
    size: int
    bijections: int = 0
    homomorphic: int = 0
    automorphisms: int = 0
    bad: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def exhaustive_endo_scan(fp: FinitePoset) -> ScanReport:
    """Classify every bijection of the ground set."""
    n = len(fp)
    if n > SCAN_LIMIT:
        raise PreconditionError(f"scan limited to {SCAN_LIMIT} elements, got {n}")
    fp.check()
    le = fp.leq
    related = [(i, j) for i in range(n) for j in range(n) if i != j and le[i][j]]
    unrelated = [(i, j) for i in range(n) for j in range(n) if i != j and not le[i][j]]
    rep = ScanReport(n)
    for f in permutations(range(n)):
        rep.bijections += 1
        if not all(le[f[i]][f[j]] for i, j in related):
            continue
        rep.homomorphic += 1
        if all(not le[f[i]][f[j]] for i, j in unrelated):
            rep.automorphisms += 1
        else:
            rep.bad.append([fp.elements[k] for k in f])
    return rep


def _valid_table(n, t) -> bool:
    for i in range(n):
        for j in range(n):
            if i != j and t[i][j] and t[j][i]:
                return False
            if t[i][j]:
                for k in range(n):
                    if t[j][k] and not t[i][k]:
                        return False
    return True


def labeled_posets(n: int):
    """All reflexive partial orders on {0..n-1}: every off-diagonal table, filtered."""
    if n > GENERATOR_LIMIT:
        raise PreconditionError(f"poset generation limited to {GENERATOR_LIMIT} points")
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((False, True), repeat=len(off)):
        t = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(off, bits):
            t[i][j] = b
        if _valid_table(n, t):
            yield FinitePoset(tuple(range(n)), tuple(tuple(r) for r in t))


def labeled_posets_by_extension(n: int):
    """Same family, grown one point at a time: the new point gets a down-set D
    and an up-set U of the old poset with D entirely below U."""
    if n == 0:
        yield FinitePoset((), ())
        return
    for fp in labeled_posets_by_extension(n - 1):
        m = n - 1
        le = fp.leq
        idx = range(m)
        downs = [S for r in range(m + 1) for S in combinations(idx, r)
                 if all(j in S for i in S for j in idx if le[j][i])]
        ups = [S for r in range(m + 1) for S in combinations(idx, r)
               if all(j in S for i in S for j in idx if le[i][j])]
        for D in downs:
            for U in ups:
                if set(D) & set(U) or not all(le[d][u] for d in D for u in U):
                    continue
                t = [list(row) + [i in D] for i, row in enumerate(le)]
                t.append([i in U for i in idx] + [True])
                yield FinitePoset(tuple(range(n)), tuple(tuple(r) for r in t))


def finite_reversibility_scan(max_size: int) -> dict:
    if max_size > GENERATOR_LIMIT:
        raise PreconditionError(f"--max-size is limited to {GENERATOR_LIMIT}")
    sizes = []
    for n in range(max_size + 1):
        gen = labeled_posets(n) if n <= 4 else labeled_posets_by_extension(n)
        count = bijections = bad = 0
        for fp in gen:
            r = exhaustive_endo_scan(fp)
            count += 1
            bijections += r.bijections
            bad += len(r.bad)
        sizes.append({"size": n, "posets": count, "bijections": bijections, "bad": bad})
    return {"max_size": max_size, "sizes": sizes, "bad": sum(s["bad"] for s in sizes)}


# -- step re-check ----------------------------------------------------------

def recheck_step(before: PartialCondensation, added, invariant: str, structure: Structure,
                 bounds=None, regions: Regions | None = None, sample_seed: int = 0) -> list[str]:
    """Re-verify one step from scratch; ``bounds`` is (p, q) or (None, q)."""
    out = []
    added = [tuple(p) for p in added]
    before_dom = dict(before.pairs)
    for x, y in added:
        if x in before_dom:
            out.append(f"extension: {structure.encode(x)} already mapped")
    after = PartialCondensation(structure, list(before.pairs) + added)
    for v in pair_violations(structure, after.pairs):
        out.append(f"{v.invariant}: {v.message}")
    dom = set(after.dom)
    fld = dom | set(after.ran)
    if invariant in (OPEN_DOMAIN, OPEN_BOUNDED):
        if down_closure(structure, dom) != dom:
            out.append("open-domain: dom is not downward closed")
    if invariant in (OPEN_BOUNDED, CONVEX_BOUNDED):
        if bounds is None:
            out.append("bounded-field: no bounds given")
        else:
            p, q = bounds
            for z in structure.sorted(fld):
                ok = structure.leq(z, q) if p is None else (
                    structure.lt(p, z) and structure.lt(z, q))
                if not ok:
                    out.append(f"bounded-field: {structure.encode(z)} outside the bounds")
    if invariant == CONVEX_BOUNDED:
        if structure.id == "qxq":
            out += convex_sampled_failures(dom, regions or Regions(), dom,
                                           random.Random(sample_seed))
        else:
            out += convex_lattice_failures(dom)
    return out


# -- witness conformance ----------------------------------------------------

@dataclass
class ConformanceReport:
    structure: str
    trials: int
    seed: int
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"structure": self.structure, "trials": self.trials, "seed": self.seed,
                "checks": self.checks, "failures": self.failures, "ok": self.ok}


class CorruptedOrder:
    """Proxy whose ``leq`` answers wrongly on roughly one pair in ``rate``."""

    def __init__(self, inner: Structure, rate: int = 5):
        self.inner = inner
        self.rate = rate

    def __getattr__(self, name):
        return getattr(self.inner, name)

    def leq(self, x, y):
        truth = self.inner.leq(x, y)
        if x != y and hash((x, y)) % self.rate == 0:
            return not truth
        return truth

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)


def _random_poset_trials(rp: RandomPoset, trials, rng, rep, window, fault):
    st = rp.state
    leq = rp.leq
    while len(st) < window:
        rp.grow()
    for t in range(trials):
        try:
            L, G, U = rp.random_triple(rng, size=3)
            p = rp.witness(L, G, U)
        except (PosetError, PreconditionError) as exc:
            rep.checks += 1
            rep.failures.append(f"trial {t}: {exc}")
            continue
        if fault == "drop-relation" and t == trials // 2 and st.below[p]:
            # fault injection: forget one relation below the new vertex
            st.below[p].discard(min(st.below[p]))
        for l in L:
            rep.checks += 1
            if not (leq(l, p) and l != p):
                rep.failures.append(f"trial {t}: v{l} < v{p} fails")
        for g in G:
            rep.checks += 1
            if not (leq(p, g) and p != g):
                rep.failures.append(f"trial {t}: v{p} < v{g} fails")
        for u in U:
            rep.checks += 1
            if leq(u, p) or leq(p, u):
                rep.failures.append(f"trial {t}: v{p} is comparable to v{u}")
        rep.checks += 1
        bad = st.violations()
        if bad:
            rep.failures.append(f"trial {t}: not a strict order: {bad[0]}")


def _sample(s, rng, window, k):
    return [s.enumerate(rng.randrange(window)) for _ in range(k)]


def _structure_trials(s: Structure, trials, rng, rep, window):
    enc = s.encode

    def fail(t, msg):
        rep.failures.append(f"trial {t}: {msg}")

    for t in range(trials):
        S = _sample(s, rng, window, rng.randint(1, 3))
        if s.has(DIRECTED):
            ub, sub = s.upper_bound(S), s.strict_upper_bound(S)
            for x in S:
                rep.checks += 2
                if not s.leq(x, ub):
                    fail(t, f"upper bound {enc(ub)} is not above {enc(x)}")
                if not s.lt(x, sub):
                    fail(t, f"strict upper bound {enc(sub)} is not above {enc(x)}")
            chain = s.increasing_chain_above(S[0], S[1:], 3)
            rep.checks += 1
            prev = S[0]
            for c in chain:
                if not s.lt(prev, c) or c in S[1:]:
                    fail(t, f"chain above {enc(S[0])} breaks at {enc(c)}")
                prev = c
        if s.has(LOCALLY_FINITE_BELOW):
            x = S[0]
            ideal = s.principal_ideal(x)
            rep.checks += 1
            if x not in ideal or any(not s.leq(y, x) for y in ideal):
                fail(t, f"principal ideal of {enc(x)} is wrong")
            try:
                a = s.fresh_min_avoiding(S)
            except CapabilityError:
                a = None
            if a is not None:
                rep.checks += 1
                below = set(s.principal_ideal(a)) - {a}
                allowed = {s.root} if s.has(ROOTED) else set()
                if a in S or not below <= allowed:
                    fail(t, f"{enc(a)} is not a fresh minimal-layer element")
        if s.has(SELF_EMBEDDING_ABOVE):
            a, p = S[0], _sample(s, rng, window, 1)[0]
            eta = s.embed_ideal_above(a, p)
            m = PartialCondensation(s, sorted(eta.items(), key=lambda kv: s.index_of(kv[0])))
            rep.checks += 1
            if pair_violations(s, m.pairs) or any(not s.leq(p, y) for y in eta.values()):
                fail(t, f"embedding of the ideal of {enc(a)} above {enc(p)} is wrong")
        if s.has(INTERVAL_EMBEDDINGS):
            p = S[0]
            q = s.upper_bound(S)
            r = _sample(s, rng, window, 1)[0]
            a = s.incomparable_to_box(p, q)
            rep.checks += 3
            for corner in (p, q):
                if s.comparable(a, corner):
                    fail(t, f"{enc(a)} is comparable to [{enc(p)}, {enc(q)}]")
            below = s.interval_embed(p, q, "below", r)
            above = s.interval_embed(p, q, "above", r)
            if (q[0] + below[0], q[1] + below[1]) != r or (p[0] + above[0], p[1] + above[1]) != r:
                fail(t, "interval translation misses r")


def witness_conformance(structure: Structure, trials: int, seed: int = 0,
                        window: int = 40, fault: str | None = None) -> ConformanceReport:
    """Random small witness requests on early elements, checked pointwise.

    ``fault``: "drop-relation" (random poset) or "corrupt-leq" (any structure)
    injects a defect so the oracle can be seen failing.
    """
    rng = random.Random(seed)
    rep = ConformanceReport(structure.id, trials, seed)
    if isinstance(structure, RandomPoset):
        _random_poset_trials(structure, trials, rng, rep, window, fault)
        return rep
    s = CorruptedOrder(structure) if fault == "corrupt-leq" else structure
    _structure_trials(s, trials, rng, rep, window)
    return rep
