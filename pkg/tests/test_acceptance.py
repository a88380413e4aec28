"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""
import sys
import time

import pytest

from revcond.condensation import BadWitness, pair_violations
from revcond.engine import run_generic, verify_certificate
from revcond.oracle import (
    finite_reversibility_scan,
    labeled_posets,
    labeled_posets_by_extension,
    witness_conformance,
)
from revcond.order import FinitePoset, down_closure, levels
from revcond.strategies import make_strategy, product_lift, subset_lift
from revcond.structures import get_structure

CERTS = {}  # criterion label -> (factory, dumped certificate), reused by criterion 12


LINES = []  # printed again in the terminal summary by conftest


def report(n, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    print(line)
    LINES.append(line)
    assert ok, line


def produce(label, factory):
    cert = factory()
    CERTS[label] = (factory, cert.dumps())
    return cert


def run(sid, strategy, n):
    return run_generic(make_strategy(get_structure(sid), strategy), n)


def replay_maps(cert):
    """Cumulative maps after the seed and after each step."""
    s = cert.build_structure()
    m = cert.seed_map(s)
    yield s, m, None
    for step in cert.steps:
        m = m.extend([(s.parse(x), s.parse(y)) for x, y in step["added"]])
        yield s, m, step


def bounds_trail(cert):
    """Recorded closed bound q for the seed state and after each step."""
    s = cert.build_structure()
    first = make_strategy(s, cert.strategy).bounds()["q"]
    return [s.parse(first)] + [s.parse(step["bounds"]["q"]) for step in cert.steps]


def test_criterion_01_finite_reversibility():
    t0 = time.perf_counter()
    rep = finite_reversibility_scan(4)
    by_ext = [sum(1 for _ in labeled_posets_by_extension(n)) for n in range(5)]
    counts = [s["posets"] for s in rep["sizes"]]
    same = {fp.leq for fp in labeled_posets(4)} == {fp.leq for fp in labeled_posets_by_extension(4)}
    dt = time.perf_counter() - t0
    ok = rep["bad"] == 0 and counts == by_ext == [1, 1, 3, 19, 219] and same and dt < 10
    report(1, ok, f"posets per size {counts}, bad bijections {rep['bad']}, {dt:.2f}s (< 10s)")


def test_criterion_02_divisibility():
    t0 = time.perf_counter()
    cert = produce("divisibility", lambda: run("divisibility", "well-founded", 400))
    rep = verify_certificate(cert)
    dt = time.perf_counter() - t0
    final = cert.final_map()
    want = set(range(1, 201))
    covered = want <= set(final.dom) and want <= set(final.ran)
    w = BadWitness(3, 2, 2, 4)
    every_step = all(set(w.pairs()) <= set(m.pairs) and w.holds_in(s)
                     for s, m, _ in replay_maps(cert))
    ok = rep.ok and covered and every_step and cert.witness() == w and dt < 5
    report(2, ok, f"verified={rep.ok}, 1..200 in dom and ran={covered}, "
                  f"witness (3,2)->(2,4) at every step={every_step}, {dt:.2f}s (< 5s)")


def test_criterion_03_finite_sets_both_strategies():
    details, ok = [], True
    for strategy in ("well-founded", "rooted-directed"):
        cert = produce(f"finite-sets/{strategy}", lambda st=strategy: run("finite-sets", st, 300))
        rep = verify_certificate(cert)
        open_ok = bounds_ok = True
        trail = bounds_trail(cert) if strategy == "rooted-directed" else None
        for i, (s, m, _) in enumerate(replay_maps(cert)):
            dom = set(m.dom)
            open_ok &= down_closure(s, dom) == dom
            if trail:
                bounds_ok &= all(s.leq(z, trail[i]) for z in dom | set(m.ran))
        ok &= rep.ok and open_ok and bounds_ok
        extra = f" bounds dominate field={bounds_ok}" if trail else ""
        details.append(f"{strategy}: verified={rep.ok} open-domain={open_ok}{extra}")
    report(3, ok, "; ".join(details))


def test_criterion_04_level_restricted():
    cert = produce("level-restricted", lambda: run("level-restricted(even)", "well-founded", 200))
    s = cert.build_structure()
    sizes_ok = all(len(x) % 2 == 0 for p in cert.final_map(s).pairs for x in p)
    rep = verify_certificate(cert)
    report(4, rep.ok and sizes_ok, f"level-restricted(even) 200 targets: verified={rep.ok}, "
                                   f"all sizes in A={sizes_ok}")


def test_criterion_05_fn_omega():
    cert = produce("fn-omega", lambda: run("fn-omega", "well-founded", 300))
    rep = verify_certificate(cert)
    fn = get_structure("fn-omega")
    frag = down_closure(fn, [fn.enumerate(i) for i in range(120)])
    dec = levels(FinitePoset.from_structure(fn, frag))
    mismatches = sum(dec.height[f] != len(f) + sum(v for _, v in f) for f in frag)
    ok = rep.ok and len(frag) >= 100 and mismatches == 0
    report(5, ok, f"verified={rep.ok}, level formula on {len(frag)} down-closed elements: "
                  f"{mismatches} mismatches")


def test_criterion_06_fin_support():
    cert = produce("fin-support", lambda: run("fin-support", "rooted-directed", 300))
    rep = verify_certificate(cert)
    report(6, rep.ok, f"fin-support rooted-directed 300 targets: verified={rep.ok}")


def test_criterion_07_half_plane():
    cert = produce("half-plane", lambda: run("half-plane", "rooted-directed", 300))
    rep = verify_certificate(cert)
    open_ok = bounded = True
    trail = bounds_trail(cert)
    for i, (s, m, _) in enumerate(replay_maps(cert)):
        dom = set(m.dom)
        open_ok &= down_closure(s, dom) == dom
        bounded &= all(s.leq(z, trail[i]) for z in dom | set(m.ran))
    ok = rep.ok and open_ok and bounded
    report(7, ok, f"half-plane 300 targets: verified={rep.ok}, open-domain={open_ok}, "
                  f"bounded field={bounded}")


def test_criterion_08_convex_planes():
    from revcond.invariants import convex_lattice_failures
    zz = produce("zxz", lambda: run("zxz", "convex", 300))
    rep_z = verify_certificate(zz)
    final_z = convex_lattice_failures(set(zz.final_map().dom))
    qq = produce("qxq", lambda: run("qxq", "convex", 300))
    rep_q = verify_certificate(qq, sample_seed=0, sample_shortcut=False)
    ok = rep_z.ok and not final_z and rep_q.ok
    report(8, ok, f"zxz exact intervals every step: verified={rep_z.ok} (final scan "
                  f"{len(final_z)} gaps); qxq 100-point sampling: verified={rep_q.ok}")


def test_criterion_09_random_poset():
    t0 = time.perf_counter()
    seed = 7
    print(f"random-poset conformance seed {seed}")
    conf = witness_conformance(get_structure("random-poset"), 500, seed=seed)
    cert = produce("random-poset", lambda: run("random-poset", "universal", 200))
    rep = verify_certificate(cert)
    dt = time.perf_counter() - t0
    ok = conf.ok and rep.ok and dt < 30
    report(9, ok, f"500 witness trials, seed {seed} printed: {conf.checks} checks, {len(conf.failures)} failures; "
                  f"universal 200 targets verified={rep.ok}; {dt:.2f}s (< 30s)")


def test_criterion_10_product_lift():
    src = run("divisibility", "well-founded", 400)
    cert = produce("product-lift", lambda: product_lift(src, ["z"], 200))
    rep = verify_certificate(cert)
    s = cert.build_structure()
    w = cert.witness(s)
    want = ((3, 0), (2, 0), (2, 0), (4, 0))
    ok = rep.ok and (w.x1, w.x2, w.y1, w.y2) == want and w.holds_in(s)
    report(10, ok, f"divisibility x Z, 200-element prefix: verified={rep.ok}, "
                   f"witness {s.encode(w.x1)},{s.encode(w.x2)} -> {s.encode(w.y1)},{s.encode(w.y2)}")


def test_criterion_11_subset_lift():
    src = run("finite-sets", "well-founded", 300)
    cert = produce("subset-lift", lambda: subset_lift(src, "even", 128))
    s = cert.build_structure()
    m = cert.final_map(s)
    F = dict(m.pairs)
    injective = len(set(F.values())) == len(F)
    order_ok = not pair_violations(s, m.pairs)
    w = cert.witness(s)
    bad_ok = w.holds_in(s) and set(w.pairs()) <= set(m.pairs)
    codes = [frozenset(i for i in range(7) if n >> i & 1) for n in range(128)]
    off_y = [A for A in codes if all(x % 2 for x in A)]
    identity = all(A in F and F[A] == A for A in off_y)
    rep = verify_certificate(cert)
    ok = injective and order_ok and bad_ok and identity and rep.ok and len(F) > 0
    report(11, ok, f"Y=evens on codes 0..127: {len(F)} evaluated, injective={injective}, "
                   f"order-preserving={order_ok}, bad witness={bad_ok}, identity off Y on "
                   f"{len(off_y)} sets={identity}, verified={rep.ok}")


def test_criterion_12_determinism():
    if len(CERTS) < 11:
        pytest.skip("run the whole acceptance module first")
    diffs = [label for label, (factory, dumped) in CERTS.items() if factory().dumps() != dumped]
    report(12, not diffs, f"{len(CERTS)} acceptance runs repeated: "
                          f"{'all byte-identical' if not diffs else 'differ: ' + ', '.join(diffs)}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
