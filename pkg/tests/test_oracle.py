import pytest

from revcond.condensation import PartialCondensation
from revcond.errors import PreconditionError
from revcond.invariants import OPEN_DOMAIN, CONVEX_BOUNDED, OPEN_BOUNDED
from revcond.oracle import (
    exhaustive_endo_scan,
    finite_reversibility_scan,
    labeled_posets,
    labeled_posets_by_extension,
    recheck_step,
    witness_conformance,
)
from revcond.order import FinitePoset
from revcond.structures import get_structure

DIV = get_structure("divisibility")


def test_scan_two_chain():
    r = exhaustive_endo_scan(FinitePoset.from_relation("ab", [("a", "b")]))
    assert (r.bijections, r.homomorphic, r.automorphisms, len(r.bad)) == (2, 1, 1, 0)


def test_scan_two_antichain():
    r = exhaustive_endo_scan(FinitePoset.from_relation("ab", []))
    assert (r.bijections, r.homomorphic, r.automorphisms, len(r.bad)) == (2, 2, 2, 0)


def test_scan_diamond():
    fp = FinitePoset.from_relation("ebat", [("e", "a"), ("e", "b"), ("a", "t"), ("b", "t"), ("e", "t")])
    r = exhaustive_endo_scan(fp)
    assert r.bijections == 24 and r.bad == [] and r.automorphisms == 2


def test_scan_guard():
    with pytest.raises(PreconditionError):
        exhaustive_endo_scan(FinitePoset.from_relation(range(9), []))
    with pytest.raises(PreconditionError):
        finite_reversibility_scan(9)


def test_poset_counts_two_routes():
    # labeled posets: 1, 1, 3, 19, 219, 4231
    by_table = [sum(1 for _ in labeled_posets(n)) for n in range(5)]
    by_ext = [sum(1 for _ in labeled_posets_by_extension(n)) for n in range(6)]
    assert by_table == [1, 1, 3, 19, 219]
    assert by_ext == [1, 1, 3, 19, 219, 4231]
    tables = {fp.leq for fp in labeled_posets(4)}
    assert tables == {fp.leq for fp in labeled_posets_by_extension(4)}


def test_finite_scan_small():
    rep = finite_reversibility_scan(3)
    assert rep["bad"] == 0
    assert [s["posets"] for s in rep["sizes"]] == [1, 1, 3, 19]


def test_recheck_step():
    before = PartialCondensation(DIV, [(1, 1), (2, 4), (3, 2)])
    assert recheck_step(before, [(6, 8)], OPEN_DOMAIN, DIV) == []
    assert recheck_step(before, [(5, 4)], OPEN_DOMAIN, DIV)
    assert any("open-domain" in f for f in recheck_step(before, [(10, 20)], OPEN_DOMAIN, DIV))
    assert any("bounded" in f for f in recheck_step(before, [(6, 8)], OPEN_BOUNDED, DIV, (None, 4)))
    assert recheck_step(before, [(6, 8)], OPEN_BOUNDED, DIV, (None, 24)) == []


def test_recheck_step_convexity():
    zz = get_structure("zxz")
    before = PartialCondensation(zz, [((0, 1), (1, 1)), ((1, 0), (0, 1))])
    assert recheck_step(before, [((0, 0), (-3, -3))], CONVEX_BOUNDED, zz, ((-4, -4), (3, 3))) == []
    gap = recheck_step(before, [((2, 2), (-3, -3))], CONVEX_BOUNDED, zz, ((-4, -4), (3, 3)))
    assert any("convex" in f for f in gap)


def test_conformance_random_poset_reproducible():
    a = witness_conformance(get_structure("random-poset"), 200, seed=7)
    b = witness_conformance(get_structure("random-poset"), 200, seed=7)
    assert a.ok and a.to_json() == b.to_json()


def test_conformance_divisibility():
    rep = witness_conformance(DIV, 200, seed=1)
    assert rep.ok and rep.checks > 0


@pytest.mark.parametrize("sid", ["finite-sets", "zxz", "half-plane"])
def test_conformance_detects_corrupt_leq(sid):
    rep = witness_conformance(get_structure(sid), 100, seed=3, fault="corrupt-leq")
    assert not rep.ok


def test_conformance_detects_dropped_relation():
    rep = witness_conformance(get_structure("random-poset"), 100, seed=7, fault="drop-relation")
    assert not rep.ok
