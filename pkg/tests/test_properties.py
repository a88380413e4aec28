from hypothesis import given, settings
from hypothesis import strategies as st

from revcond.order import FinitePoset, down_closure, levels
from revcond.structures import get_structure
from revcond.structures.random_poset import RandomPosetState

IDS = ["divisibility", "finite-sets", "fn-omega", "fin-support", "half-plane", "zxz", "qxq",
       "level-restricted(even)", "product(divisibility,z)"]
STRUCTS = {sid: get_structure(sid) for sid in IDS}


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(IDS), st.integers(0, 1000))
def test_enumeration_round_trip(sid, n):
    s = STRUCTS[sid]
    x = s.enumerate(n)
    assert s.index_of(x) == n
    assert s.parse(s.encode(x)) == x


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(IDS), st.lists(st.integers(0, 59), min_size=3, max_size=3))
def test_order_axioms_on_early_elements(sid, idx):
    s = STRUCTS[sid]
    x, y, z = (s.enumerate(i) for i in idx)
    assert s.leq(x, x)
    if s.leq(x, y) and s.leq(y, x):
        assert x == y
    if s.leq(x, y) and s.leq(y, z):
        assert s.leq(x, z)


def test_order_axioms_exhaustive_prefix():
    for sid in IDS:
        s = STRUCTS[sid]
        fp = FinitePoset.from_structure(s, [s.enumerate(i) for i in range(60)])
        assert fp.violations() == [], sid


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.sets(st.integers(0, 30), max_size=3),
                          st.sets(st.integers(0, 30), max_size=3),
                          st.sets(st.integers(0, 30), max_size=3)), max_size=40))
def test_random_poset_stays_strict_order(requests):
    state = RandomPosetState()
    for L, G, U in requests:
        n = len(state)
        L, G, U = ({v for v in S if v < n} for S in (L, G, U))
        try:
            state.check_triple(L, G, U)
        except ValueError:
            continue
        p = state.witness(L, G, U)
        assert all(state.lt(l, p) for l in L)
        assert all(state.lt(p, g) for g in G)
        assert all(not state.leq(u, p) and not state.leq(p, u) for u in U)
    assert state.violations() == []


def test_fn_level_formula():
    fn = STRUCTS["fn-omega"]
    frag = down_closure(fn, [fn.enumerate(i) for i in range(120)])
    assert len(frag) >= 100
    dec = levels(FinitePoset.from_structure(fn, frag))
    mismatches = [f for f in frag if dec.height[f] != len(f) + sum(v for _, v in f)]
    assert mismatches == []
