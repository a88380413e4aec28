from hypothesis import given, settings
from hypothesis import strategies as st

from revcond.condensation import (
    BadWitness,
    PartialCondensation,
    find_bad_witness,
    is_extension,
    verify_partial_condensation,
)
from revcond.structures import get_structure

DIV = get_structure("divisibility")
ZZ = get_structure("zxz")


def pc(s, pairs):
    return PartialCondensation(s, pairs)


def test_verify_examples():
    assert verify_partial_condensation(pc(DIV, [])) == []
    assert verify_partial_condensation(pc(DIV, [(1, 1), (2, 4), (3, 2)])) == []
    bad = verify_partial_condensation(pc(DIV, [(2, 3), (4, 5)]))
    assert [v.invariant for v in bad] == ["homomorphism"]


def test_verify_functional_and_injective():
    names = {v.invariant for v in verify_partial_condensation(pc(DIV, [(2, 4), (3, 4)]))}
    assert "injective" in names
    names = {v.invariant for v in verify_partial_condensation(pc(DIV, [(2, 4), (2, 8)]))}
    assert "functional" in names


def test_find_bad_witness_examples():
    assert find_bad_witness(pc(DIV, [(1, 1), (2, 4), (3, 2)])) == BadWitness(3, 2, 2, 4)
    assert find_bad_witness(pc(DIV, [(1, 1), (2, 2), (3, 3)])) is None
    w = find_bad_witness(pc(ZZ, [((0, 1), (1, 1)), ((1, 0), (0, 1))]))
    assert (w.x1, w.x2) == ((1, 0), (0, 1))
    assert w.holds_in(ZZ)
    assert BadWitness.from_json(ZZ, w.to_json(ZZ)) == w


def test_is_extension_examples():
    big = pc(DIV, [(2, 4), (3, 2)])
    assert is_extension(pc(DIV, []), big)
    assert is_extension(pc(DIV, [(2, 4)]), big)
    assert not is_extension(pc(DIV, [(2, 4)]), pc(DIV, [(2, 6)]))


def test_json_round_trip():
    m = pc(get_structure("finite-sets"), [(frozenset(), frozenset()), (frozenset({0}), frozenset({0, 1}))])
    assert PartialCondensation.from_json(m.structure, m.to_json()) == m


def _double_loop(m):
    # independent route: scan all ordered pairs in index order
    s = m.structure
    xs = sorted(m.dom, key=s.index_of)
    for x1 in xs:
        for x2 in xs:
            if x1 != x2 and not s.leq(x1, x2) and s.leq(m(x1), m(x2)):
                return (x1, x2)
    return None


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 60), st.integers(1, 60)), max_size=8))
def test_find_bad_witness_matches_double_loop(raw):
    seen_x, seen_y, pairs = set(), set(), []
    for x, y in raw:
        if x not in seen_x and y not in seen_y:
            pairs.append((x, y))
            seen_x.add(x)
            seen_y.add(y)
    m = pc(DIV, pairs)
    w = find_bad_witness(m)
    expect = _double_loop(m)
    assert (None if w is None else (w.x1, w.x2)) == expect


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 40), unique=True, min_size=1, max_size=6), st.data())
def test_restriction_stays_a_partial_condensation(dom, data):
    # multiplication by a constant is an order embedding of divisibility
    k = data.draw(st.integers(1, 7))
    m = pc(DIV, [(x, k * x) for x in dom])
    assert verify_partial_condensation(m) == []
    sub = data.draw(st.lists(st.sampled_from(dom), unique=True))
    r = m.restrict(sub)
    assert verify_partial_condensation(r) == []
    assert is_extension(r, m)
