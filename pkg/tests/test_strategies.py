import pytest

from revcond.condensation import find_bad_witness, verify_partial_condensation
from revcond.engine import run_generic, verify_certificate
from revcond.errors import IncompatibleError, PreconditionError, SeedError
from revcond.strategies import default_seed, make_strategy, product_lift, subset_lift
from revcond.structures import get_structure


def encoded(m):
    return {tuple(p) for p in m.to_json()}


def test_default_seeds():
    div = get_structure("divisibility")
    assert encoded(default_seed(div, "well-founded")) == {("1", "1"), ("2", "4"), ("3", "2")}
    fs = get_structure("finite-sets")
    assert encoded(default_seed(fs, "rooted-directed")) == {
        ("{}", "{}"), ("{0}", "{0,1}"), ("{1}", "{0}")}
    zz = get_structure("zxz")
    assert encoded(default_seed(zz, "convex")) == {("(0,1)", "(1,1)"), ("(1,0)", "(0,1)")}


def test_seed_spec_override_and_errors():
    div = get_structure("divisibility")
    st = make_strategy(div, "well-founded", {"a0": "5", "a1": "7", "b0": "10"})
    assert encoded(st.seed) == {("1", "1"), ("5", "10"), ("7", "5")}
    with pytest.raises(SeedError):
        make_strategy(div, "well-founded", {"zz": "5"})
    with pytest.raises(SeedError):
        make_strategy(div, "well-founded", {"a0": "2", "a1": "3", "b0": "2"})
    with pytest.raises(IncompatibleError):
        make_strategy(div, "convex")


def test_wellfounded_steps():
    div = get_structure("divisibility")
    st = make_strategy(div, "well-founded")
    assert st.extend_dom(st.seed, 6).added == [(6, 8)]
    assert st.extend_ran(st.seed, 3).added == [(5, 3)]
    with pytest.raises(PreconditionError):
        st.extend_ran(st.seed, 4)
    fs = get_structure("finite-sets")
    st = make_strategy(fs, "well-founded")
    assert st.extend_dom(st.seed, frozenset({0, 1})).added == [
        (frozenset({0, 1}), frozenset({0, 1, 2}))]
    (a, b), = st.extend_ran(st.seed, frozenset({2})).added
    assert len(a) == 1 and b == frozenset({2})


def test_rooted_steps_keep_bound():
    fs = get_structure("finite-sets")
    st = make_strategy(fs, "rooted-directed")
    assert st.bounds() == {"q": "{0,1}"}
    res = st.extend_dom(st.seed, frozenset({2}))
    phi = st.seed.extend(res.added)
    q = fs.parse(res.bounds["q"])
    assert all(fs.leq(z, q) for z in set(phi.dom) | set(phi.ran))
    assert not verify_partial_condensation(phi)
    (a, b), = st.extend_ran(phi, frozenset({0, 2})).added
    assert len(a) == 1 and not fs.leq(a, q)


def test_convex_steps():
    zz = get_structure("zxz")
    st = make_strategy(zz, "convex")
    assert st.bounds() == {"p": "(-1,-1)", "q": "(2,2)"}
    res = st.extend_dom(st.seed, (0, 0))
    (a, b), = res.added
    assert a == (0, 0) and zz.leq(b, (-1, -1))
    st = make_strategy(zz, "convex")
    assert st.extend_ran(st.seed, (5, 5)).added == [((-2, 3), (5, 5))]
    with pytest.raises(PreconditionError):
        st.extend_ran(st.seed, (1, 1))


def test_universal_steps_keep_witness():
    rp = get_structure("random-poset")
    st = make_strategy(rp, "universal")
    cert = run_generic(st, 40)
    assert verify_certificate(cert).ok
    final = cert.final_map()
    assert set(st.seed.pairs) <= set(final.pairs)
    assert cert.witness().holds_in(cert.build_structure())


def test_run_generic_examples():
    div = get_structure("divisibility")
    cert = run_generic(make_strategy(div, "well-founded"), 4)
    final = cert.final_map(div)
    dom, ran = set(final.dom), set(final.ran)
    assert {1, 2, 3, 4} <= dom and {1, 2, 4} <= ran
    assert [s["kind"] for s in cert.steps] == ["dom", "ran", "dom", "ran"]
    seed_only = run_generic(make_strategy(div, "well-founded"), 0)
    assert seed_only.steps == [] and seed_only.final == seed_only.seed
    zz = get_structure("zxz")
    cert = run_generic(make_strategy(zz, "convex"), 2)
    assert (0, 0) in set(cert.final_map(zz).dom)
    assert verify_certificate(cert).ok


def test_product_lift_examples():
    div = get_structure("divisibility")
    src = run_generic(make_strategy(div, "well-founded"), 40)
    lifted = product_lift(src, ["z"], 200)
    f = dict(lifted.final_map().pairs)
    assert f[(2, 5)] == (4, 5) and f[(3, -1)] == (2, -1)
    w = lifted.witness()
    assert (w.x1, w.x2, w.y1, w.y2) == ((3, 0), (2, 0), (2, 0), (4, 0))
    assert verify_certificate(lifted).ok


def test_product_lift_rejects_identity():
    z = get_structure("zxz")
    from revcond.certificate import Certificate
    src = run_generic(make_strategy(z, "convex"), 4)
    data = src.to_json()
    data["seed"] = [["(0,0)", "(0,0)"], ["(1,1)", "(1,1)"]]
    data["bad_witness"] = {"x1": "(0,0)", "x2": "(1,1)", "y1": "(0,0)", "y2": "(1,1)"}
    with pytest.raises(SeedError):
        product_lift(Certificate.from_json(data), ["z"], 50)


def test_subset_lift_examples():
    fs = get_structure("finite-sets")
    src = run_generic(make_strategy(fs, "well-founded"), 200)
    lifted = subset_lift(src, "even", 128)
    F = dict(lifted.final_map().pairs)
    evens_only = {a: b for a, b in F.items() if all(x % 2 == 0 for x in a)}
    A = frozenset({0, 1, 2})
    assert F[A] == F[frozenset({0, 2})] | {1}
    assert F[frozenset({0, 2})] == evens_only[frozenset({0, 2})]
    for a, b in F.items():
        if all(x % 2 for x in a):
            assert a == b
    assert find_bad_witness(lifted.final_map()) is not None
    assert verify_certificate(lifted).ok
