import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hgx.comodule import (
    check_coaction,
    check_hopf_action,
    check_subgroup_map,
    coinvariants,
    induced_coaction,
    invariants_A_H,
    is_coinvariant,
    regular_coaction,
    same_span,
    transposed_action,
)
from hgx.exactfield import ONE
from hgx.tensorspace import TensorElement


@pytest.mark.parametrize(
    "entry, name, degree",
    [
        ("graded-z3", "deg", 4),
        ("orbit-z4", "act", 4),
        ("tensor-extension", "ext", 3),
        ("plane-sl2", "lin", 3),
        ("plane-slq2", "lin", 3),
        ("sweedler-h4", "reg", 4),
    ],
)
def test_coaction_axioms(ws, entry, name, degree):
    v = check_coaction(ws(entry).coactions[name], degree)
    assert v.ok, v.witness


@pytest.mark.parametrize(
    "entry, name, degree, dim",
    [
        ("graded-z2", "deg", 4, 1),
        ("orbit-z4", "act", 4, 2),
        ("plane-sl2", "lin", 3, 1),
        ("sweedler-h4", "reg", 3, 1),
        ("trunc-poly-z3", "deg", 4, 1),
    ],
)
def test_coinvariant_dimensions(ws, entry, name, degree, dim):
    c = ws(entry).coactions[name]
    B = coinvariants(c, degree)
    assert B.dim == dim
    assert all(is_coinvariant(c, b) for b in B.basis)


def test_coinvariants_form_a_subalgebra(ws):
    c = ws("orbit-z4").coactions["act"]
    B = coinvariants(c, 4).basis
    for x in B:
        for y in B:
            assert is_coinvariant(c, x * y)


def test_regular_coaction_is_the_coproduct(ws):
    H = ws("slq2").structures["SLq"]
    c = regular_coaction(H)
    a = H.pres.gen("a")
    assert c.apply(a).terms == H.delta(a).terms


def test_quantum_subgroup_restriction(ws):
    w = ws("taft-subgroup")
    pi = w.maps["pi"]
    assert check_subgroup_map(pi, 3).ok
    c = induced_coaction(pi.H, pi.Hp, pi, 3)
    assert check_coaction(c, 4).ok
    # coinvariants of the restricted regular coaction
    assert coinvariants(c, 4).dim == 4


def test_other_plane_convention_is_not_a_comodule():
    # with x1 x2 = q x2 x1 the linear SLq coaction does not respect the rule
    from hgx import corpus, dsl

    src = corpus.entry("plane-slq2").source
    assert "x2*x1 -> q*x1*x2" in src
    w = dsl.build(dsl.parse(src.replace("x2*x1 -> q*x1*x2", "x2*x1 -> 1/q*x1*x2")))
    assert not check_coaction(w.coactions["lin"], 3).ok


def test_transposed_action_matches_coinvariants(ws):
    w = ws("graded-z3")
    c = w.coactions["deg"]
    act = transposed_action(c, w.pairings["ev"])
    assert check_hopf_action(act, 3).ok
    inv = invariants_A_H(act, 3)
    co = coinvariants(c, 3)
    assert inv.dim == co.dim and same_span(c.A, inv.basis, co.basis)


@given(st.lists(st.sampled_from(["x1", "x2"]), max_size=4))
@settings(max_examples=30, deadline=None)
def test_coaction_is_multiplicative(word):
    from conftest import workspace
    from hgx.tensorspace import tensor_mul

    c = workspace("plane-slq2").coactions["lin"]
    A = c.A
    polys = [A.gen(g) for g in word]
    prod = A.one()
    for p in polys:
        prod = prod * p
    image = c.apply(prod)
    acc = None
    for p in polys:
        t = c.apply(p)
        acc = t if acc is None else tensor_mul(acc, t)
    if acc is None:
        acc = TensorElement(image.legs, {((), ()): ONE})
    assert image == acc
