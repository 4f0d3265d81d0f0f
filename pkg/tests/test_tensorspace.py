import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hgx.exactfield import ONE, Q
from hgx.presentation import Presentation
from hgx.tensorspace import TensorElement, TensorError, balanced_quotient, switch, tensor_mul, tensor_unit

PLANE = Presentation(["x", "y"], [((1, 0), {(0, 1): Q})], name="plane")
EXTERIOR = Presentation(["u"], [((0, 0), {})], name="ext")

words = st.lists(st.integers(min_value=0, max_value=1), max_size=3).map(tuple)


@st.composite
def tensors(draw, legs=(PLANE, PLANE, EXTERIOR)):
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=3))):
        key = (
            PLANE.word(draw(words)),
            PLANE.word(draw(words)),
            EXTERIOR.word(draw(st.sampled_from([(), (0,)]))),
        )
        part = TensorElement.pure(*key)
        c = draw(st.integers(min_value=-3, max_value=3))
        for k, v in part.terms.items():
            terms[k] = terms.get(k, 0 * ONE) + c * v
    return TensorElement(legs, terms)


@given(tensors())
@settings(max_examples=50, deadline=None)
def test_switch_is_an_involution(t):
    assert t.switch(1, 2).switch(1, 2) == t
    assert switch(switch(t, 1, 3), 1, 3) == t


@given(tensors(), tensors(), tensors())
@settings(max_examples=40, deadline=None)
def test_componentwise_product_associative(r, s, t):
    assert tensor_mul(tensor_mul(r, s), t) == tensor_mul(r, tensor_mul(s, t))


@given(tensors())
@settings(max_examples=30, deadline=None)
def test_unit_and_linearity(t):
    one = tensor_unit(t.legs)
    assert tensor_mul(one, t) == t == tensor_mul(t, one)
    assert (t + t) - t.scale(2) == TensorElement(t.legs)


def test_pure_tensor_and_contraction():
    x, y = PLANE.gen("x"), PLANE.gen("y")
    t = TensorElement.pure(y, x)
    assert t.contract(1).to_poly() == Q * (x * y)
    assert str(TensorElement.pure(x + y, y)).count("(x)") == 2


def test_arity_mismatch():
    a = TensorElement.pure(PLANE.gen("x"))
    b = TensorElement.pure(PLANE.gen("x"), PLANE.gen("y"))
    with pytest.raises(TensorError):
        a + b
    with pytest.raises(TensorError):
        switch(b, 2, 1)


def test_balanced_dimensions_over_subalgebras(ws):
    # H4 is free of rank 2 over the group algebra of its grouplike
    A = ws("sweedler-h4").presentations["H4"]
    assert balanced_quotient(A, [A.one()], 4).dim == 16
    assert balanced_quotient(A, [A.gen("g")], 4).dim == 8
    assert balanced_quotient(A, [A.gen("g"), A.gen("x")], 4).dim == 4


def test_balanced_projection_moves_scalars_across():
    A = EXTERIOR
    bs = balanced_quotient(A, [A.gen("u")], 2)
    # u (x) 1 and 1 (x) u agree in the quotient
    left = bs.project({((0,), ()): ONE})
    right = bs.project({((), (0,)): ONE})
    assert left == right and bs.dim == 2
