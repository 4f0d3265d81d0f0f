import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hgx import corpus
from hgx.dsl import DslError, build, parse, parse_expression, pretty, specialize
from hgx.exactfield import ONE, Q, Scalar
from hgx.presentation import Presentation

HEADER = "scalars QIQ\n"


def error_of(text):
    with pytest.raises(DslError) as info:
        build(parse(text))
    return info.value


def test_missing_header():
    e = error_of("algebra A { gens x }")
    assert e.line == 1 and "scalars" in e.message


def test_error_positions_point_at_the_token():
    e = error_of(HEADER + "algebra A {\n  gens x y\n  rules y*x -> q*z\n}")
    assert (e.line, e.col) == (4, 18) and "z" in str(e)


def test_reserved_names():
    assert error_of(HEADER + "algebra A { gens q }").line == 2
    e = error_of(HEADER + "algebra map { gens x }")
    assert e.line == 2


def test_unknown_block_reference():
    e = error_of(HEADER + "algebra A { gens x }\ncoaction c {\n  source A hopf B\n  regular\n}")
    assert e.line >= 3


def test_non_decreasing_rule_reported():
    e = error_of(HEADER + "algebra A {\n  gens x y\n  rules x*y -> y*x\n}")
    assert "non-decreasing" in str(e)


@pytest.mark.parametrize("name", corpus.names())
def test_pretty_round_trip(name):
    doc = parse(corpus.entry(name).source)
    again = parse(pretty(doc))
    assert again == doc
    assert pretty(again) == pretty(doc)


def test_specialize_sets_q():
    doc = parse(corpus.entry("slq2").source)
    classical = specialize(doc, 1)
    assert classical == parse(pretty(classical))
    assert not re.search(r"\bq\b", pretty(classical))
    ws = build(classical)
    P = ws.presentations["SLq"]
    a, b = P.gen("a"), P.gen("b")
    assert b * a == a * b


def test_specialize_at_a_pole():
    doc = parse(corpus.entry("slq2").source)
    with pytest.raises(DslError, match="cannot set q = 0"):
        specialize(doc, 0)


def test_parse_expression_arity():
    P = Presentation(["x", "y"], [((1, 0), {(0, 1): Q})])
    one = parse_expression("y*x", [P])
    assert one == {((0, 1),): Q}
    two = parse_expression("x (x) y - 2", [P, P])
    assert two == {((0,), (1,)): ONE, ((), ()): Scalar.of(-2)}
    scalar_only = parse_expression("(q + i)/2", [])
    assert scalar_only == {(): (Q + Scalar.of((0, 1, 1))) / 2}


coefficients = st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 4), st.integers(-2, 2))
words = st.lists(st.integers(0, 1), max_size=3).map(tuple)


@given(st.dictionaries(words, coefficients, max_size=4))
@settings(max_examples=60, deadline=None)
def test_polynomial_text_round_trip(raw):
    P = Presentation(["x", "y"], [((1, 0), {(0, 1): Q})])
    terms = {}
    for w, (re, im, den, k) in raw.items():
        c = Scalar.of((re, im, den)) * Q**k
        for u, a in P.nf_word(w).items():
            terms[u] = terms.get(u, 0 * ONE) + c * a
    p = P.poly(terms)
    text = P.poly_text(p.terms)
    back = parse_expression(text, [P])
    assert P.poly({k[0]: v for k, v in back.items()}) == p
