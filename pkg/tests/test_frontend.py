import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewpbw import families
from skewpbw.elements import Element
from skewpbw.errors import IllegalExponent, ParseError, PresentationError, QMatrixInvalid
from skewpbw.exponents import lex_order, make_matrix_order
from skewpbw.frontend import (
    format_element,
    order_from_spec,
    parse_coefficient,
    parse_element,
    parse_presentation,
    presentation_to_dict,
)

from strategies import FAMILIES, elements, family_names

PLANE_DOC = {"n": 2, "field": {"kind": "Qt", "params": ["t1"]}, "q": [["1", "t1"], ["1/t1", "1"]]}


def test_parse_plane_document():
    p = parse_presentation(json.dumps(PLANE_DOC))
    assert p.quasi_commutative and p.n == 2


def test_bad_q_located():
    doc = dict(PLANE_DOC, q=[["1", "t1"], ["t1", "1"]])
    with pytest.raises(QMatrixInvalid) as info:
        parse_presentation(json.dumps(doc))
    assert info.value.field == "q[2][1]"


def test_weyl_document():
    doc = {"n": 1, "field": {"kind": "Qt", "params": ["t"]}, "delta": [{"t": "1"}]}
    assert not parse_presentation(json.dumps(doc)).quasi_commutative


def test_document_errors_carry_locations():
    with pytest.raises(ParseError) as info:
        parse_presentation('{"n": 2,\n "q": }')
    assert "line 2" in str(info.value)
    with pytest.raises(PresentationError) as info:
        parse_presentation(json.dumps(dict(PLANE_DOC, q=[["1", "t1+"], ["1/t1", "1"]])))
    assert info.value.field == "q[1][2]"
    with pytest.raises(PresentationError) as info:
        parse_presentation(json.dumps(dict(PLANE_DOC, lower_terms={"2,1": "x1*x2"})))
    assert info.value.field == "lower_terms[2,1]"


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_presentation_round_trip(name):
    p = FAMILIES[name]
    back = parse_presentation(json.dumps(presentation_to_dict(p)))
    assert back == p


def test_parse_element_examples():
    p = families.quantum_plane()
    q = p.field.param(0)
    assert parse_element("x2*x1", p).terms == {(1, 1): q}
    assert parse_element("x1 - x1", p) == 0
    line = families.quantum_space(2, p.field)
    f = parse_element("(1 + x1)^2", line)
    assert f.terms == {(0, 0): 1, (1, 0): 2, (2, 0): 1}


def test_parse_element_errors():
    p = families.quantum_plane()
    with pytest.raises(ParseError):
        parse_element("x3", p)
    with pytest.raises(ParseError):
        parse_element("x1 +", p)
    with pytest.raises(ParseError):
        parse_element("x1 / x2", p)
    with pytest.raises(IllegalExponent):
        parse_element("x1^-1", p)
    with pytest.raises(ParseError):
        parse_element("s*x1", p)
    torus = families.quantum_torus(2)
    assert parse_element("x1^-1*x1", torus) == 1


def test_coefficient_literals():
    K = FAMILIES["plane/Q(t)"].field
    t = K.param(0)
    assert parse_coefficient("3/4", K) == K.convert(3) / 4
    assert parse_coefficient("(t^2 - 1)/(t + 1)", K) == t - 1


def test_printing_is_descending():
    p = families.quantum_plane()
    f = parse_element("1 + x2 + x1", p)
    assert format_element(f) == "x1 + x2 + 1"
    assert format_element(f, make_matrix_order([[0, 1], [1, 0]])) == "x2 + x1 + 1"
    assert format_element(Element(p)) == "0"


def test_order_specs(monkeypatch):
    assert order_from_spec("lex", 2) == lex_order(2)
    assert order_from_spec("lex3") == lex_order(3)
    assert order_from_spec("[[1,1],[0,1]]").kind == "unimodular"
    assert order_from_spec({"matrix": [["1", "1/2"], ["0", "1"]]}).kind == "general"
    monkeypatch.setenv("SKEWPBW_ORDER", "[[0,1],[1,0]]")
    assert order_from_spec(None, 2).matrix[0][1] == 1


@given(st.data())
def test_round_trip(data):
    p = FAMILIES[data.draw(family_names)]
    f = data.draw(elements(p))
    text = format_element(f)
    assert parse_element(text, p) == f
    assert format_element(parse_element(text, p)) == text


@given(st.data())
def test_printing_is_injective(data):
    p = FAMILIES[data.draw(family_names)]
    f, g = data.draw(elements(p)), data.draw(elements(p))
    assert (format_element(f) == format_element(g)) == (f == g)
