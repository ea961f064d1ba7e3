import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewpbw import families
from skewpbw.completion import (
    HahnSeries,
    conjecture_check,
    m_power_membership,
    m_power_witness,
    monomial_witness,
    series_invert,
    series_mul,
)
from skewpbw.coeffs import QQ
from skewpbw.elements import Element, mul
from skewpbw.errors import NotQuasiCommutative, UnknownLeadingTerm, ZeroSeries
from skewpbw.exponents import lex_order, make_matrix_order

from strategies import coefficients, elements

LEX2 = lex_order(2)
TORUS = families.quantum_torus(2)
q = TORUS.field.param(0)
TQ = families.quantum_torus(2, QQ, {(0, 1): 3})


def s(ring, terms, bound=None, order=LEX2):
    return HahnSeries(ring, order, terms, bound)


def x(i, k=1, ring=TORUS):
    return Element.gen(ring, i, k)


def test_commutative_slice_product():
    f = s(TORUS, {(0, 0): 1, (1, 0): 1})
    g = s(TORUS, {(0, 0): 1, (1, 0): -1})
    assert series_mul(f, g).terms == {(0, 0): 1, (2, 0): -1}


def test_product_twist():
    a, b = s(TORUS, {(1, 0): 1}), s(TORUS, {(0, 1): 1})
    assert series_mul(b, a).terms == {(1, 1): q}
    assert series_mul(a, b).terms == {(1, 1): 1}


def test_bound_propagation():
    f = s(TORUS, {(0, 0): 1, (1, 0): 2}, bound=(2, 0))
    g = s(TORUS, {(0, 0): 3, (0, 5): 1}, bound=(2, 0))
    assert series_mul(f, g).bound == (2, 0)


def test_needs_torus():
    with pytest.raises(NotQuasiCommutative):
        HahnSeries(families.quantum_weyl(), LEX2)


def test_invert_geometric():
    f = s(TORUS, {(0, 0): 1, (1, 0): -1})
    inv = series_invert(f, (4, 0))
    assert inv.series.terms == {(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1}
    assert inv.reached_target


def test_invert_monomial_and_binomial():
    inv = series_invert(s(TORUS, {(1, 0): 1}), (3, 0)).series
    assert inv.terms == {(-1, 0): 1}
    f = s(TORUS, {(1, 0): 1, (0, 1): 1})
    inv = series_invert(f, (3, 0))
    assert inv.reached_target
    prod = series_mul(f, inv.series)
    assert prod.equal_below(HahnSeries.one(TORUS, LEX2), (3, 0))


def test_invert_errors():
    with pytest.raises(ZeroSeries):
        series_invert(s(TORUS, {}), (1, 0))
    with pytest.raises(UnknownLeadingTerm):
        series_invert(s(TORUS, {(5, 0): 1}, bound=(1, 0)), (3, 0))


def test_non_archimedean_direction_is_reported():
    f = s(TORUS, {(0, 0): 1, (0, 1): 1})
    inv = series_invert(f, (3, 0), fallback_terms=8)
    assert not inv.reached_target
    assert inv.notes
    assert series_mul(f, inv.series).equal_below(HahnSeries.one(TORUS, LEX2), inv.series.bound)


def test_membership_examples():
    for n in range(1, 40):
        assert m_power_membership(x(1), n, LEX2)
    assert not m_power_membership(x(1) + 1, 1, LEX2)
    assert m_power_membership(x(2, 2), 2, LEX2)
    assert not m_power_membership(x(2, 2), 3, LEX2)


def test_rank_one_exclusions():
    line = families.quantum_torus(1, QQ)
    lex1 = lex_order(1)
    assert not m_power_membership(Element.gen(line, 1, 5), 6, lex1)
    assert m_power_membership(Element.gen(line, 1, 5), 5, lex1)
    assert not m_power_membership(Element.const(line, 1), 1, lex1)


def test_conjecture_lex2():
    v = conjecture_check(LEX2, 100)
    assert v.kind == "witness" and v.witness == (1, 0)
    assert v.min_positive == (0, 1)
    assert v.min_elements == [(0, i) for i in range(1, 101)]
    one = TORUS.field.one()
    for i, parts, unit in v.factorizations:
        assert parts[0] == (1, -(i - 1)) and parts[1:] == [(0, 1)] * (i - 1)
        prod = Element(TORUS, {parts[0]: one})
        for e in parts[1:]:
            prod = prod * Element(TORUS, {e: one})
        assert prod == Element(TORUS, {(1, 0): unit})


def test_conjecture_rank_one_and_unimodular():
    assert conjecture_check(lex_order(1), 100).kind == "intersection_trivial"
    order = make_matrix_order([[1, 1], [0, 1]])
    v = conjecture_check(order, 50)
    assert v.kind == "witness"
    assert order.key(v.witness) == (1, 0)


def test_conjecture_witness_is_stable_in_depth():
    assert {conjecture_check(LEX2, d).witness for d in (1, 5, 20)} == {(1, 0)}


def test_monomial_witness_product():
    parts, factors, unit = monomial_witness((2, -3), 4, TORUS, LEX2)
    prod = factors[0]
    for fac in factors[1:]:
        prod = mul(prod, fac)
    assert prod == Element(TORUS, {(2, -3): unit})


@given(st.data())
def test_witness_factors_multiply_back(data):
    f = data.draw(elements(TORUS, nonzero=True))
    i = data.draw(st.integers(1, 5))
    if m_power_membership(f, i, LEX2):
        factors = m_power_witness(f, i, LEX2)
        prod = factors[0]
        for fac in factors[1:]:
            prod = prod * fac
        assert prod == f
        assert all(m_power_membership(fac, 1, LEX2) for fac in factors)


@given(st.data())
def test_series_ring_laws_below_bound(data):
    def series():
        f = data.draw(elements(TQ, max_degree=3))
        b = data.draw(st.tuples(st.integers(1, 4), st.integers(-3, 3)))
        return HahnSeries.from_element(f, LEX2).truncate(b)

    f, g, h = series(), series(), series()
    left = series_mul(series_mul(f, g), h)
    right = series_mul(f, series_mul(g, h))
    assert left.equal_below(right, _meet(left.bound, right.bound))
    left = series_mul(f, g + h)
    right = series_mul(f, g) + series_mul(f, h)
    assert left.equal_below(right, _meet(left.bound, right.bound))


def _meet(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b, key=LEX2.key)


@given(st.data())
def test_inverse_contract(data):
    c = data.draw(coefficients(TQ.field, nonzero=True))
    tail = {}
    for _ in range(data.draw(st.integers(0, 3))):
        e = (data.draw(st.integers(1, 3)), data.draw(st.integers(-3, 3)))
        tail[e] = data.draw(coefficients(TQ.field, nonzero=True))
    m = (data.draw(st.integers(-2, 2)), data.draw(st.integers(-2, 2)))
    f = HahnSeries(TQ, LEX2, {m: c, **{(m[0] + a, m[1] + b): v for (a, b), v in tail.items()}})
    inv = series_invert(f, (3, 0))
    assert inv.reached_target
    assert series_mul(f, inv.series).equal_below(HahnSeries.one(TQ, LEX2), (3, 0))
