from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from booldeg.polynomials import (
    ArityMismatchError,
    MultilinearPoly,
    PolyParseError,
    UnivariatePoly,
    format_poly,
    format_univariate,
    interpolate_multilinear,
    multilinearize_product,
    parse_poly,
)

X1X2 = MultilinearPoly.make(2, {0b11: 1})
PARITY2 = MultilinearPoly.make(2, {0b01: 1, 0b10: 1, 0b11: -2})


def test_interpolate_and2():
    values = [0, 0, 0, 1]  # index = point mask
    assert interpolate_multilinear(2, values) == X1X2


def test_interpolate_parity2():
    values = [0, 1, 1, 0]
    assert interpolate_multilinear(2, values) == PARITY2


def test_interpolate_constant_one():
    p = interpolate_multilinear(2, [1, 1, 1, 1])
    assert p == MultilinearPoly.constant(2, 1)


def test_interpolate_wrong_size():
    with pytest.raises(ArityMismatchError):
        interpolate_multilinear(2, [0, 1, 1])
    with pytest.raises(ArityMismatchError):
        interpolate_multilinear(2, {0: 0, 1: 1, 2: 0})


def test_evaluate_examples():
    assert X1X2.evaluate(0b11) == 1
    assert PARITY2.evaluate(0b11) == 0
    two_minus = parse_poly("2 - x1 - x2")
    assert two_minus.evaluate(0b10) == 1  # x = 01 means x1=0, x2=1


def test_restrict_examples():
    assert X1X2.restrict({1: 1}) == MultilinearPoly.make(1, {0b1: 1})
    assert X1X2.restrict({1: 0}).is_zero()
    r = parse_poly("2 - x1 - x2").restrict({2: 1})
    assert r == parse_poly("1 - x1", arity=1)


def test_restrict_bad_index():
    with pytest.raises(ValueError):
        X1X2.restrict({3: 0})


def test_degree_examples():
    assert X1X2.degree() == 2
    assert MultilinearPoly.zero(3).degree() == 0
    assert parse_poly("2 - x1 - x2").degree() == 1


def test_maxonomials_examples():
    assert X1X2.maxonomials() == [0b11]
    assert parse_poly("x1 + x2").maxonomials() == [0b01, 0b10]
    p = parse_poly("1 + x1 + x1 x2 + x1 x3")
    assert p.maxonomials() == [0b011, 0b101]
    with pytest.raises(ValueError):
        MultilinearPoly.zero(2).maxonomials()


def test_multilinearize_examples():
    x1 = MultilinearPoly.variable(1, 1)
    assert multilinearize_product(x1, x1) == x1
    one_minus = MultilinearPoly.make(1, {0: 1, 1: -1})
    assert multilinearize_product(x1, one_minus).is_zero()
    s = parse_poly("x1 + x2")
    assert multilinearize_product(s, s) == parse_poly("x1 + x2 + 2 x1 x2")


def test_multilinearize_arity_mismatch():
    with pytest.raises(ArityMismatchError):
        multilinearize_product(MultilinearPoly.variable(1, 1), X1X2)


# --- text format ------------------------------------------------------------

def test_parse_whitespace_and_fractions():
    p = parse_poly("  3/2   x1\tx2 -  1 ")
    assert p == MultilinearPoly.make(2, {0b11: Fraction(3, 2), 0: -1})


def test_parse_rejects_repeated_variable():
    with pytest.raises(PolyParseError):
        parse_poly("x1 x1")


def test_parse_rejects_garbage():
    with pytest.raises(PolyParseError):
        parse_poly("x1 + + x2 $")
    with pytest.raises(PolyParseError):
        parse_poly("")


def test_format_round_trip():
    for text in ["2 - x1 - x2", "x1 x2", "0", "-3/2 + x1 x3"]:
        p = parse_poly(text, arity=3)
        assert parse_poly(format_poly(p), arity=3) == p


def test_format_univariate():
    p = UnivariatePoly.make([0, 2, -2])
    assert format_univariate(p) == "2 y - 2 y^2"
    assert format_univariate(UnivariatePoly.make([])) == "0"


# --- properties -------------------------------------------------------------

@st.composite
def multilinear_polys(draw, max_arity=5):
    n = draw(st.integers(1, max_arity))
    nterms = draw(st.integers(0, 6))
    coeffs = {}
    for _ in range(nterms):
        mask = draw(st.integers(0, (1 << n) - 1))
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 4))
        coeffs[mask] = coeffs.get(mask, Fraction(0)) + Fraction(num, den)
    return MultilinearPoly.make(n, coeffs)


@given(multilinear_polys())
@settings(max_examples=150, deadline=None)
def test_interpolation_round_trip(p):
    values = [p.evaluate(x) for x in range(1 << p.arity)]
    assert interpolate_multilinear(p.arity, values) == p


@given(multilinear_polys(), st.data())
@settings(max_examples=150, deadline=None)
def test_restrict_never_raises_degree(p, data):
    k = data.draw(st.integers(0, p.arity))
    indices = data.draw(
        st.lists(st.integers(1, p.arity), min_size=k, max_size=k, unique=True)
    )
    bits = data.draw(st.lists(st.integers(0, 1), min_size=k, max_size=k))
    assert p.restrict(dict(zip(indices, bits))).degree() <= p.degree()


@given(multilinear_polys(max_arity=4), multilinear_polys(max_arity=4))
@settings(max_examples=100, deadline=None)
def test_multilinearize_matches_pointwise_product(p, q):
    if p.arity != q.arity:
        q = MultilinearPoly.make(p.arity, {m: c for m, c in q.coeffs.items()
                                           if m < (1 << p.arity)})
    prod = multilinearize_product(p, q)
    for x in range(1 << p.arity):
        assert prod.evaluate(x) == p.evaluate(x) * q.evaluate(x)


@given(st.integers(1, 4), st.data())
@settings(max_examples=80, deadline=None)
def test_boolean_tables_interpolate_to_boolean_values(n, data):
    table = data.draw(
        st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n)
    )
    p = interpolate_multilinear(n, table)
    assert all(p.evaluate(x) in (0, 1) for x in range(1 << n))


@given(multilinear_polys())
@settings(max_examples=100, deadline=None)
def test_text_format_round_trip(p):
    assert parse_poly(format_poly(p), arity=p.arity) == p
